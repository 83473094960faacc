#include "gvkit/k3hilb.hpp"

namespace gvkit::k3 {

namespace {

VariableContext bichar_ctx() {
    return VariableContext({VariableSpec::laurent(kTL), VariableSpec::laurent(kTR)});
}

/* The 24 torus weights of H*(K3): the four corners tL^±1 tR^±1 once each
 * and the weight-zero part with multiplicity 20. */
struct Weight {
    int el;  // exponent of tL
    int er;  // exponent of tR
    int mult;
};

constexpr Weight kK3Weights[] = {
    {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {0, 0, 20},
};

TruncatedSeries weight_monomial(const Weight& w) {
    return TruncatedSeries::monomial(bichar_ctx(), {{kTL, w.el}, {kTR, w.er}}, 1);
}

}  // namespace

TruncatedSeries k3_character() {
    VariableContext ctx = bichar_ctx();
    TruncatedSeries out(ctx);
    for (const Weight& w : kK3Weights) {
        out += Rational(w.mult) * weight_monomial(w);
    }
    return out;
}

TruncatedSeries sym_product_series(int kmax) {
    if (kmax < 0) throw SeriesError("negative truncation order");
    VariableContext qctx = VariableContext({VariableSpec::truncated(kQ, kmax)});
    TruncatedSeries acc = TruncatedSeries::constant(qctx, 1);
    for (const Weight& w : kK3Weights) {
        acc = acc * product_factor(weight_monomial(w), kQ, -w.mult, 1, kmax);
    }
    return acc;
}

TruncatedSeries hilb_series(int kmax) {
    if (kmax < 0) throw SeriesError("negative truncation order");
    VariableContext qctx = VariableContext({VariableSpec::truncated(kQ, kmax)});
    TruncatedSeries acc = TruncatedSeries::constant(qctx, 1);
    for (const Weight& w : kK3Weights) {
        acc = acc * product_factor(weight_monomial(w), kQ, -w.mult, kmax, kmax);
    }
    return acc;
}

GVTable gv_table(int kmax) {
    if (kmax < 0) throw SeriesError("negative kmax");
    GVTable table;
    table.kmax = kmax;
    table.provenance = Provenance::Decomposition;
    if (kmax == 0) return table;
    TruncatedSeries series = hilb_series(kmax);
    for (int k = 1; k <= kmax; ++k) {
        TruncatedSeries specialized = sl2::tr_minus_one(coefficient_of(series, kQ, k), kTR);
        sl2::GVDecomposition dec = sl2::extract_gv(specialized, kTL);
        for (const auto& [h, nh] : dec.n) table.entries[{k, h}] = nh;
    }
    return table;
}

TruncatedSeries kkv_rhs(int kmax) {
    if (kmax < 1) throw SeriesError("kkv_rhs needs kmax >= 1");
    VariableContext yctx = VariableContext({VariableSpec::laurent(kY)});
    TruncatedSeries y = TruncatedSeries::variable(yctx, kY);
    TruncatedSeries y_inv = TruncatedSeries::monomial(yctx, {{kY, -1}}, 1);
    TruncatedSeries one = TruncatedSeries::constant(yctx, 1);
    return product_factor(y, kQ, -2, kmax, kmax) * product_factor(y_inv, kQ, -2, kmax, kmax) *
           product_factor(one, kQ, -20, kmax, kmax);
}

GVTable kkv_table(int kmax) {
    if (kmax < 0) throw SeriesError("negative kmax");
    GVTable table;
    table.kmax = kmax;
    table.provenance = Provenance::Kkv;
    if (kmax == 0) return table;
    TruncatedSeries series = kkv_rhs(kmax);
    TruncatedSeries minus_tl =
        TruncatedSeries::monomial(VariableContext({VariableSpec::laurent(kTL)}), {{kTL, 1}}, -1);
    for (int k = 1; k <= kmax; ++k) {
        TruncatedSeries slice = substitute(coefficient_of(series, kQ, k), kY, minus_tl);
        sl2::GVDecomposition dec = sl2::extract_gv(slice, kTL);
        for (const auto& [h, rh] : dec.n) table.entries[{k, h}] = rh;
    }
    return table;
}

KkvReport verify_kkv(int kmax) {
    KkvReport report;
    report.decomposition = gv_table(kmax);
    report.kkv = kkv_table(kmax);
    report.equal = true;
    for (int k = 1; k <= kmax && report.equal; ++k) {
        for (int h = 0; h <= k; ++h) {
            Integer n = report.decomposition.at(h, k);
            Integer r = report.kkv.at(h, k);
            if (n != r) {
                report.equal = false;
                report.first_mismatch = KkvMismatch{h, k, n, r};
                break;
            }
        }
    }
    return report;
}

Integer euler_from_gv(const GVTable& table, int k) {
    if (k > table.kmax) throw SeriesError("k exceeds the table's kmax");
    Integer acc = 0;
    for (const auto& [key, nh] : table.entries) {
        if (key.first != k) continue;
        TruncatedSeries basis = sl2::jh_basis_character(key.second, kTL);
        acc += nh * to_integer(substitute(basis, kTL, Rational(-1)).constant_term());
    }
    return acc;
}

}  // namespace gvkit::k3
