#include <doctest.h>

#include "gvkit/k3hilb.hpp"
#include "oracles.hpp"

using namespace gvkit;

namespace {

TruncatedSeries bichar_mono(int el, int er, int c) {
    VariableContext ctx({VariableSpec::laurent(k3::kTL), VariableSpec::laurent(k3::kTR)});
    return TruncatedSeries::monomial(ctx, {{k3::kTL, el}, {k3::kTR, er}}, c);
}

/* The K3 character with doubled weights, i.e. chi(tL^2, tR^2) — the
 * Adams-operation input of the symmetric-square formula. */
TruncatedSeries k3_character_squared_weights() {
    return bichar_mono(2, 2, 1) + bichar_mono(-2, 2, 1) + bichar_mono(2, -2, 1) +
           bichar_mono(-2, -2, 1) + bichar_mono(0, 0, 20);
}

}  // namespace

TEST_CASE("k3_character: dimension, decomposition, trace") {
    auto chi = k3::k3_character();
    CHECK(sl2::dimension(chi) == 24);

    auto entries = sl2::bi_decompose(chi, k3::kTL, k3::kTR);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].left.twice_spin == 1);
    CHECK(entries[0].right.twice_spin == 1);
    CHECK(entries[0].multiplicity == 1);
    CHECK(entries[1].left.twice_spin == 0);
    CHECK(entries[1].multiplicity == 20);

    auto traced = sl2::tr_minus_one(chi, k3::kTR);
    VariableContext tl({VariableSpec::laurent(k3::kTL)});
    auto expected = TruncatedSeries::monomial(tl, {{k3::kTL, 1}}, -2) +
                    TruncatedSeries::monomial(tl, {{k3::kTL, -1}}, -2) +
                    TruncatedSeries::constant(tl, 20);
    CHECK(traced == expected);
}

TEST_CASE("sym_product_series: low coefficients") {
    auto sym = k3::sym_product_series(2);
    CHECK(coefficient_of(sym, k3::kQ, 0) ==
          TruncatedSeries::constant(VariableContext{}, 1));
    CHECK(coefficient_of(sym, k3::kQ, 1) == k3::k3_character());

    // Symmetric square via the plethysm formula (chi^2 + chi(t^2))/2.
    auto chi = k3::k3_character();
    auto sym2 = Rational(1, 2) * (chi * chi + k3_character_squared_weights());
    CHECK(coefficient_of(sym, k3::kQ, 2) == sym2);
}

TEST_CASE("hilb_series: low coefficients and Euler numbers") {
    auto hilb = k3::hilb_series(3);
    CHECK(coefficient_of(hilb, k3::kQ, 1) == k3::k3_character());
    CHECK(sl2::dimension(coefficient_of(hilb, k3::kQ, 2)) ==
          Integer(testing::colored_partition_count(2, 24)));
    CHECK(sl2::dimension(coefficient_of(hilb, k3::kQ, 3)) ==
          Integer(testing::colored_partition_count(3, 24)));
    CHECK(sl2::dimension(coefficient_of(hilb, k3::kQ, 2)) == 324);
    CHECK(sl2::dimension(coefficient_of(hilb, k3::kQ, 3)) == 3200);
}

TEST_CASE("property: palindromicity of every coefficient up to k = 5") {
    auto hilb = k3::hilb_series(5);
    auto sym = k3::sym_product_series(5);
    for (int k = 0; k <= 5; ++k) {
        for (const TruncatedSeries* s : {&hilb, &sym}) {
            auto c = coefficient_of(*s, k3::kQ, k);
            CHECK(sl2::is_palindromic(c, k3::kTL));
            CHECK(sl2::is_palindromic(c, k3::kTR));
        }
    }
}

TEST_CASE("gv_table: pinned values and support bound") {
    auto table = k3::gv_table(3);
    CHECK(table.provenance == k3::Provenance::Decomposition);
    CHECK(table.at(0, 1) == 24);
    CHECK(table.at(1, 1) == -2);
    CHECK(table.at(0, 2) == 324);
    for (const auto& [key, n] : table.entries) {
        CHECK(key.second <= key.first);  // n_h(k) = 0 for h > k
    }
    CHECK(k3::gv_table(0).entries.empty());
}

TEST_CASE("kkv_rhs: first slice") {
    auto rhs = k3::kkv_rhs(2);
    auto k1 = coefficient_of(rhs, k3::kQ, 1);
    VariableContext yv({VariableSpec::laurent(k3::kY)});
    auto expected = TruncatedSeries::monomial(yv, {{k3::kY, 1}}, 2) +
                    TruncatedSeries::monomial(yv, {{k3::kY, -1}}, 2) +
                    TruncatedSeries::constant(yv, 20);
    CHECK(k1 == expected);
}

TEST_CASE("kkv_table: pinned values") {
    auto table = k3::kkv_table(2);
    CHECK(table.provenance == k3::Provenance::Kkv);
    CHECK(table.at(0, 1) == 24);
    CHECK(table.at(1, 1) == -2);
    CHECK(table.at(0, 2) == 324);
}

TEST_CASE("verify_kkv: equality of the two pipelines") {
    auto r1 = k3::verify_kkv(1);
    CHECK(r1.equal);
    CHECK(r1.decomposition.at(0, 1) == 24);
    CHECK(r1.decomposition.at(1, 1) == -2);

    auto r3 = k3::verify_kkv(3);
    CHECK(r3.equal);
    CHECK(r3.decomposition.at(0, 1) == 24);
    CHECK(r3.decomposition.at(0, 2) == 324);
    CHECK(r3.decomposition.at(0, 3) == 3200);

    auto r0 = k3::verify_kkv(0);
    CHECK(r0.equal);
    CHECK(r0.decomposition.entries.empty());
    CHECK(r0.kkv.entries.empty());
}

TEST_CASE("property: verify_kkv passes exactly at kmax = 5") {
    auto report = k3::verify_kkv(5);
    CHECK(report.equal);
    CHECK(!report.first_mismatch.has_value());
    // Every reported n_h(k) is matched entry-by-entry as well.
    CHECK(report.decomposition.entries == report.kkv.entries);
}

TEST_CASE("property: gv_table reconstruction is exact") {
    int kmax = 4;
    auto table = k3::gv_table(kmax);
    auto hilb = k3::hilb_series(kmax);
    for (int k = 1; k <= kmax; ++k) {
        auto specialized = sl2::tr_minus_one(coefficient_of(hilb, k3::kQ, k), k3::kTR);
        VariableContext tl({VariableSpec::laurent(k3::kTL)});
        TruncatedSeries rebuilt(tl);
        for (const auto& [key, nh] : table.entries) {
            if (key.first != k) continue;
            rebuilt += Rational(nh) * sl2::jh_basis_character(key.second, k3::kTL);
        }
        CHECK(rebuilt == specialized);
    }
}

TEST_CASE("euler_from_gv: the degree-zero piece carries the Euler number") {
    auto table = k3::gv_table(5);
    CHECK(k3::euler_from_gv(table, 1) == 24);
    for (int k = 1; k <= 5; ++k) {
        CHECK(k3::euler_from_gv(table, k) == table.at(0, k));
        CHECK(k3::euler_from_gv(table, k) ==
              Integer(testing::colored_partition_count(k, 24)));
    }
    CHECK(k3::euler_from_gv(table, 4) == 25650);

    k3::GVTable empty;
    empty.kmax = 2;
    CHECK(k3::euler_from_gv(empty, 2) == 0);
}
