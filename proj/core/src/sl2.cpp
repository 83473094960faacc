#include "gvkit/sl2.hpp"

namespace gvkit::sl2 {

namespace {

VariableContext laurent_ctx(const std::string& var) {
    return VariableContext({VariableSpec::laurent(var)});
}

Integer integer_coefficient(const TruncatedSeries& s, const std::string& var, int k) {
    return to_integer(s.coefficient({{var, k}}));
}

}  // namespace

TruncatedSeries irrep_character(IrrepLabel j, const std::string& var) {
    if (j.twice_spin < 0) throw SeriesError("negative twice-spin");
    VariableContext ctx = laurent_ctx(var);
    TruncatedSeries out(ctx);
    for (int w = -j.twice_spin; w <= j.twice_spin; w += 2) {
        out += TruncatedSeries::monomial(ctx, {{var, w}}, 1);
    }
    return out;
}

TruncatedSeries jh_basis_character(int h, const std::string& var) {
    if (h < 0) throw SeriesError("negative h");
    VariableContext ctx = laurent_ctx(var);
    TruncatedSeries base = TruncatedSeries::monomial(ctx, {{var, 1}}, 1) +
                           TruncatedSeries::monomial(ctx, {{var, -1}}, 1) +
                           TruncatedSeries::constant(ctx, 2);
    return base.pow(h);
}

bool is_palindromic(const TruncatedSeries& s, const std::string& var) {
    auto idx = s.context().index_of(var);
    if (!idx) throw ContextError("no variable named " + var);
    for (const auto& [e, c] : s.terms()) {
        TruncatedSeries::Exponents m = e;
        m[*idx] = -m[*idx];
        auto it = s.terms().find(m);
        if (it == s.terms().end() || it->second != c) return false;
    }
    return true;
}

std::vector<CGEntry> cg_decompose(const TruncatedSeries& chr, const std::string& var,
                                  bool allow_virtual) {
    if (!is_palindromic(chr, var)) {
        throw SymmetryError("character is not symmetric under " + var + " -> 1/" + var);
    }
    std::vector<CGEntry> out;
    TruncatedSeries residual = chr;
    while (!residual.is_zero()) {
        int top = *max_exponent(residual, var);
        Integer mult = integer_coefficient(residual, var, top);
        if (mult < 0 && !allow_virtual) {
            throw VirtualError("negative multiplicity at twice-spin " + std::to_string(top));
        }
        out.push_back({IrrepLabel{top}, mult});
        residual -= Rational(mult) * irrep_character(IrrepLabel{top}, var);
    }
    return out;
}

std::vector<BiCGEntry> bi_decompose(const TruncatedSeries& chr, const std::string& left_var,
                                    const std::string& right_var, bool allow_virtual) {
    if (!is_palindromic(chr, left_var)) {
        throw SymmetryError("character is not symmetric in " + left_var);
    }
    if (!is_palindromic(chr, right_var)) {
        throw SymmetryError("character is not symmetric in " + right_var);
    }
    std::vector<BiCGEntry> out;
    TruncatedSeries residual = chr.in_context(VariableContext::merge(
        chr.context(), VariableContext({VariableSpec::laurent(left_var), VariableSpec::laurent(right_var)})));
    while (!residual.is_zero()) {
        int top = *max_exponent(residual, left_var);
        TruncatedSeries slice = coefficient_of(residual, left_var, top);
        for (const CGEntry& entry : cg_decompose(slice, right_var, allow_virtual)) {
            out.push_back({IrrepLabel{top}, entry.irrep, entry.multiplicity});
        }
        residual -= irrep_character(IrrepLabel{top}, left_var) * slice;
    }
    return out;
}

GVDecomposition extract_gv(const TruncatedSeries& p, const std::string& var) {
    if (!is_palindromic(p, var)) {
        throw SymmetryError("input is not symmetric under " + var + " -> 1/" + var);
    }
    GVDecomposition out;
    TruncatedSeries residual = p;
    while (!residual.is_zero()) {
        int top = *max_exponent(residual, var);
        if (top < 0) throw SeriesError("peeling left a residual with negative top weight");
        Integer nh = integer_coefficient(residual, var, top);
        out.n[top] = nh;
        out.max_h = std::max(out.max_h, top);
        residual -= Rational(nh) * jh_basis_character(top, var);
    }
    for (auto it = out.n.begin(); it != out.n.end();) {
        it = (it->second == 0) ? out.n.erase(it) : std::next(it);
    }
    return out;
}

TruncatedSeries tr_minus_one(const TruncatedSeries& chr, const std::string& right_var) {
    if (!chr.context().contains(right_var)) return chr;
    return substitute(chr, right_var, Rational(-1));
}

Integer dimension(const TruncatedSeries& chr) {
    TruncatedSeries s = chr;
    while (s.context().size() > 0) {
        const VariableSpec& v = s.context().at(0);
        if (v.kind != VarKind::Laurent) {
            throw SeriesError("dimension is defined for Laurent characters only");
        }
        s = substitute(s, v.name, Rational(1));
    }
    return to_integer(s.constant_term());
}

}  // namespace gvkit::sl2
