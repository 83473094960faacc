#pragma once

#include <map>
#include <string>
#include <vector>

#include "gvkit/series.hpp"

namespace gvkit::sl2 {

/* Spin stored as twice-spin, so weights are plain integer exponents of t
 * and the 2-dimensional representation is twice_spin = 1 with character
 * t + t^-1. */
struct IrrepLabel {
    int twice_spin = 0;
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

struct CGEntry {
    IrrepLabel irrep;
    Integer multiplicity;
};

struct BiCGEntry {
    IrrepLabel left;
    IrrepLabel right;
    Integer multiplicity;
};

/* h -> n_h with the reconstruction identity
 * sum_h n_h * (t + t^-1 + 2)^h = input, exactly. */
struct GVDecomposition {
    std::map<int, Integer> n;
    int max_h = 0;

    Integer at(int h) const {
        auto it = n.find(h);
        return it == n.end() ? Integer(0) : it->second;
    }
};

/* Character of the irreducible with the given twice-spin:
 * t^j + t^(j-2) + ... + t^-j. */
TruncatedSeries irrep_character(IrrepLabel j, const std::string& var = "t");

/* (t + 1/t + 2)^h, the character of ((1/2) + 2(0))^(tensor h). Leading
 * term t^h with coefficient 1, which makes the basis unitriangular. */
TruncatedSeries jh_basis_character(int h, const std::string& var = "tL");

/* Invariance under var -> 1/var. */
bool is_palindromic(const TruncatedSeries& s, const std::string& var);

/* Greedy top-weight-down peeling into irreducible characters. Negative
 * multiplicities only with allow_virtual; recomposition is exact. */
std::vector<CGEntry> cg_decompose(const TruncatedSeries& chr, const std::string& var,
                                  bool allow_virtual = false);

/* Nested Clebsch-Gordan in the left variable then the right one. */
std::vector<BiCGEntry> bi_decompose(const TruncatedSeries& chr, const std::string& left_var,
                                    const std::string& right_var, bool allow_virtual = false);

/* Unique integers n_h with sum_h n_h * jh_basis_character(h) = p.
 * Peeling descends from the top weight; because jh_basis_character(h) has
 * leading coefficient 1 the change of basis is unitriangular, so no ties
 * or choices arise and the residual after the h = 0 step is exactly zero. */
GVDecomposition extract_gv(const TruncatedSeries& p, const std::string& var = "tL");

/* Trace of (-1)^(H_R): the substitution t_R := -1. */
TruncatedSeries tr_minus_one(const TruncatedSeries& chr, const std::string& right_var = "tR");

/* Evaluation of every Laurent variable at 1 (the dimension). */
Integer dimension(const TruncatedSeries& chr);

}  // namespace gvkit::sl2
