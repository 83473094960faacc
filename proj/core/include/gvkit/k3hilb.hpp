#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gvkit/series.hpp"
#include "gvkit/sl2.hpp"

namespace gvkit::k3 {

inline const std::string kQ = "q";
inline const std::string kTL = "tL";
inline const std::string kTR = "tR";
inline const std::string kY = "y";

/* H*(K3) as a bicharacter: (tL + 1/tL)(tR + 1/tR) + 20. */
TruncatedSeries k3_character();

/* Poincare series of the symmetric products S^(k):
 * 1/((1-tL*tR*q)(1-tR/tL*q)(1-tL/tR*q)(1-q/(tL*tR))(1-q)^20), exact to
 * q^kmax. The q^k coefficient is the symmetric-group invariant character
 * of H*(S^(k)). */
TruncatedSeries sym_product_series(int kmax);

/* Poincare series of the Hilbert schemes S^[k]: the same weights spread
 * over the infinite product with q^m, m = 1..kmax (higher m invisible at
 * the truncation). Every q^k coefficient is palindromic in tL and tR. */
TruncatedSeries hilb_series(int kmax);

enum class Provenance { Decomposition, Kkv };

/* (h, k) -> n_h(k) for k = 1..kmax, stored sparsely; n_h(k) = 0 for h > k. */
struct GVTable {
    int kmax = 0;
    Provenance provenance = Provenance::Decomposition;
    std::map<std::pair<int, int>, Integer> entries;  // key (k, h)

    Integer at(int h, int k) const {
        auto it = entries.find({k, h});
        return it == entries.end() ? Integer(0) : it->second;
    }
};

/* BPS table from the Hilbert-scheme series: per k, take the q^k
 * coefficient, specialize tR := -1, and peel in the (tL + 1/tL + 2)^h
 * basis. kmax = 0 yields an empty table. */
GVTable gv_table(int kmax);

/* The product 1/(prod_{m>=1} (1-y q^m)^2 (1-q^m/y)^2 (1-q^m)^20) expanded
 * to q^kmax. The overall 1/q prefactor of the BPS generating function is
 * handled by re-indexing: the invariants labelled k live in the q^k
 * coefficient of this series (series exponent k, reported index k, i.e.
 * prefactor exponent k-1). */
TruncatedSeries kkv_rhs(int kmax);

/* r_h(k) extracted from kkv_rhs via the integer substitution y := -tL,
 * which turns the (y^(1/2) - y^(-1/2))^(2h) basis with its (-1)^h sign
 * into (tL + 1/tL + 2)^h; no fractional powers ever materialize. */
GVTable kkv_table(int kmax);

struct KkvMismatch {
    int h = 0;
    int k = 0;
    Integer n;
    Integer r;
};

struct KkvReport {
    GVTable decomposition;
    GVTable kkv;
    bool equal = false;
    std::optional<KkvMismatch> first_mismatch;
};

/* Computes both tables and checks n_h(k) = r_h(k) exactly for all
 * h <= k <= kmax. */
KkvReport verify_kkv(int kmax);

/* sum_h n_h(k) * (value of (tL + 1/tL + 2)^h at tL = -1). The basis
 * vanishes at tL = -1 for h >= 1, so this is n_0(k): the signed Euler
 * number the degree-zero piece carries. */
Integer euler_from_gv(const GVTable& table, int k);

}  // namespace gvkit::k3
