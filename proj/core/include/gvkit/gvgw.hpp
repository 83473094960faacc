#pragma once

#include <map>
#include <utility>

#include "gvkit/series.hpp"

namespace gvkit::gvgw {

inline const std::string kLambda = "lambda";

/* BPS table along a single primitive curve class: (h, d) -> n_h(d*beta1)
 * with d >= 1. Multiple covers only couple proportional classes, so one
 * ray carries the whole resummation. */
struct GvTable {
    std::map<std::pair<int, int>, Integer> n;  // key (d, h)

    Integer at(int h, int d) const {
        auto it = n.find({d, h});
        return it == n.end() ? Integer(0) : it->second;
    }
    void set(int h, int d, Integer value) {
        if (value == 0) {
            n.erase({d, h});
        } else {
            n[{d, h}] = std::move(value);
        }
    }
    friend bool operator==(const GvTable&, const GvTable&) = default;
};

/* (g, d) -> N_g(d*beta1), exact rationals. */
struct GwTable {
    std::map<std::pair<int, int>, Rational> invariants;  // key (d, g)

    Rational at(int g, int d) const {
        auto it = invariants.find({d, g});
        return it == invariants.end() ? Rational(0) : it->second;
    }
    void set(int g, int d, Rational value) {
        if (value == 0) {
            invariants.erase({d, g});
        } else {
            invariants[{d, g}] = std::move(value);
        }
    }
    friend bool operator==(const GwTable&, const GwTable&) = default;
};

/* (2 sin(cover * lambda / 2))^(2*genus - 2) as an exact Laurent expansion
 * in lambda up to the given order. Built from the even power series
 * 2 - 2 cos(x) = x^2 - x^4/12 + x^6/360 - ... with x = cover * lambda,
 * raised to genus - 1 for genus >= 1 and inverted for genus = 0, where
 * the Laurent floor is exactly -2. */
TruncatedSeries sin_power_expansion(int cover, int genus, int order);

/* Resummation: N_g(d) = sum over k | d and h of
 * n_h(d/k) * (1/k) * [lambda^(2g-2)] sin_power_expansion(k, h). The
 * internal lambda order is derived from gmax so every reported genus is
 * fully determined. */
GwTable gv_to_gw(const GvTable& gv, int gmax, int dmax);

/* Triangular inversion: ascending in degree, subtract the k >= 2 cover
 * contributions of lower degrees, then peel genus upward using that the
 * k = 1, h = g term has coefficient exactly 1 at lambda^(2g-2). A
 * non-integer n_h flags inconsistent GW input (InversionError). n_h above
 * hmax are unconstrained by the given data and left untouched. */
GvTable gw_to_gv(const GwTable& gw, int hmax, int dmax);

}  // namespace gvkit::gvgw
