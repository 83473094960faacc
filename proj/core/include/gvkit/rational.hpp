#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "gvkit/errors.hpp"

namespace gvkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r)) {
        throw SeriesError("expected an integer, got " + r.str());
    }
    return numerator(r);
}

inline bool is_even(const Integer& n) { return n % 2 == 0; }

/* 1/r with the sign kept on the numerator (the two-argument cpp_rational
 * constructor rejects negative denominators). */
inline Rational rational_inverse(const Rational& r) {
    if (r == 0) throw SeriesError("zero is not invertible");
    Integer n = numerator(r);
    Integer d = denominator(r);
    return n < 0 ? Rational(-d, -n) : Rational(d, n);
}

/* Exact integer power; negative exponents invert first. */
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw SeriesError("zero has no negative power");
        b = rational_inverse(base);
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace gvkit
