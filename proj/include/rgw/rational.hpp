#pragma once

// Exact arithmetic primitives. Unbounded integers and reduced rationals are
// GMP's mpz/mpq; everything layered on top of them in this library stays
// exact (no floating point anywhere).

#include <gmpxx.h>

#include <string>

#include "rgw/errors.hpp"

namespace rgw {

using Int = mpz_class;
using Rational = mpq_class;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Canonical wire form is "num/den" with den >= 1, e.g. "-3/4", "5/1".
inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw argument_error("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw argument_error("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Rational pow_rational(const Rational& base, int e) {
    if (e == 0) return 1;
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw argument_error("0 has no negative power");
        b = rat(base.get_den(), base.get_num());
        e = -e;
    }
    Rational acc = 1;
    for (int i = 0; i < e; ++i) acc *= b;
    return acc;
}

} // namespace rgw
