#pragma once

#include <gmpxx.h>

#include <string>

#include "ddsa/errors.hpp"

namespace ddsa {

// Exact rational arithmetic on arbitrary-precision integers.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Accepts "p", "-p", "p/q", "-p/q" with integer p, q and q != 0.
Rational parse_rational(const std::string& text);

}  // namespace ddsa
