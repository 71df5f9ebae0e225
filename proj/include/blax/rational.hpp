#pragma once

#include <gmpxx.h>

#include <string>

namespace blax {

// Exact arbitrary-precision rational.  mpq_class keeps gcd(num,den)=1 and
// den>0 after canonicalize(), which the constructors below always call.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline double to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace blax
