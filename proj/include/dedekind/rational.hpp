#pragma once

#include <gmpxx.h>

#include <string>

namespace dedekind {

// Exact arithmetic substrate.  GMP keeps mpq_class canonical
// (denominator > 0, gcd(num, den) = 1) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer num(const Rational& r) { return r.get_num(); }
inline Integer den(const Rational& r) { return r.get_den(); }

inline Rational make_rational(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& n, const Integer& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// floor(n/d) for the exact Bernoulli function; mpz_fdiv rounds toward -inf.
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Rational floor_rational(const Rational& x) {
    return Rational(floor_div(num(x), den(x)));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace dedekind
