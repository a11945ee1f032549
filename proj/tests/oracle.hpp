#pragma once

// Test-side reference implementations, kept deliberately naive and
// independent of the library's evaluation paths.

#include "dedekind/cyclotomic.hpp"
#include "dedekind/dirichlet.hpp"

namespace oracle {

using dedekind::Cyclotomic;
using dedekind::DirichletCharacter;
using dedekind::Integer;
using dedekind::Rational;

// B1 from the definition, no shared code with the library version.
inline Rational b1(const Rational& x) {
    if (x.get_den() == 1) return Rational(0);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rational r = x - Rational(fl) - Rational(1, 2);
    r.canonicalize();
    return r;
}

// Term-by-term evaluation of the finite double sum with full cyclotomic
// arithmetic per term.
inline Cyclotomic dedekind_sum(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                               long a, long c) {
    const DirichletCharacter chi1_bar = chi1.conjugate();
    const DirichletCharacter chi2_bar = chi2.conjugate();
    const long q1 = chi1.modulus();
    Cyclotomic total;
    for (long j = 0; j < c; ++j) {
        for (long n = 0; n < q1; ++n) {
            const Rational outer = b1(Rational(j, c));
            Rational inner_arg(n * c + a * j * q1, q1 * c);
            inner_arg.canonicalize();
            const Rational inner = b1(inner_arg);
            if (outer == 0 || inner == 0) continue;
            total = total + (outer * inner) * (chi2_bar.value(j) * chi1_bar.value(n));
        }
    }
    return total;
}

// A character is primitive iff it is not induced by a character of any
// proper divisor modulus: chi(n) must differ between some n = m mod d with
// both coprime to q.
inline bool primitive_by_bruteforce(const DirichletCharacter& chi) {
    const long q = chi.modulus();
    for (long d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        bool factors_through = true;
        for (long n = 1; n < q && factors_through; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (long m = n + d; m < q; m += d) {
                if (std::gcd(m, q) != 1) continue;
                if (chi.value(n) != chi.value(m)) {
                    factors_through = false;
                    break;
                }
            }
        }
        if (factors_through) return false;
    }
    return true;
}

}  // namespace oracle
