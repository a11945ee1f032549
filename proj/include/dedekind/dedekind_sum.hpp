#pragma once

#include <memory>
#include <vector>

#include "dedekind/cyclotomic.hpp"
#include "dedekind/dirichlet.hpp"
#include "dedekind/sl2.hpp"

namespace dedekind {

// First Bernoulli function: x - floor(x) - 1/2 off the integers, 0 on them.
Rational bernoulli_b1(const Rational& x);

// The newform Dedekind sum attached to a pair of primitive characters chi1
// mod q1, chi2 mod q2 with chi1*chi2(-1) = 1.  Evaluation uses the finite
// double sum
//
//   S(a, c) = sum_{j mod c} sum_{n mod q1}
//             conj(chi2)(j) conj(chi1)(n) B1(j/c) B1(n/q1 + a j/c)
//
// over a single scaled-integer accumulator per root-of-unity exponent; the
// common denominator 4*q1*c^2 clears every B1 product, so the hot loop is
// pure integer arithmetic and one cyclotomic reduction happens at the end.
class DedekindSum {
  public:
    DedekindSum(DirichletCharacter chi1, DirichletCharacter chi2);

    const DirichletCharacter& chi1() const { return chi1_; }
    const DirichletCharacter& chi2() const { return chi2_; }
    long q1() const { return q1_; }
    long q2() const { return q2_; }
    long level() const { return level_; }  // Q = q1 q2
    bool odd_pair() const { return chi1_.is_odd(); }
    long value_order() const { return order_; }  // lcm(ord chi1, ord chi2)
    const Nebentypus& psi() const { return psi_; }
    Cyclotomic psi_at(const Mat22& gamma) const { return psi_.value(gamma.d()); }

    DedekindSum swapped() const { return DedekindSum(chi2_, chi1_); }

    // S(a, c).  Requires gcd(a, c) = 1 and Q | c (or c = 0); c < 0 is
    // normalized through S(-a, -c) = S(a, c).
    Cyclotomic operator()(const Integer& a, const Integer& c) const;
    Cyclotomic operator()(long a, long c) const {
        return (*this)(Integer(a), Integer(c));
    }
    // Same value from the first column of a matrix in Gamma0(Q).
    Cyclotomic at(const Mat22& gamma) const;

    // Exact kernel membership without building the rational result.
    bool is_zero(long a, long c) const;
    bool is_zero_at(const Mat22& gamma) const;

    std::string label() const { return chi1_.label() + "x" + chi2_.label(); }

  private:
    std::vector<__int128> accumulate(long a, long c) const;
    void normalize(Integer& a, Integer& c) const;

    DirichletCharacter chi1_;
    DirichletCharacter chi2_;
    long q1_, q2_, level_, order_;
    Nebentypus psi_;
    std::vector<long> conj1_exp_;  // conj(chi1) exponents scaled to order_, -1 if zero
    std::vector<long> conj2_exp_;
    std::shared_ptr<const CycloTable> table_;
};

// S(g1 g2) - S(g1) - psi(g1) S(g2); identically zero.
Cyclotomic crossed_hom_defect(const DedekindSum& s, const Mat22& g1, const Mat22& g2);

// Even pair: S_{12}(g) - S_{21}(g'); odd pair:
// S_{12}(g) + S_{21}(g') - (1 - psi(g)) * reciprocity_constant; zero both ways.
Cyclotomic reciprocity_defect(const DedekindSum& s, const Mat22& gamma);

// Closed form B_{1,conj(chi1)} * B_{1,conj(chi2)} of the constant in the odd
// reciprocity law; only defined for odd pairs.
Cyclotomic reciprocity_constant(const DedekindSum& s);

// The same constant solved from one matrix with psi(gamma) != 1:
// (S_{12}(gamma) + S_{21}(gamma')) / (1 - psi(gamma)).
Cyclotomic reciprocity_constant_from_gamma(const DedekindSum& s, const Mat22& gamma);

// S(-a, c) + chi2(-1) S(a, c); zero.
Cyclotomic negation_defect(const DedekindSum& s, long a, long c);

// S(abar, c) - chi2(-1) psi(a) S(a, c) with a*abar = 1 mod c; zero.
Cyclotomic inverse_defect(const DedekindSum& s, long a, long c);

}  // namespace dedekind
