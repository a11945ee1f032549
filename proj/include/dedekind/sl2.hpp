#pragma once

#include <array>
#include <random>
#include <string>

#include "dedekind/rational.hpp"

namespace dedekind {

struct SubgroupFlags {
    bool gamma0 = false;  // c = 0 mod N
    bool gamma1 = false;  // gamma0 and a = d = 1 mod N
    bool gamma = false;   // gamma1 and b = 0 mod N
};

// Element of SL2(Z); the determinant condition is checked at construction.
class Mat22 {
  public:
    Mat22() : a_(1), b_(0), c_(0), d_(1) {}
    Mat22(Integer a, Integer b, Integer c, Integer d);

    static Mat22 identity() { return Mat22(); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    Mat22 inverse() const { return Mat22(d_, -b_, -c_, a_); }
    Mat22 power(long k) const;

    SubgroupFlags subgroup_flags(const Integer& level) const;
    bool in_gamma0(const Integer& level) const { return c_ % level == 0; }
    bool in_gamma1(const Integer& level) const;
    bool in_gamma(const Integer& level) const;

    std::string to_string() const;  // "a,b,c,d"
    static Mat22 parse(const std::string& text);

    friend Mat22 operator*(const Mat22& x, const Mat22& y);
    friend bool operator==(const Mat22& x, const Mat22& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Mat22& x, const Mat22& y) { return !(x == y); }

  private:
    Integer a_, b_, c_, d_;
};

// Canonical completion of a coprime column (a, c) to a determinant-1 matrix:
// 0 <= d < |c| when c != 0, and (a, 0; 0, a) when c = 0.
Mat22 complete_column(const Integer& a, const Integer& c);

// gamma' = (d, -c; -b q1 q2, a) for gamma = (a, b; c q1 q2, d) in
// Gamma0(q1 q2); the partner appearing in the reciprocity formula.
Mat22 fricke_partner(const Mat22& gamma, long q1, long q2);

// (A - I)/Q mod Q, entries in [0, Q); requires A in Gamma(Q).  This is an
// additive homomorphism whose kernel is Gamma(Q^2).
std::array<Integer, 4> phi_map(const Mat22& m, const Integer& level);

// I + kQ * (nd, -n^2; d^2, -nd); the direction matrix squares to zero, so
// this is the k-th power of the k = 1 matrix.
Mat22 scaling_family(long n, long d, long k, long level);

Mat22 commutator(const Mat22& x, const Mat22& y);

// Deterministic bounded sampler, independent of the standard library's
// distribution implementations.
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Random elements as short words in (1 1; 0 1), (1 0; Q 1) and a unit column
// completion, keeping entries small enough for finite-sum evaluation.
Mat22 random_gamma0(std::mt19937_64& rng, long level);
Mat22 random_gamma1(std::mt19937_64& rng, long level);
// Random element of the principal congruence subgroup Gamma(Q).
Mat22 random_gamma(std::mt19937_64& rng, long level);

}  // namespace dedekind
