#include "dedekind/dedekind_sum.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "dedekind/arith.hpp"

namespace dedekind {

namespace {

constexpr long kMaxC = 1000000000L;  // finite-sum evaluation is O(c)

}  // namespace

Rational bernoulli_b1(const Rational& x) {
    if (den(x) == 1) return Rational(0);
    Rational r = x - floor_rational(x) - make_rational(1, 2);
    r.canonicalize();
    return r;
}

DedekindSum::DedekindSum(DirichletCharacter chi1, DirichletCharacter chi2)
    : chi1_(std::move(chi1)),
      chi2_(std::move(chi2)),
      q1_(chi1_.modulus()),
      q2_(chi2_.modulus()),
      level_(q1_ * q2_),
      order_(std::lcm(chi1_.order(), chi2_.order())),
      psi_(chi1_, chi2_) {
    if (q1_ <= 1 || q2_ <= 1)
        throw std::invalid_argument("DedekindSum: moduli must exceed 1");
    if (!chi1_.is_primitive() || !chi2_.is_primitive())
        throw std::invalid_argument("DedekindSum: characters must be primitive");
    if (chi1_.parity() * chi2_.parity() != 1)
        throw std::invalid_argument("DedekindSum: chi1*chi2(-1) must be 1");
    const long s1 = order_ / chi1_.order();
    const long s2 = order_ / chi2_.order();
    conj1_exp_.assign(q1_, -1);
    for (long n = 0; n < q1_; ++n)
        if (auto e = chi1_.value_exponent(n))
            conj1_exp_[n] = mod_floor(-*e, chi1_.order()) * s1;
    conj2_exp_.assign(q2_, -1);
    for (long j = 0; j < q2_; ++j)
        if (auto e = chi2_.value_exponent(j))
            conj2_exp_[j] = mod_floor(-*e, chi2_.order()) * s2;
    table_ = cyclo_table(order_);
}

void DedekindSum::normalize(Integer& a, Integer& c) const {
    if (c < 0) {
        a = -a;
        c = -c;
    }
    if (c != 0 && c % level_ != 0)
        throw std::invalid_argument("dedekind sum: c not divisible by q1*q2");
    if (gcd(a, c) != 1)
        throw std::invalid_argument("dedekind sum: gcd(a, c) must be 1");
    if (c != 0) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        a = r;
        if (!c.fits_slong_p() || c.get_si() > kMaxC)
            throw std::invalid_argument("dedekind sum: c too large for finite-sum evaluation");
    }
}

std::vector<__int128> DedekindSum::accumulate(long a, long c) const {
    // One bucket per exponent of zeta_order; every term carries the common
    // denominator 4*q1*c^2.
    std::vector<__int128> acc(order_, 0);
    const long qc = q1_ * c;
    const long step = mod_floor(static_cast<long>((static_cast<__int128>(a) * q1_) % qc), qc);
    // units of q1 with their conj(chi1) exponents and precomputed n*c
    std::vector<long> unit_exp, unit_nc;
    for (long n = 1; n < q1_; ++n)
        if (conj1_exp_[n] >= 0) {
            unit_exp.push_back(conj1_exp_[n]);
            unit_nc.push_back(n * c);
        }
    const size_t units = unit_exp.size();
    long base = 0;  // a*j*q1 mod q1*c
    for (long j = 1; j < c; ++j) {
        base += step;
        if (base >= qc) base -= qc;
        const long e2 = conj2_exp_[j % q2_];
        if (e2 < 0) continue;
        const long wj = 2 * j - c;
        for (size_t i = 0; i < units; ++i) {
            long r = unit_nc[i] + base;
            if (r >= qc) r -= qc;
            if (r == 0) continue;  // B1 vanishes on integers
            long e = e2 + unit_exp[i];
            if (e >= order_) e -= order_;
            acc[e] += static_cast<__int128>(wj) * (2 * r - qc);
        }
    }
    return acc;
}

namespace {

Integer int128_to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Integer out = 0;
    Integer shift = Integer(1) << 64;
    out = Integer(static_cast<unsigned long>(u >> 64)) * shift +
          Integer(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    return neg ? -out : out;
}

}  // namespace

Cyclotomic DedekindSum::operator()(const Integer& a_in, const Integer& c_in) const {
    Integer a = a_in, c = c_in;
    normalize(a, c);
    if (c == 0) return Cyclotomic::zero(order_);
    const long cl = c.get_si();
    const long al = a.get_si();
    auto acc = accumulate(al, cl);
    std::vector<Integer> raw(order_);
    for (long e = 0; e < order_; ++e) raw[e] = int128_to_mpz(acc[e]);
    const Integer denom = Integer(4) * q1_ * c * c;
    Cyclotomic result = Cyclotomic::from_integer_sums(order_, raw, denom);
#ifndef NDEBUG
    // Empirical bound on the reduced denominators; see the unit tests.
    for (const auto& coeff : result.coeffs())
        assert((Integer(4) * q1_ * c) % den(coeff) == 0);
#endif
    return result;
}

Cyclotomic DedekindSum::at(const Mat22& gamma) const {
    if (gamma.c() % level_ != 0)
        throw std::invalid_argument("dedekind sum: matrix not in Gamma0(q1*q2)");
    return (*this)(gamma.a(), gamma.c());
}

bool DedekindSum::is_zero(long a, long c) const {
    Integer ai(a), ci(c);
    normalize(ai, ci);
    if (ci == 0) return true;
    auto acc = accumulate(ai.get_si(), ci.get_si());
    const long deg = table_->degree;
    if (table_->rows_fit_i64) {
        // fold the high exponents through the integer reduction rows
        for (long k = order_ - 1; k >= deg; --k) {
            if (acc[k] == 0) continue;
            const auto& row = table_->rows_i64[k - deg];
            for (long i = 0; i < deg; ++i)
                if (row[i] != 0) acc[i] += acc[k] * row[i];
            acc[k] = 0;
        }
        for (long i = 0; i < deg; ++i)
            if (acc[i] != 0) return false;
        return true;
    }
    std::vector<Integer> raw(order_);
    for (long e = 0; e < order_; ++e) raw[e] = int128_to_mpz(acc[e]);
    return Cyclotomic::from_integer_sums(order_, raw, 1).is_zero();
}

bool DedekindSum::is_zero_at(const Mat22& gamma) const {
    if (gamma.c() % level_ != 0)
        throw std::invalid_argument("dedekind sum: matrix not in Gamma0(q1*q2)");
    return at(gamma).is_zero();
}

Cyclotomic crossed_hom_defect(const DedekindSum& s, const Mat22& g1, const Mat22& g2) {
    return s.at(g1 * g2) - s.at(g1) - s.psi_at(g1) * s.at(g2);
}

Cyclotomic reciprocity_defect(const DedekindSum& s, const Mat22& gamma) {
    const DedekindSum swapped = s.swapped();
    const Mat22 partner = fricke_partner(gamma, s.q1(), s.q2());
    if (!s.odd_pair()) return s.at(gamma) - swapped.at(partner);
    const Cyclotomic one = Cyclotomic::one();
    return s.at(gamma) + swapped.at(partner) -
           (one - s.psi_at(gamma)) * reciprocity_constant(s);
}

Cyclotomic reciprocity_constant(const DedekindSum& s) {
    if (!s.odd_pair())
        throw std::invalid_argument("reciprocity_constant: defined for odd pairs only");
    return bernoulli1(s.chi1().conjugate()) * bernoulli1(s.chi2().conjugate());
}

Cyclotomic reciprocity_constant_from_gamma(const DedekindSum& s, const Mat22& gamma) {
    if (!s.odd_pair())
        throw std::invalid_argument("reciprocity_constant: defined for odd pairs only");
    const Cyclotomic psi = s.psi_at(gamma);
    const Cyclotomic denom = Cyclotomic::one() - psi;
    if (denom.is_zero())
        throw std::invalid_argument("reciprocity_constant_from_gamma: psi(gamma) = 1");
    const Mat22 partner = fricke_partner(gamma, s.q1(), s.q2());
    return (s.at(gamma) + s.swapped().at(partner)) * denom.inverse();
}

Cyclotomic negation_defect(const DedekindSum& s, long a, long c) {
    const Cyclotomic minus = s(Integer(-a), Integer(c));
    const Cyclotomic plus = s(Integer(a), Integer(c));
    const Rational sign(s.chi2().parity());
    return minus + sign * plus;
}

Cyclotomic inverse_defect(const DedekindSum& s, long a, long c) {
    const long abar = inv_mod(a, c);
    const Cyclotomic lhs = s(Integer(abar), Integer(c));
    const Cyclotomic rhs = s(Integer(a), Integer(c));
    const Rational sign(s.chi2().parity());
    return lhs - sign * (s.psi().value(a) * rhs);
}

}  // namespace dedekind
