#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "dedekind/rational.hpp"

namespace dedekind {

// Precomputed data for one cyclotomic order: the minimal polynomial Phi_n and
// the reduction rows x^k mod Phi_n for every exponent k that arithmetic,
// Galois twists, or embeddings into Q(zeta_n) can produce.
struct CycloTable {
    long order = 1;
    long degree = 1;  // phi(order)
    std::vector<Integer> min_poly;            // Phi_order, monic, degree+1 coeffs
    std::vector<std::vector<Integer>> rows;   // rows[k - degree] = x^k mod Phi
    long rows_max = 0;                        // largest exponent covered
    bool rows_fit_i64 = false;
    std::vector<std::vector<long>> rows_i64;  // same rows when they fit a long
};

// Shared table for the given order; computed once, immutable, thread-safe.
std::shared_ptr<const CycloTable> cyclo_table(long order);

// Phi_n with integer coefficients, computed by dividing x^n - 1 by the
// cyclotomic polynomials of the proper divisors of n.
std::vector<Integer> cyclotomic_polynomial(long n);

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}
// modulo Phi_n.  Values are immutable once constructed; arithmetic between
// different orders embeds both operands into the lcm order first.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeff_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : order_(1), coeff_(1, r) {}
    explicit Cyclotomic(long n) : order_(1), coeff_(1, Rational(n)) {}

    static Cyclotomic zero(long order);
    static Cyclotomic one() { return Cyclotomic(Rational(1)); }
    // zeta_order^exp
    static Cyclotomic root_of_unity(long order, long exp);
    // sum_k raw[k] * zeta_order^k, reduced; raw.size() may reach rows_max+1
    static Cyclotomic from_power_sums(long order, std::vector<Rational> raw);
    static Cyclotomic from_integer_sums(long order, const std::vector<Integer>& raw,
                                        const Integer& denom);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;
    // constant coefficient; exact value when is_rational()
    const Rational& rational_part() const { return coeff_[0]; }

    // image in Q(zeta_m) for order | m
    Cyclotomic embedded(long m) const;
    // sigma_k: zeta ->  zeta^k; requires gcd(k, order) = 1
    Cyclotomic galois(long k) const;
    Cyclotomic conjugate() const;
    Cyclotomic inverse() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
    friend Cyclotomic operator*(const Rational& r, const Cyclotomic& x);
    friend Cyclotomic operator*(const Cyclotomic& x, const Rational& r) { return r * x; }
    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

  private:
    Cyclotomic(long order, std::vector<Rational> coeff)
        : order_(order), coeff_(std::move(coeff)) {}

    long order_;
    std::vector<Rational> coeff_;
};

}  // namespace dedekind
