#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/cyclotomic.hpp"

namespace dedekind {

// Dirichlet character modulo q addressed by its Conrey index, the LMFDB
// labeling convention: chi_q(m, .) where m runs over units mod q.  Values
// are exact roots of unity exposed as exponents on zeta_{order}.
class DirichletCharacter {
  public:
    DirichletCharacter(long modulus, long index);

    long modulus() const { return q_; }
    long index() const { return index_; }
    std::string label() const;  // "q.index"

    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == q_; }
    bool is_principal() const { return order_ == 1; }
    int parity() const { return parity_; }  // chi(-1), +1 or -1
    bool is_even() const { return parity_ == 1; }
    bool is_odd() const { return parity_ == -1; }

    // exponent e with chi(n) = zeta_order^e, or nullopt when gcd(n, q) > 1
    std::optional<long> value_exponent(long n) const;
    std::optional<long> value_exponent(const Integer& n) const;
    Cyclotomic value(long n) const;
    Cyclotomic value(const Integer& n) const;

    // chi^k as a character (Conrey index m^k); requires gcd(k, order) = 1
    DirichletCharacter galois_power(long k) const;
    DirichletCharacter conjugate() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.q_ == b.q_ && a.index_ == b.index_;
    }

  private:
    long q_;
    long index_;
    long order_;
    long conductor_;
    int parity_;
    std::vector<long> exponent_;  // exponent of chi(n) for n in [0, q), -1 when not a unit
};

// All characters of conductor exactly q, ordered by Conrey index.
std::vector<DirichletCharacter> primitive_characters(long q);

// Ordered pairs of primitive characters mod q1, q2 with chi1*chi2(-1) = 1.
std::vector<std::pair<DirichletCharacter, DirichletCharacter>> character_pairs(long q1, long q2);

// Parse "q.i" back into a character.
DirichletCharacter character_from_label(const std::string& label);

// tau(chi) = sum_n chi(n) zeta_q^n; requires chi primitive.
Cyclotomic gauss_sum(const DirichletCharacter& chi);

// Generalized Bernoulli number B_{1,chi} = (1/q) sum_a chi(a) a.
Cyclotomic bernoulli1(const DirichletCharacter& chi);

// The character chi1 * conj(chi2) viewed modulo q1*q2 (no primitivity
// assumed); this is the automorphy multiplier of the Dedekind sum and is
// evaluated at the lower-right matrix entry.
class Nebentypus {
  public:
    Nebentypus(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

    long modulus() const { return q_; }
    long value_order() const { return order_; }
    bool is_principal() const;
    std::optional<long> value_exponent(long n) const;
    std::optional<long> value_exponent(const Integer& n) const;
    Cyclotomic value(long n) const;
    Cyclotomic value(const Integer& n) const;

  private:
    long q_;
    long order_;
    std::vector<long> exponent_;
};

}  // namespace dedekind
