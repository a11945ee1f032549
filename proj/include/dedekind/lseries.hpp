#pragma once

#include <complex>

#include "dedekind/dirichlet.hpp"

namespace dedekind {

// L(1, chi) for nontrivial chi by partial sums of sum chi(n)/n over `terms`
// terms plus an asymptotic tail correction; accurate to ~1e-12 already at
// 10^5 terms.  Used as a transcendental-route check, never as a value source.
std::complex<double> l_value_at_1(const DirichletCharacter& chi, long terms);

// tau(conj(chi1)) tau(conj(chi2)) / (pi i)^2 * L(1,chi1) L(1,chi2); the
// floating-point route to the odd reciprocity constant.
std::complex<double> reciprocity_constant_numeric(const DirichletCharacter& chi1,
                                                  const DirichletCharacter& chi2, long terms);

}  // namespace dedekind
