#pragma once

#include <complex>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

// Truncated Fourier expansion f(z) = sum_{n<=N} c_n e^{2 pi i n z} with
// c_n = sum_{uv=n} chi1(u) conj(chi2)(v) / u, the weight-one newform
// Eisenstein series at its holomorphic specialization.
class EisensteinSeries {
  public:
    EisensteinSeries(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                     long truncation);

    std::complex<double> operator()(std::complex<double> z) const;
    long truncation() const { return static_cast<long>(coeff_.size()) - 1; }

  private:
    std::vector<std::complex<double>> coeff_;  // index by n, coeff_[0] unused
};

// |pi i / tau(conj(chi1)) * S(gamma) - (f(gamma z) - psi(gamma) f(z))|
// evaluated at z = (-d + i)/C, where C > 0 is the lower-left entry; both z
// and gamma z then sit at height 1/C.
double eisenstein_defect(const DedekindSum& s, const Mat22& gamma, long truncation);

}  // namespace dedekind
