#include "dedekind/eisenstein.hpp"

#include <cmath>
#include <stdexcept>

namespace dedekind {

namespace {

std::complex<double> unit_value(const DirichletCharacter& chi, long n, bool conj) {
    auto e = chi.value_exponent(n);
    if (!e) return {0.0, 0.0};
    double angle = 2.0 * M_PI * static_cast<double>(*e) / static_cast<double>(chi.order());
    if (conj) angle = -angle;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

EisensteinSeries::EisensteinSeries(const DirichletCharacter& chi1,
                                   const DirichletCharacter& chi2, long truncation) {
    if (truncation < 1) throw std::invalid_argument("EisensteinSeries: truncation must be >= 1");
    coeff_.assign(truncation + 1, {0.0, 0.0});
    for (long u = 1; u <= truncation; ++u) {
        const auto cu = unit_value(chi1, u, false);
        if (cu == std::complex<double>(0.0, 0.0)) continue;
        const std::complex<double> scaled = cu / static_cast<double>(u);
        for (long v = 1; u * v <= truncation; ++v) {
            const auto cv = unit_value(chi2, v, true);
            if (cv == std::complex<double>(0.0, 0.0)) continue;
            coeff_[u * v] += scaled * cv;
        }
    }
}

std::complex<double> EisensteinSeries::operator()(std::complex<double> z) const {
    const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * M_PI) * z);
    std::complex<double> qn(1.0, 0.0);
    std::complex<double> acc(0.0, 0.0);
    for (size_t n = 1; n < coeff_.size(); ++n) {
        qn *= q;
        acc += coeff_[n] * qn;
    }
    return acc;
}

double eisenstein_defect(const DedekindSum& s, const Mat22& gamma, long truncation) {
    if (gamma.c() <= 0)
        throw std::invalid_argument("eisenstein_defect: lower-left entry must be positive");
    if (gamma.c() % s.level() != 0)
        throw std::invalid_argument("eisenstein_defect: matrix not in Gamma0(q1*q2)");
    const double c = gamma.c().get_d();
    const double a = gamma.a().get_d();
    const double d = gamma.d().get_d();

    const EisensteinSeries f(s.chi1(), s.chi2(), truncation);
    const std::complex<double> z(-d / c, 1.0 / c);
    const std::complex<double> gz(a / c, 1.0 / c);  // gamma z for this choice of z

    const std::complex<double> tau = gauss_sum(s.chi1().conjugate()).to_complex();
    const std::complex<double> lhs =
        std::complex<double>(0.0, M_PI) / tau * s.at(gamma).to_complex();
    const std::complex<double> rhs = f(gz) - s.psi_at(gamma).to_complex() * f(z);
    return std::abs(lhs - rhs);
}

}  // namespace dedekind
