#include "dedekind/lseries.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dedekind {

namespace {

// sum_{k >= K} k^{-s} by Euler-Maclaurin.
double zeta_tail(double s, double big_k) {
    const double k1 = std::pow(big_k, 1.0 - s);
    const double k0 = std::pow(big_k, -s);
    return k1 / (s - 1.0) + 0.5 * k0 + s * k0 / big_k / 12.0 -
           s * (s + 1.0) * (s + 2.0) * k0 / (big_k * big_k * big_k) / 720.0;
}

}  // namespace

std::complex<double> l_value_at_1(const DirichletCharacter& chi, long terms) {
    if (chi.is_principal())
        throw std::invalid_argument("l_value_at_1: character must be nontrivial");
    if (terms < 10 * chi.modulus())
        throw std::invalid_argument("l_value_at_1: too few terms");
    const long q = chi.modulus();
    std::vector<std::complex<double>> values(q, {0.0, 0.0});
    for (long r = 0; r < q; ++r) {
        auto e = chi.value_exponent(r);
        if (!e) continue;
        const double angle = 2.0 * M_PI * static_cast<double>(*e) / chi.order();
        values[r] = {std::cos(angle), std::sin(angle)};
    }

    const long blocks = terms / q;
    const long upto = blocks * q;  // full residue blocks keep the tail clean
    std::complex<double> sum(0.0, 0.0), comp(0.0, 0.0);
    for (long n = 1; n <= upto; ++n) {
        const auto& v = values[n % q];
        if (v == std::complex<double>(0.0, 0.0)) continue;
        // Kahan compensation; a million raw adds would drift past 1e-12
        const std::complex<double> term = v / static_cast<double>(n);
        const std::complex<double> y = term - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    // tail: expand 1/(qk+r) around 1/(qk); moment M_0 vanishes
    std::complex<double> tail(0.0, 0.0);
    double sign = -1.0;
    for (int j = 1; j <= 4; ++j) {
        std::complex<double> moment(0.0, 0.0);
        for (long r = 1; r < q; ++r)
            moment += values[r] * std::pow(static_cast<double>(r), j);
        tail += sign * moment * zeta_tail(j + 1.0, static_cast<double>(blocks)) /
                std::pow(static_cast<double>(q), j + 1.0);
        sign = -sign;
    }
    return sum + tail;
}

std::complex<double> reciprocity_constant_numeric(const DirichletCharacter& chi1,
                                                  const DirichletCharacter& chi2, long terms) {
    const std::complex<double> tau1 = gauss_sum(chi1.conjugate()).to_complex();
    const std::complex<double> tau2 = gauss_sum(chi2.conjugate()).to_complex();
    const std::complex<double> l1 = l_value_at_1(chi1, terms);
    const std::complex<double> l2 = l_value_at_1(chi2, terms);
    return tau1 * tau2 * l1 * l2 / (-M_PI * M_PI);
}

}  // namespace dedekind
