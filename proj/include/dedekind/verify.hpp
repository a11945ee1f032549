#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dedekind/kernel.hpp"

namespace dedekind {

struct VerifyOptions {
    std::vector<long> moduli{3, 5};  // grid: every ordered (q1, q2) pair from this list
    int samples = 200;               // random matrices per character pair and identity
    std::uint64_t seed = 1;
    int threads = 1;
    std::string only;          // run a single section by name when nonempty
    std::string inject_fault;  // test hook: "gauss-sum" or "dedekind-sum"
};

struct SectionResult {
    std::string name;
    long checks = 0;
    bool passed = true;
    std::vector<std::string> witnesses;  // offending (pair, gamma) descriptions
};

struct VerifyReport {
    bool passed = true;
    std::vector<SectionResult> sections;
};

// Machine verification of every identity the library implements:
//   crossed-hom          S(g1 g2) = S(g1) + psi(g1) S(g2)
//   reciprocity-even     S_{12}(g) = S_{21}(g')
//   reciprocity-odd      S_{12}(g) + S_{21}(g') = (1 - psi(g)) B1 B1
//   reciprocity-constant closed form vs gamma-solved and L-series routes
//   symmetry-negation    S(-a, c) = -chi2(-1) S(a, c)
//   symmetry-inverse     S(abar, c) = chi2(-1) psi(a) S(a, c)
//   column-independence  S depends on the first column only
//   periodicity          S(a + c, c) = S(a, c)
//   torsion              S(g^k) = k S(g) on Gamma1, so nonzero stays nonzero
//   galois               sigma(S_{12}(g)) = S_{12^sigma}(g)
//   gauss-norm           tau(chi) tau(conj chi) = chi(-1) q
//   commutator           [Gamma(Q), Gamma(Q)] inside Gamma(Q^2) and the kernel
//   prediction-soundness predicted kernel points all vanish
//   eisenstein           the Fourier-expansion route within 1e-6
// All checks except the last are exact.
VerifyReport run_verify(const VerifyOptions& options);

std::string verify_report_json(const VerifyReport& report, const VerifyOptions& options);

}  // namespace dedekind
