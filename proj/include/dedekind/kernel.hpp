#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

enum class Subgroup { gamma0, gamma1 };

inline const char* subgroup_name(Subgroup s) {
    return s == Subgroup::gamma0 ? "gamma0" : "gamma1";
}

enum class PredictedBy { a_equals_1, reflection, unit_square, minus_one_square,
                         scaling_family, none };

const char* predicted_by_name(PredictedBy p);

struct KernelPoint {
    long a = 0;
    long c = 0;
    bool in_gamma1 = false;       // a = 1 mod Q
    PredictedBy predicted_by = PredictedBy::none;
};

inline bool operator==(const KernelPoint& x, const KernelPoint& y) {
    return x.a == y.a && x.c == y.c;
}
inline bool operator<(const KernelPoint& x, const KernelPoint& y) {
    return x.c != y.c ? x.c < y.c : x.a < y.a;
}

struct ScanMeta {
    long q1 = 0, q2 = 0;
    long c_max = 0;
    Subgroup subgroup = Subgroup::gamma0;
    bool intersection = false;           // all parity-compatible primitive pairs
    std::vector<std::string> pair_labels;  // pairs the result is valid for
    std::string scanned_label;           // pair actually evaluated (orbit rep)
    std::uint64_t seed = 0;
};

struct ScanResult {
    ScanMeta meta;
    std::vector<KernelPoint> points;  // sorted by (c, a), no duplicates

    bool contains(long a, long c) const;
};

// Exhaustive kernel scan: all (a, c) with Q | c <= c_max, 0 < a < c,
// gcd(a, c) = 1 (and a = 1 mod Q under gamma1) where every spec in the set
// vanishes exactly.  Pairs must share the level Q.  Deterministic output for
// any thread count.
ScanResult scan_kernel(const std::vector<DedekindSum>& specs, long c_max, Subgroup subgroup,
                       int threads = 1);

// Intersection kernel K_{q1,q2} over all parity-compatible primitive pairs.
ScanResult scan_intersection(long q1, long q2, long c_max, Subgroup subgroup, int threads = 1);

// The point set the kernel propositions predict, closed under reflection,
// with the same tagging as scan results.  Scaling families are seeded only
// from directly-confirmed zeros of shape (1 + n d Q, d^2 Q).
std::vector<KernelPoint> predicted_kernel(const DedekindSum& spec, long c_max);

struct SoundnessReport {
    long predicted = 0;
    long scanned = 0;
    std::vector<KernelPoint> breaches;     // predicted points that fail to vanish
    std::vector<KernelPoint> unexplained;  // scan points no predicate covers
    bool sound() const { return breaches.empty(); }
};

// Checks predicted_kernel against an exhaustive scan; unexplained points are
// reported, not failed.
SoundnessReport verify_prediction_soundness(const DedekindSum& spec, long c_max);

struct CommutatorReport {
    long level = 0;  // Q
    long samples = 0;
    long in_gamma_level_squared = 0;  // commutators inside Gamma(Q^2)
    long vanish_all_pairs = 0;        // commutators killed by every pair
    std::vector<std::string> failures;
    bool witness_in_kernel = false;      // S(1 0; Q 1) = 0 for every pair
    bool witness_outside_gamma = false;  // (1 0; Q 1) not in Gamma(Q^2)
    bool passed() const {
        return failures.empty() && witness_in_kernel && witness_outside_gamma;
    }
};

// Seeded commutators of Gamma(Q) elements: containment in Gamma(Q^2) and
// exact vanishing of every newform Dedekind sum of level Q, plus the
// strictness witness (1 0; Q 1).
CommutatorReport commutator_experiment(long q1, long q2, int samples, std::uint64_t seed);

using CharacterPair = std::pair<DirichletCharacter, DirichletCharacter>;

struct GaloisOrbit {
    CharacterPair representative;       // smallest Conrey label pair
    std::vector<CharacterPair> members;  // sorted, includes the representative
};

// Partition of character_pairs(q1, q2) under simultaneous k-th powering for
// k coprime to lcm(phi(q1), phi(q2)).
std::vector<GaloisOrbit> galois_orbits(long q1, long q2);

struct OrbitScanAudit {
    std::string audited_label;   // non-representative pair checked
    long sampled_points = 0;     // random points compared for vanishing
    long result_points = 0;      // scan points re-checked on the audited pair
    bool matched = true;
};

struct OrbitScan {
    GaloisOrbit orbit;
    ScanResult result;
    OrbitScanAudit audit;
    double scan_seconds = 0.0;
};

// One scan per Galois orbit, recorded as valid for every member; a seeded
// audit of one non-representative member guards against drift.  An audit
// mismatch marks the OrbitScan and must be treated as a hard failure.
std::vector<OrbitScan> scan_with_orbit_dedup(long q1, long q2, long c_max, Subgroup subgroup,
                                             int threads, std::uint64_t seed);

}  // namespace dedekind
