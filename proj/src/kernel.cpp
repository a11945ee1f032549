#include "dedekind/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "dedekind/arith.hpp"

namespace dedekind {

const char* predicted_by_name(PredictedBy p) {
    switch (p) {
        case PredictedBy::a_equals_1: return "a-equals-1";
        case PredictedBy::reflection: return "reflection";
        case PredictedBy::unit_square: return "unit-square";
        case PredictedBy::minus_one_square: return "minus-one-square";
        case PredictedBy::scaling_family: return "scaling-family";
        case PredictedBy::none: return "none";
    }
    return "none";
}

bool ScanResult::contains(long a, long c) const {
    KernelPoint probe{a, c, false, PredictedBy::none};
    auto it = std::lower_bound(points.begin(), points.end(), probe);
    return it != points.end() && it->a == a && it->c == c;
}

namespace {

// psi(a) = +1 test through exponents; psi(a) = -1 needs an even value order.
bool psi_is(const DedekindSum& spec, long a, int sign) {
    auto e = spec.psi().value_exponent(a);
    if (!e) return false;
    if (sign == 1) return *e == 0;
    const long m = spec.psi().value_order();
    return m % 2 == 0 && *e == m / 2;
}

bool unit_square_predicts(const DedekindSum& spec, long a, long c) {
    if (mul_mod(a, a, c) != 1) return false;
    return psi_is(spec, a, -spec.chi2().parity());
}

bool minus_one_square_predicts(const DedekindSum& spec, long a, long c) {
    if (mul_mod(a, a, c) != c - 1) return false;
    return psi_is(spec, a, 1);
}

// Membership in a k >= 2 scaling family whose k = 1 seed (1 + n d Q, d^2 Q)
// is a confirmed zero.
bool scaling_family_predicts(long a, long c, long level,
                             const std::function<bool(long, long)>& confirmed_zero) {
    for (long d = 1; d * d * level <= c; ++d) {
        const long seed_c = d * d * level;
        if (c % seed_c != 0) continue;
        const long k = c / seed_c;
        if (k < 2) continue;
        // a = 1 + k n d Q mod c forces kdQ | a - 1 with n determined mod d
        const long stride = k * d * level;
        const long am1 = mod_floor(a - 1, c);
        if (am1 % stride != 0) continue;
        const long n = (am1 / stride) % d;
        const long seed_a = mod_floor(1 + n * d * level, seed_c);
        if (confirmed_zero(seed_a, seed_c)) return true;
    }
    return false;
}

PredictedBy base_predicate(const std::vector<DedekindSum>& specs, long a, long c,
                           const std::function<bool(long, long)>& confirmed_zero) {
    if (a == 1) return PredictedBy::a_equals_1;
    for (const auto& spec : specs)
        if (unit_square_predicts(spec, a, c)) return PredictedBy::unit_square;
    for (const auto& spec : specs)
        if (minus_one_square_predicts(spec, a, c)) return PredictedBy::minus_one_square;
    if (scaling_family_predicts(a, c, specs.front().level(), confirmed_zero))
        return PredictedBy::scaling_family;
    return PredictedBy::none;
}

// Tag points in the documented predicate order: a-equals-1, reflection,
// unit-square, minus-one-square, scaling-family; first match wins.  The
// reflection tag requires the mirrored point to be predicted by a
// non-reflection predicate.
void annotate(std::vector<KernelPoint>& points, const std::vector<DedekindSum>& specs,
              const std::function<bool(long, long)>& confirmed_zero) {
    std::vector<PredictedBy> base(points.size());
    std::set<std::pair<long, long>> base_predicted;
    for (size_t i = 0; i < points.size(); ++i) {
        base[i] = base_predicate(specs, points[i].a, points[i].c, confirmed_zero);
        if (base[i] != PredictedBy::none) base_predicted.insert({points[i].c, points[i].a});
    }
    for (size_t i = 0; i < points.size(); ++i) {
        auto& p = points[i];
        if (p.a == 1) {
            p.predicted_by = PredictedBy::a_equals_1;
        } else if (base_predicted.count({p.c, p.c - p.a})) {
            p.predicted_by = PredictedBy::reflection;
        } else {
            p.predicted_by = base[i];
        }
    }
}

std::vector<long> scan_levels(long level, long c_max) {
    std::vector<long> cs;
    for (long c = level; c <= c_max; c += level) cs.push_back(c);
    return cs;
}

}  // namespace

ScanResult scan_kernel(const std::vector<DedekindSum>& specs, long c_max, Subgroup subgroup,
                       int threads) {
    if (specs.empty()) throw std::invalid_argument("scan_kernel: empty spec set");
    const long level = specs.front().level();
    for (const auto& s : specs)
        if (s.level() != level)
            throw std::invalid_argument("scan_kernel: all pairs must share the level");
    // cheapest inner loop first; ties broken by label for determinism
    std::vector<const DedekindSum*> ordered;
    for (const auto& s : specs) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(), [](const DedekindSum* x, const DedekindSum* y) {
        if (x->q1() != y->q1()) return x->q1() < y->q1();
        return x->label() < y->label();
    });

    const auto cs = scan_levels(level, c_max);
    std::vector<std::vector<KernelPoint>> per_c(cs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= cs.size()) return;
            const long c = cs[idx];
            auto& out = per_c[idx];
            const long step = subgroup == Subgroup::gamma1 ? level : 1;
            for (long a = 1; a < c; a += step) {
                if (std::gcd(a, c) != 1) continue;
                bool all_zero = true;
                for (const auto* spec : ordered)
                    if (!spec->is_zero(a, c)) { all_zero = false; break; }
                if (all_zero) out.push_back({a, c, a % level == 1, PredictedBy::none});
            }
        }
    };
    const int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ScanResult result;
    result.meta.q1 = specs.front().q1();
    result.meta.q2 = specs.front().q2();
    result.meta.c_max = c_max;
    result.meta.subgroup = subgroup;
    for (const auto& s : specs) result.meta.pair_labels.push_back(s.label());
    result.meta.scanned_label = specs.size() == 1 ? specs.front().label() : "*";
    for (auto& chunk : per_c)
        result.points.insert(result.points.end(), chunk.begin(), chunk.end());
    std::sort(result.points.begin(), result.points.end());

    const ScanResult* self = &result;
    annotate(result.points, specs,
             [self](long a, long c) { return self->contains(a, c); });
    return result;
}

ScanResult scan_intersection(long q1, long q2, long c_max, Subgroup subgroup, int threads) {
    std::vector<DedekindSum> specs;
    for (auto& [chi1, chi2] : character_pairs(q1, q2)) specs.emplace_back(chi1, chi2);
    ScanResult result = scan_kernel(specs, c_max, subgroup, threads);
    result.meta.intersection = true;
    return result;
}

std::vector<KernelPoint> predicted_kernel(const DedekindSum& spec, long c_max) {
    const long level = spec.level();
    std::set<std::pair<long, long>> seen;
    std::vector<KernelPoint> points;
    auto add = [&](long a, long c) {
        if (a <= 0 || a >= c) return;
        if (seen.insert({c, a}).second)
            points.push_back({a, c, a % level == 1, PredictedBy::none});
    };
    for (long c = level; c <= c_max; c += level) {
        add(1, c);
        for (long a = 2; a < c; ++a) {
            if (std::gcd(a, c) != 1) continue;
            if (unit_square_predicts(spec, a, c) || minus_one_square_predicts(spec, a, c))
                add(a, c);
        }
    }
    // scaling families seeded from directly-confirmed zeros
    for (long d = 1; d * d * level <= c_max; ++d) {
        const long seed_c = d * d * level;
        for (long n = 0; n < d; ++n) {
            const long seed_a = mod_floor(1 + n * d * level, seed_c);
            if (seed_c > 1 && std::gcd(seed_a, seed_c) != 1) continue;
            if (!spec.is_zero(seed_a, seed_c)) continue;
            for (long k = 2; k * seed_c <= c_max; ++k) {
                const long c = k * seed_c;
                const long shift = mul_mod(mul_mod(k, n, c), mul_mod(d, level, c), c);
                add(mod_floor(1 + shift, c), c);
            }
        }
    }
    // reflection closure (one pass; reflecting twice is the identity)
    const size_t base_count = points.size();
    for (size_t i = 0; i < base_count; ++i) add(points[i].c - points[i].a, points[i].c);
    std::sort(points.begin(), points.end());

    annotate(points, {spec}, [&spec](long a, long c) { return spec.is_zero(a, c); });
    return points;
}

SoundnessReport verify_prediction_soundness(const DedekindSum& spec, long c_max) {
    SoundnessReport report;
    const ScanResult scan = scan_kernel({spec}, c_max, Subgroup::gamma0);
    const auto predicted = predicted_kernel(spec, c_max);
    report.predicted = static_cast<long>(predicted.size());
    report.scanned = static_cast<long>(scan.points.size());
    for (const auto& p : predicted)
        if (!scan.contains(p.a, p.c)) report.breaches.push_back(p);
    for (const auto& p : scan.points)
        if (p.predicted_by == PredictedBy::none) report.unexplained.push_back(p);
    return report;
}

CommutatorReport commutator_experiment(long q1, long q2, int samples, std::uint64_t seed) {
    CommutatorReport report;
    const long level = q1 * q2;
    report.level = level;
    report.samples = samples;
    const Integer level_sq = Integer(level) * level;

    std::vector<DedekindSum> specs;
    for (auto& [chi1, chi2] : character_pairs(q1, q2)) specs.emplace_back(chi1, chi2);

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Mat22 x, y, k;
        for (;;) {  // keep the lower-left entry small enough to evaluate
            x = random_gamma(rng, level);
            y = random_gamma(rng, level);
            k = commutator(x, y);
            if (abs(k.c()) <= 2000000 && abs(k.a()) <= (Integer(1) << 62)) break;
        }
        if (!k.in_gamma(level_sq)) {
            report.failures.push_back("commutator outside Gamma(Q^2): " + k.to_string());
            continue;
        }
        ++report.in_gamma_level_squared;
        bool all_zero = true;
        for (const auto& spec : specs)
            if (!spec.at(k).is_zero()) {
                all_zero = false;
                report.failures.push_back("S_" + spec.label() +
                                          " nonzero on commutator " + k.to_string());
            }
        if (all_zero) ++report.vanish_all_pairs;
    }

    const Mat22 witness(1, 0, level, 1);
    report.witness_in_kernel = true;
    for (const auto& spec : specs)
        if (!spec.at(witness).is_zero()) report.witness_in_kernel = false;
    report.witness_outside_gamma = !witness.in_gamma(level_sq);
    return report;
}

std::vector<GaloisOrbit> galois_orbits(long q1, long q2) {
    const auto pairs = character_pairs(q1, q2);
    const long field_order = std::lcm(euler_phi(q1), euler_phi(q2));
    auto key = [](const CharacterPair& p) {
        return std::make_pair(p.first.index(), p.second.index());
    };
    std::set<std::pair<long, long>> assigned;
    std::vector<GaloisOrbit> orbits;
    for (const auto& pair : pairs) {
        if (assigned.count(key(pair))) continue;
        std::set<std::pair<long, long>> orbit_keys;
        std::vector<CharacterPair> members;
        for (long k = 1; k < field_order + 1; ++k) {
            if (std::gcd(k, field_order) != 1) continue;
            CharacterPair image{pair.first.galois_power(k), pair.second.galois_power(k)};
            if (orbit_keys.insert(key(image)).second) members.push_back(std::move(image));
        }
        std::sort(members.begin(), members.end(), [&](const CharacterPair& x,
                                                      const CharacterPair& y) {
            return key(x) < key(y);
        });
        for (const auto& m : members) assigned.insert(key(m));
        GaloisOrbit orbit{members.front(), members};
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [&](const GaloisOrbit& x, const GaloisOrbit& y) {
        return key(x.representative) < key(y.representative);
    });
    return orbits;
}

std::vector<OrbitScan> scan_with_orbit_dedup(long q1, long q2, long c_max, Subgroup subgroup,
                                             int threads, std::uint64_t seed) {
    std::vector<OrbitScan> out;
    const long level = q1 * q2;
    std::mt19937_64 rng(seed);
    for (const auto& orbit : galois_orbits(q1, q2)) {
        OrbitScan entry{orbit, ScanResult{}, OrbitScanAudit{}, 0.0};
        const DedekindSum rep(orbit.representative.first, orbit.representative.second);

        const auto start = std::chrono::steady_clock::now();
        entry.result = scan_kernel({rep}, c_max, subgroup, threads);
        for (const auto& member : orbit.members) {
            const std::string label = member.first.label() + "x" + member.second.label();
            if (label != entry.result.meta.scanned_label)
                entry.result.meta.pair_labels.push_back(label);
        }
        entry.result.meta.seed = seed;

        if (orbit.members.size() > 1) {
            const auto& other = orbit.members[1];
            const DedekindSum audit(other.first, other.second);
            entry.audit.audited_label = audit.label();
            // random points must vanish for both or neither
            for (int i = 0; i < 10; ++i) {
                const long c = level * rand_range(rng, 1, c_max / level);
                long a;
                do {
                    a = subgroup == Subgroup::gamma1
                            ? 1 + level * rand_range(rng, 0, c / level - 1)
                            : rand_range(rng, 1, c - 1);
                } while (std::gcd(a, c) != 1 || a >= c);
                ++entry.audit.sampled_points;
                if (rep.is_zero(a, c) != audit.is_zero(a, c)) entry.audit.matched = false;
            }
            // scan points of the representative must vanish for the member
            const size_t stride = std::max<size_t>(1, entry.result.points.size() / 10);
            for (size_t i = 0; i < entry.result.points.size(); i += stride) {
                const auto& p = entry.result.points[i];
                ++entry.audit.result_points;
                if (!audit.is_zero(p.a, p.c)) entry.audit.matched = false;
            }
        }
        entry.scan_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace dedekind
