#include "dedekind/dirichlet.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "dedekind/arith.hpp"

namespace dedekind {

namespace {

// Unit-group data for one modulus, shared between all characters mod q.
struct UnitGroup {
    long q = 1;
    // Per odd prime power p^e: discrete logs with respect to the Conrey
    // generator (smallest g that generates (Z/p^j)^* for every j).
    struct OddComponent {
        long pe;
        long phi;
        std::vector<long> dlog;  // index by n mod pe, -1 for non-units
    };
    std::vector<OddComponent> odd;
    // The 2^e component: n = (-1)^eps * 5^a mod 2^e (e >= 3);
    // for e == 2 only the sign part survives.
    bool has_two = false;
    long two_pe = 1;
    long two_pow = 1;  // 2^{e-2}, order of 5
    std::vector<int> eps;
    std::vector<long> dlog5;
};

long conrey_generator(long p) {
    // smallest primitive root mod p that stays primitive mod p^2
    const long phi = p - 1;
    auto pf = factorize(phi);
    for (long g = 2;; ++g) {
        bool ok = true;
        for (const auto& f : pf)
            if (pow_mod(g, phi / f.p, p) == 1) { ok = false; break; }
        if (!ok) continue;
        if (pow_mod(g, phi, p * p) == 1) continue;
        return g;
    }
}

std::shared_ptr<const UnitGroup> build_unit_group(long q) {
    auto ug = std::make_shared<UnitGroup>();
    ug->q = q;
    for (const auto& pp : factorize(q)) {
        if (pp.p == 2) {
            ug->has_two = true;
            ug->two_pe = pp.pe;
            if (pp.e >= 2) {
                ug->eps.assign(pp.pe, -1);
                ug->dlog5.assign(pp.pe, -1);
                ug->two_pow = pp.e >= 3 ? pp.pe / 4 : 1;
                long v = 1;
                for (long a = 0; a < ug->two_pow; ++a) {
                    ug->eps[v] = 0;
                    ug->dlog5[v] = a;
                    ug->eps[pp.pe - v] = 1;
                    ug->dlog5[pp.pe - v] = a;
                    v = (v * 5) % pp.pe;
                }
            }
            continue;
        }
        UnitGroup::OddComponent comp;
        comp.pe = pp.pe;
        comp.phi = pp.pe / pp.p * (pp.p - 1);
        comp.dlog.assign(pp.pe, -1);
        const long g = conrey_generator(pp.p);
        long v = 1;
        for (long a = 0; a < comp.phi; ++a) {
            comp.dlog[v] = a;
            v = mul_mod(v, g, pp.pe);
        }
        ug->odd.push_back(std::move(comp));
    }
    return ug;
}

std::shared_ptr<const UnitGroup> unit_group(long q) {
    static std::map<long, std::shared_ptr<const UnitGroup>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto ug = build_unit_group(q);
    cache.emplace(q, ug);
    return ug;
}

}  // namespace

DirichletCharacter::DirichletCharacter(long modulus, long index) : q_(modulus) {
    if (modulus < 1) throw std::invalid_argument("DirichletCharacter: modulus must be positive");
    index_ = mod_floor(index, modulus == 1 ? 1 : modulus);
    if (modulus == 1) index_ = 1;
    if (std::gcd(index_, q_) != 1)
        throw std::invalid_argument("DirichletCharacter: index not coprime to the modulus");

    auto ug = unit_group(q_);

    // Raw exponents live on zeta_R where R is the lcm of the cyclic pieces.
    struct Piece {
        long order;   // order of the cyclic piece
        long weight;  // exponent of the index in that piece
    };
    std::vector<Piece> pieces;
    std::vector<const UnitGroup::OddComponent*> comp_of;
    for (const auto& comp : ug->odd)
        pieces.push_back({comp.phi, comp.dlog[index_ % comp.pe]});
    long eps_m = 0, a_m = 0;
    if (ug->has_two && ug->two_pe >= 4) {
        eps_m = ug->eps[index_ % ug->two_pe];
        a_m = ug->dlog5[index_ % ug->two_pe];
    }

    long raw_order = 1;
    for (const auto& pc : pieces) raw_order = std::lcm(raw_order, pc.order);
    if (ug->has_two && ug->two_pe >= 4) {
        raw_order = std::lcm(raw_order, 2L);
        if (ug->two_pow > 1) raw_order = std::lcm(raw_order, ug->two_pow);
    }

    auto raw_exponent = [&](long n) -> long {
        long e = 0;
        size_t i = 0;
        for (const auto& comp : ug->odd) {
            const long an = comp.dlog[n % comp.pe];
            e = (e + (__int128)pieces[i].weight * an % comp.phi * (raw_order / comp.phi)) %
                raw_order;
            ++i;
        }
        if (ug->has_two && ug->two_pe >= 4) {
            const long r = n % ug->two_pe;
            e = (e + (eps_m & ug->eps[r]) * (raw_order / 2)) % raw_order;
            if (ug->two_pow > 1)
                e = (e + (__int128)a_m * ug->dlog5[r] % ug->two_pow * (raw_order / ug->two_pow)) %
                    raw_order;
        }
        return e;
    };

    exponent_.assign(q_, -1);
    long content = 0;  // gcd of all raw exponents
    for (long n = 0; n < q_; ++n) {
        if (std::gcd(n, q_) != 1) continue;
        const long e = raw_exponent(n == 0 ? 1 : n);
        exponent_[n] = e;
        content = std::gcd(content, e);
    }
    if (q_ == 1) exponent_.assign(1, 0);

    const long g = std::gcd(content, raw_order);
    order_ = g == 0 ? 1 : raw_order / g;
    const long scale = raw_order / order_;
    for (auto& e : exponent_)
        if (e >= 0) e = (e / scale) % order_;

    parity_ = 1;
    if (q_ > 2) {
        const long e = exponent_[q_ - 1];
        parity_ = (e == 0) ? 1 : -1;
    }

    // Conductor from the component structure.
    conductor_ = 1;
    {
        size_t i = 0;
        for (const auto& comp : ug->odd) {
            const long am = pieces[i].weight;
            ++i;
            if (am == 0) continue;
            long p = factorize(comp.pe)[0].p;
            int e = 0;
            for (long t = comp.pe; t > 1; t /= p) ++e;
            long v = am;
            int vp = 0;
            while (v % p == 0 && vp < e - 1) {
                v /= p;
                ++vp;
            }
            long cond = comp.pe;
            for (int k = 0; k < vp; ++k) cond /= p;
            conductor_ *= cond;
        }
        if (ug->has_two) {
            if (ug->two_pe == 2) {
                // (Z/2)^* is trivial
            } else if (a_m != 0) {
                long v = a_m;
                long cond = ug->two_pe;
                while (v % 2 == 0) {
                    v /= 2;
                    cond /= 2;
                }
                conductor_ *= cond;
            } else if (eps_m != 0) {
                conductor_ *= 4;
            }
        }
    }
}

std::string DirichletCharacter::label() const {
    return std::to_string(q_) + "." + std::to_string(index_);
}

std::optional<long> DirichletCharacter::value_exponent(long n) const {
    const long r = mod_floor(n, q_);
    if (exponent_[r] < 0) return std::nullopt;
    return exponent_[r];
}

std::optional<long> DirichletCharacter::value_exponent(const Integer& n) const {
    return value_exponent(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(q_)));
}

Cyclotomic DirichletCharacter::value(long n) const {
    auto e = value_exponent(n);
    if (!e) return Cyclotomic::zero(order_);
    return Cyclotomic::root_of_unity(order_, *e);
}

Cyclotomic DirichletCharacter::value(const Integer& n) const {
    auto e = value_exponent(n);
    if (!e) return Cyclotomic::zero(order_);
    return Cyclotomic::root_of_unity(order_, *e);
}

DirichletCharacter DirichletCharacter::galois_power(long k) const {
    const long kk = mod_floor(k, order_);
    if (std::gcd(kk, order_) != 1)
        throw std::invalid_argument("galois_power: exponent shares a factor with the order");
    return DirichletCharacter(q_, pow_mod(index_, kk, q_));
}

DirichletCharacter DirichletCharacter::conjugate() const {
    if (order_ <= 2) return *this;
    return galois_power(order_ - 1);
}

std::vector<DirichletCharacter> primitive_characters(long q) {
    if (q < 2) throw std::invalid_argument("primitive_characters: q must be at least 2");
    std::vector<DirichletCharacter> out;
    for (long m = 1; m < q; ++m) {
        if (std::gcd(m, q) != 1) continue;
        DirichletCharacter chi(q, m);
        if (chi.is_primitive()) out.push_back(std::move(chi));
    }
    return out;
}

std::vector<std::pair<DirichletCharacter, DirichletCharacter>> character_pairs(long q1, long q2) {
    std::vector<std::pair<DirichletCharacter, DirichletCharacter>> out;
    const auto c1 = primitive_characters(q1);
    const auto c2 = primitive_characters(q2);
    for (const auto& a : c1)
        for (const auto& b : c2)
            if (a.parity() * b.parity() == 1) out.emplace_back(a, b);
    return out;
}

DirichletCharacter character_from_label(const std::string& label) {
    const auto dot = label.find('.');
    if (dot == std::string::npos)
        throw std::invalid_argument("character label must look like \"q.i\"");
    const long q = std::stol(label.substr(0, dot));
    const long i = std::stol(label.substr(dot + 1));
    return DirichletCharacter(q, i);
}

Cyclotomic gauss_sum(const DirichletCharacter& chi) {
    if (!chi.is_primitive())
        throw std::invalid_argument("gauss_sum: character must be primitive");
    const long q = chi.modulus();
    const long target = std::lcm(chi.order(), q);
    std::vector<Integer> raw(target, 0);
    for (long n = 1; n < q; ++n) {
        auto e = chi.value_exponent(n);
        if (!e) continue;
        const long exp = mod_floor(*e * (target / chi.order()) + n * (target / q), target);
        raw[exp] += 1;
    }
    return Cyclotomic::from_integer_sums(target, raw, 1);
}

Cyclotomic bernoulli1(const DirichletCharacter& chi) {
    const long q = chi.modulus();
    std::vector<Integer> raw(chi.order(), 0);
    for (long a = 1; a < q; ++a) {
        auto e = chi.value_exponent(a);
        if (!e) continue;
        raw[*e] += a;
    }
    return Cyclotomic::from_integer_sums(chi.order(), raw, q);
}

Nebentypus::Nebentypus(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
    q_ = chi1.modulus() * chi2.modulus();
    order_ = std::lcm(chi1.order(), chi2.order());
    exponent_.assign(q_, -1);
    const long s1 = order_ / chi1.order();
    const long s2 = order_ / chi2.order();
    for (long n = 0; n < q_; ++n) {
        if (std::gcd(n, q_) != 1) continue;
        const auto e1 = chi1.value_exponent(n);
        const auto e2 = chi2.value_exponent(n);
        // conj(chi2) contributes order - e2
        const long conj2 = mod_floor(-*e2, chi2.order());
        exponent_[n] = mod_floor(*e1 * s1 + conj2 * s2, order_);
    }
}

bool Nebentypus::is_principal() const {
    for (long n = 0; n < q_; ++n)
        if (exponent_[n] > 0) return false;
    return true;
}

std::optional<long> Nebentypus::value_exponent(long n) const {
    const long r = mod_floor(n, q_);
    if (exponent_[r] < 0) return std::nullopt;
    return exponent_[r];
}

std::optional<long> Nebentypus::value_exponent(const Integer& n) const {
    return value_exponent(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(q_)));
}

Cyclotomic Nebentypus::value(long n) const {
    auto e = value_exponent(n);
    if (!e) return Cyclotomic::zero(order_);
    return Cyclotomic::root_of_unity(order_, *e);
}

Cyclotomic Nebentypus::value(const Integer& n) const {
    auto e = value_exponent(n);
    if (!e) return Cyclotomic::zero(order_);
    return Cyclotomic::root_of_unity(order_, *e);
}

}  // namespace dedekind
