#include "dedekind/sl2.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "dedekind/arith.hpp"

namespace dedekind {

Mat22::Mat22(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
        throw std::invalid_argument("Mat22: determinant must be 1");
}

Mat22 operator*(const Mat22& x, const Mat22& y) {
    return Mat22(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                 x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

Mat22 Mat22::power(long k) const {
    Mat22 base = k < 0 ? inverse() : *this;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Mat22 acc;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

SubgroupFlags Mat22::subgroup_flags(const Integer& level) const {
    SubgroupFlags f;
    f.gamma0 = c_ % level == 0;
    f.gamma1 = f.gamma0 && (a_ - 1) % level == 0 && (d_ - 1) % level == 0;
    f.gamma = f.gamma1 && b_ % level == 0;
    return f;
}

bool Mat22::in_gamma1(const Integer& level) const { return subgroup_flags(level).gamma1; }
bool Mat22::in_gamma(const Integer& level) const { return subgroup_flags(level).gamma; }

std::string Mat22::to_string() const {
    return a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str();
}

Mat22 Mat22::parse(const std::string& text) {
    std::vector<Integer> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.emplace_back(item);
    if (entries.size() != 4)
        throw std::invalid_argument("Mat22::parse: expected \"a,b,c,d\"");
    return Mat22(entries[0], entries[1], entries[2], entries[3]);
}

Mat22 complete_column(const Integer& a, const Integer& c) {
    if (gcd(a, c) != 1)
        throw std::invalid_argument("complete_column: gcd(a, c) must be 1");
    if (c == 0) return Mat22(a, 0, 0, a);  // a = +-1 here
    Integer cc = abs(c);
    Integer d;
    if (mpz_invert(d.get_mpz_t(), a.get_mpz_t(), cc.get_mpz_t()) == 0)
        throw std::invalid_argument("complete_column: no inverse");  // unreachable
    Integer b = (a * d - 1) / c;
    return Mat22(a, b, c, d);
}

Mat22 fricke_partner(const Mat22& gamma, long q1, long q2) {
    const Integer level = Integer(q1) * q2;
    if (gamma.c() % level != 0)
        throw std::invalid_argument("fricke_partner: matrix not in Gamma0(q1*q2)");
    const Integer c_over = gamma.c() / level;
    return Mat22(gamma.d(), -c_over, -gamma.b() * level, gamma.a());
}

std::array<Integer, 4> phi_map(const Mat22& m, const Integer& level) {
    if (!m.in_gamma(level))
        throw std::invalid_argument("phi_map: matrix not in Gamma(Q)");
    auto entry = [&](const Integer& x, bool diagonal) {
        Integer t = (x - (diagonal ? 1 : 0)) / level;
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), level.get_mpz_t());
        return r;
    };
    return {entry(m.a(), true), entry(m.b(), false), entry(m.c(), false), entry(m.d(), true)};
}

Mat22 scaling_family(long n, long d, long k, long level) {
    const Integer kq = Integer(k) * level;
    return Mat22(1 + kq * n * d, -kq * n * n, kq * d * d, 1 - kq * n * d);
}

Mat22 commutator(const Mat22& x, const Mat22& y) {
    return x * y * x.inverse() * y.inverse();
}

namespace {

const Mat22& shear_upper() {
    static const Mat22 t(1, 1, 0, 1);
    return t;
}

Mat22 lower_shear(long level, long exp) {
    return Mat22(1, 0, Integer(level) * exp, 1);
}

}  // namespace

namespace {

// Entry cap keeps |c| of pairwise products small enough for the O(c)
// finite-sum evaluation.
constexpr long kSampleEntryCap = 2500;

bool entries_small(const Mat22& m) {
    return abs(m.a()) <= kSampleEntryCap && abs(m.b()) <= kSampleEntryCap &&
           abs(m.c()) <= kSampleEntryCap && abs(m.d()) <= kSampleEntryCap;
}

}  // namespace

Mat22 random_gamma0(std::mt19937_64& rng, long level) {
    for (;;) {
        // unit column completion times a short word in T and (1 0; Q 1)
        Mat22 m;
        if (rand_range(rng, 0, 1) == 1) {
            long u = 1;
            do {
                u = rand_range(rng, 1, level - 1);
            } while (std::gcd(u, level) != 1);
            m = complete_column(u, level);
        }
        const int len = static_cast<int>(rand_range(rng, 1, 3));
        for (int i = 0; i < len; ++i) {
            long e = rand_range(rng, -3, 3);
            if (e == 0) e = 1;
            m = m * (rand_range(rng, 0, 1) ? shear_upper().power(e) : lower_shear(level, e));
        }
        if (entries_small(m)) return m;
    }
}

Mat22 random_gamma1(std::mt19937_64& rng, long level) {
    for (;;) {
        Mat22 m;
        const int len = static_cast<int>(rand_range(rng, 1, 3));
        for (int i = 0; i < len; ++i) {
            long e = rand_range(rng, -3, 3);
            if (e == 0) e = 1;
            m = m * (rand_range(rng, 0, 1) ? shear_upper().power(e) : lower_shear(level, e));
        }
        if (entries_small(m)) return m;
    }
}

Mat22 random_gamma(std::mt19937_64& rng, long level) {
    // words in A = (1 Q; 0 1), B = (1 0; Q 1) and conjugates by
    // U = (1 0; 1 1); Gamma(Q) is normal in SL2(Z).
    static const Mat22 u(1, 0, 1, 1);
    Mat22 m;
    const int len = static_cast<int>(rand_range(rng, 1, 2));
    for (int i = 0; i < len; ++i) {
        long e = rand_range(rng, -2, 2);
        if (e == 0) e = 1;
        Mat22 gen = rand_range(rng, 0, 1) ? Mat22(1, Integer(level) * e, 0, 1)
                                          : lower_shear(level, e);
        switch (rand_range(rng, 0, 2)) {
            case 1: gen = u * gen * u.inverse(); break;
            case 2: gen = u.inverse() * gen * u; break;
            default: break;
        }
        m = m * gen;
    }
    return m;
}

}  // namespace dedekind
