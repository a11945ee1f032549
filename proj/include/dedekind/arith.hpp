#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dedekind {

inline long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

inline long pow_mod(long base, long exp, long m) {
    if (m == 1) return 0;
    long result = 1;
    long b = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

inline long inv_mod(long a, long m) {
    long g = m, x = 0, x1 = 1, a0 = mod_floor(a, m);
    while (a0 != 0) {
        long q = g / a0;
        g -= q * a0;
        std::swap(g, a0);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    return mod_floor(x, m);
}

struct PrimePower {
    long p;
    int e;
    long pe;
};

inline std::vector<PrimePower> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            PrimePower pp{p, 0, 1};
            while (n % p == 0) {
                n /= p;
                ++pp.e;
                pp.pe *= p;
            }
            out.push_back(pp);
        }
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

inline long euler_phi(long n) {
    long phi = 1;
    for (const auto& pp : factorize(n)) phi *= pp.pe / pp.p * (pp.p - 1);
    return phi;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> divs{1};
    for (const auto& pp : factorize(n)) {
        const size_t count = divs.size();
        long q = 1;
        for (int i = 0; i < pp.e; ++i) {
            q *= pp.p;
            for (size_t j = 0; j < count; ++j) divs.push_back(divs[j] * q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline bool coprime(long a, long b) { return std::gcd(a, b) == 1; }

}  // namespace dedekind
