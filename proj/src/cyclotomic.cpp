#include "dedekind/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dedekind/arith.hpp"

namespace dedekind {

namespace {

// Exact division of a monic-divisor polynomial quotient over Z.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& div) {
    std::vector<Integer> rem = num;
    const size_t dn = div.size() - 1;
    if (rem.size() <= dn) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<Integer> quot(rem.size() - dn, 0);
    for (size_t k = rem.size(); k-- > dn;) {
        Integer c = rem[k];
        if (c == 0) continue;
        quot[k - dn] = c;
        for (size_t i = 0; i <= dn; ++i) rem[k - dn + i] -= c * div[i];
    }
    for (size_t i = 0; i < dn; ++i)
        if (rem[i] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::map<long, std::vector<Integer>>& phi_cache() {
    static std::map<long, std::vector<Integer>> cache;
    return cache;
}
std::mutex phi_mutex;

std::vector<Integer> cyclotomic_polynomial_locked(long n) {
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    std::vector<Integer> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        poly = poly_div_exact(poly, cyclotomic_polynomial_locked(d));
    }
    phi_cache()[n] = poly;
    return poly;
}

std::map<long, std::shared_ptr<const CycloTable>>& table_cache() {
    static std::map<long, std::shared_ptr<const CycloTable>> cache;
    return cache;
}
std::mutex table_mutex;

std::shared_ptr<const CycloTable> build_table(long order) {
    auto tab = std::make_shared<CycloTable>();
    tab->order = order;
    tab->min_poly = cyclotomic_polynomial_locked(order);
    tab->degree = static_cast<long>(tab->min_poly.size()) - 1;
    const long deg = tab->degree;
    // Enough rows for products (2*deg - 2), Galois images and embeddings
    // into this order (order - 1).
    tab->rows_max = std::max(2 * deg - 2, order - 1);
    tab->rows_max = std::max(tab->rows_max, deg - 1);
    for (long k = deg; k <= tab->rows_max; ++k) {
        std::vector<Integer> row(deg, 0);
        if (k == deg) {
            for (long i = 0; i < deg; ++i) row[i] = -tab->min_poly[i];
        } else {
            const auto& prev = tab->rows[k - deg - 1];
            // multiply previous row by x, fold the overflow through row 0
            Integer top = prev[deg - 1];
            for (long i = deg - 1; i > 0; --i) row[i] = prev[i - 1];
            row[0] = 0;
            if (top != 0)
                for (long i = 0; i < deg; ++i) row[i] += top * tab->rows[0][i];
        }
        tab->rows.push_back(std::move(row));
    }
    tab->rows_fit_i64 = true;
    for (const auto& row : tab->rows)
        for (const auto& v : row)
            if (!v.fits_slong_p()) tab->rows_fit_i64 = false;
    if (tab->rows_fit_i64) {
        tab->rows_i64.reserve(tab->rows.size());
        for (const auto& row : tab->rows) {
            std::vector<long> r(row.size());
            for (size_t i = 0; i < row.size(); ++i) r[i] = row[i].get_si();
            tab->rows_i64.push_back(std::move(r));
        }
    }
    return tab;
}

// Reduce raw power-basis coefficients (any degree the table covers) to the
// canonical degree-phi(n) form.
std::vector<Rational> reduce_raw(long order, std::vector<Rational> raw) {
    auto tab = cyclo_table(order);
    const long deg = tab->degree;
    if (static_cast<long>(raw.size()) > tab->rows_max + 1)
        throw std::logic_error("reduce_raw: exponent beyond table");
    for (long k = static_cast<long>(raw.size()); k-- > deg;) {
        if (raw[k] == 0) continue;
        const auto& row = tab->rows[k - deg];
        for (long i = 0; i < deg; ++i)
            if (row[i] != 0) raw[i] += raw[k] * Rational(row[i]);
        raw[k] = 0;
    }
    raw.resize(deg);
    return raw;
}

std::vector<Rational> zero_coeffs(long order) {
    return std::vector<Rational>(euler_phi(order), Rational(0));
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclotomic_polynomial_locked(n);
}

std::shared_ptr<const CycloTable> cyclo_table(long order) {
    if (order < 1) throw std::invalid_argument("cyclo_table: order must be positive");
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = table_cache().find(order);
        if (it != table_cache().end()) return it->second;
    }
    std::shared_ptr<const CycloTable> tab;
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        tab = build_table(order);
    }
    std::lock_guard<std::mutex> lock(table_mutex);
    auto [it, inserted] = table_cache().emplace(order, tab);
    return it->second;
}

Cyclotomic Cyclotomic::zero(long order) { return Cyclotomic(order, zero_coeffs(order)); }

Cyclotomic Cyclotomic::root_of_unity(long order, long exp) {
    if (order < 1) throw std::invalid_argument("root_of_unity: order must be positive");
    exp = mod_floor(exp, order);
    std::vector<Rational> raw(exp + 1, Rational(0));
    raw[exp] = Rational(1);
    return Cyclotomic(order, reduce_raw(order, std::move(raw)));
}

Cyclotomic Cyclotomic::from_power_sums(long order, std::vector<Rational> raw) {
    return Cyclotomic(order, reduce_raw(order, std::move(raw)));
}

Cyclotomic Cyclotomic::from_integer_sums(long order, const std::vector<Integer>& raw,
                                         const Integer& denom) {
    if (denom == 0) throw std::invalid_argument("from_integer_sums: zero denominator");
    std::vector<Rational> coeff(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) coeff[i] = make_rational(raw[i], denom);
    return Cyclotomic(order, reduce_raw(order, std::move(coeff)));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::embedded(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("embedded: target order not a multiple");
    const long step = m / order_;
    std::vector<Rational> raw((coeff_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) raw[i * step] = coeff_[i];
    return Cyclotomic(m, reduce_raw(m, std::move(raw)));
}

Cyclotomic Cyclotomic::galois(long k) const {
    const long kk = mod_floor(k, order_);
    if (std::gcd(kk, order_) != 1)
        throw std::invalid_argument("galois: exponent not coprime to the order");
    if (order_ == 1 || kk == 1) return *this;
    std::vector<Rational> raw(order_, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        raw[(i * kk) % order_] += coeff_[i];
    }
    return Cyclotomic(order_, reduce_raw(order_, std::move(raw)));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(order_ - 1 == 0 ? 1 : order_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse: zero has no inverse");
    // extended Euclid in Q[x] against Phi_order
    auto tab = cyclo_table(order_);
    std::vector<Rational> r0(tab->min_poly.size());
    for (size_t i = 0; i < tab->min_poly.size(); ++i) r0[i] = Rational(tab->min_poly[i]);
    std::vector<Rational> r1 = coeff_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    auto deg = [](const std::vector<Rational>& p) { return static_cast<long>(p.size()) - 1; };
    while (deg(r1) > 0) {
        std::vector<Rational> q(deg(r0) - deg(r1) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (long k = deg(rem); k >= deg(r1); --k) {
            if (rem[k] == 0) continue;
            Rational c = rem[k] / r1.back();
            q[k - deg(r1)] = c;
            for (long i = 0; i <= deg(r1); ++i) rem[k - deg(r1) + i] -= c * r1[i];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) rem.push_back(Rational(0));
        // s_new = s0 - q * s1
        std::vector<Rational> snew(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    if (r1.empty() || r1[0] == 0)
        throw std::logic_error("inverse: Phi_n not coprime to a nonzero element");
    const Rational scale = Rational(1) / r1[0];
    std::vector<Rational> raw(s1.size(), Rational(0));
    for (size_t i = 0; i < s1.size(); ++i) raw[i] = scale * s1[i];
    return Cyclotomic(order_, reduce_raw(order_, std::move(raw)));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * M_PI / static_cast<double>(order_);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        const double angle = step * static_cast<double>(i);
        acc += coeff_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    if (is_rational()) return coeff_[0].get_str();
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        Rational c = coeff_[i];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "z" << order_;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> coeff = coeff_;
    for (auto& c : coeff) c = -c;
    return Cyclotomic(order_, std::move(coeff));
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
    const long m = std::lcm(x.order_, y.order_);
    Cyclotomic a = x.embedded(m), b = y.embedded(m);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
    return a;
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    const long m = std::lcm(x.order_, y.order_);
    Cyclotomic a = x.embedded(m), b = y.embedded(m);
    std::vector<Rational> raw(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j) {
            if (b.coeff_[j] == 0) continue;
            raw[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return Cyclotomic::from_power_sums(m, std::move(raw));
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& x) {
    std::vector<Rational> coeff = x.coeff_;
    for (auto& c : coeff) c *= r;
    return Cyclotomic(x.order_, std::move(coeff));
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    const long m = std::lcm(x.order_, y.order_);
    return x.embedded(m).coeff_ == y.embedded(m).coeff_;
}

}  // namespace dedekind
