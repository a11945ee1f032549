#include <doctest.h>

#include <complex>
#include <random>

#include "dedekind/cyclotomic.hpp"

using namespace dedekind;

namespace {

Cyclotomic random_element(std::mt19937_64& rng, long order) {
    const long deg = static_cast<long>(cyclo_table(order)->degree);
    std::vector<Rational> raw(deg);
    for (long i = 0; i < deg; ++i)
        raw[i] = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    for (auto& r : raw) r.canonicalize();
    return Cyclotomic::from_power_sums(order, std::move(raw));
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("additive and multiplicative identities") {
    const auto z4 = Cyclotomic::root_of_unity(4, 1);
    CHECK(z4 + Cyclotomic::zero(4) == z4);
    CHECK(z4 * Cyclotomic::one() == z4);
    CHECK(z4 * z4 == Cyclotomic(Rational(-1)));
}

TEST_CASE("sum of primitive cube roots is -1") {
    const auto z3 = Cyclotomic::root_of_unity(3, 1);
    const auto z3sq = Cyclotomic::root_of_unity(3, 2);
    CHECK(z3 + z3sq == Cyclotomic(Rational(-1)));
    CHECK((z3 + z3sq + Cyclotomic::one()).is_zero());
}

TEST_CASE("(z3 - z3^2)^2 = -3") {
    const auto d = Cyclotomic::root_of_unity(3, 1) - Cyclotomic::root_of_unity(3, 2);
    CHECK(d * d == Cyclotomic(Rational(-3)));
}

TEST_CASE("mixed-order arithmetic lands in the lcm order") {
    const auto x = Cyclotomic::root_of_unity(4, 1) + Cyclotomic::root_of_unity(3, 1);
    CHECK(x.order() == 12);
    const std::complex<double> expected =
        std::complex<double>(0.0, 1.0) +
        std::exp(std::complex<double>(0.0, 2.0 * M_PI / 3.0));
    CHECK(close(x.to_complex(), expected, 1e-12));
}

TEST_CASE("complex embedding spot values") {
    CHECK(close(Cyclotomic::root_of_unity(4, 1).to_complex(), {0.0, 1.0}, 1e-12));
    CHECK(close(Cyclotomic(Rational(1, 3)).to_complex(), {1.0 / 3.0, 0.0}, 1e-12));
    const auto d = Cyclotomic::root_of_unity(3, 1) - Cyclotomic::root_of_unity(3, 2);
    CHECK(close(d.to_complex(), {0.0, std::sqrt(3.0)}, 1e-12));
}

TEST_CASE("conjugation") {
    const auto z4 = Cyclotomic::root_of_unity(4, 1);
    CHECK(z4.conjugate() == -z4);
    CHECK(Cyclotomic(Rational(7, 3)).conjugate() == Cyclotomic(Rational(7, 3)));
    CHECK(Cyclotomic::root_of_unity(10, 1).conjugate() == Cyclotomic::root_of_unity(10, 9));
}

TEST_CASE("galois action") {
    const auto z4 = Cyclotomic::root_of_unity(4, 1);
    CHECK(z4.galois(3) == Cyclotomic::root_of_unity(4, 3));
    CHECK(z4.galois(3) == -z4);
    CHECK(z4.galois(1) == z4);
    CHECK(Cyclotomic(Rational(5, 2)).galois(7) == Cyclotomic(Rational(5, 2)));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(4, 1).galois(2), std::invalid_argument);

    // composition: sigma_k . sigma_m = sigma_{km}
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_element(rng, 12);
        CHECK(x.galois(5).galois(7) == x.galois(35 % 12));
    }
}

TEST_CASE("galois is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (long order : {5L, 8L, 12L}) {
        for (int i = 0; i < 10; ++i) {
            const auto x = random_element(rng, order);
            const auto y = random_element(rng, order);
            const long k = order == 8 ? 3 : order - 1;
            CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
            CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
        }
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(23);
    for (long order : {4L, 6L, 10L}) {
        for (int i = 0; i < 10; ++i) {
            const auto x = random_element(rng, order);
            const auto y = random_element(rng, order);
            const auto z = random_element(rng, order);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Cyclotomic::one());
            }
        }
    }
}

TEST_CASE("embedding round trip is the identity") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        const auto x = random_element(rng, 6);
        const auto up = x.embedded(24);
        CHECK(up == x);  // equality embeds into the lcm order
        CHECK(up.to_complex().real() == doctest::Approx(x.to_complex().real()).epsilon(1e-12));
    }
}

TEST_CASE("embedding respects arithmetic numerically") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 10; ++i) {
        const auto x = random_element(rng, 12);
        const auto y = random_element(rng, 12);
        CHECK(close((x + y).to_complex(), x.to_complex() + y.to_complex(), 1e-10));
        CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex(), 1e-10));
    }
}

TEST_CASE("zero detection is exact") {
    CHECK(Cyclotomic().is_zero());
    const auto z5 = Cyclotomic::root_of_unity(5, 1);
    CHECK_FALSE(z5.is_zero());
    // 1 + z5 + z5^2 + z5^3 + z5^4 = 0
    auto sum = Cyclotomic::one();
    for (int k = 1; k < 5; ++k) sum = sum + Cyclotomic::root_of_unity(5, k);
    CHECK(sum.is_zero());
}

TEST_CASE("rational detection and rendering") {
    CHECK(Cyclotomic(Rational(2, 3)).is_rational());
    CHECK(Cyclotomic(Rational(2, 3)).to_string() == "2/3");
    CHECK(Cyclotomic().to_string() == "0");
    CHECK_FALSE(Cyclotomic::root_of_unity(8, 1).is_rational());
}
