#include <doctest.h>

#include <random>

#include "dedekind/sl2.hpp"

using namespace dedekind;

TEST_CASE("construction checks the determinant") {
    CHECK_THROWS_AS(Mat22(1, 1, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(Mat22(2, 1, 9, 5));
}

TEST_CASE("products and inverses") {
    const Mat22 g(2, 1, 9, 5);
    CHECK(g * Mat22::identity() == g);
    CHECK(g * g.inverse() == Mat22::identity());
    CHECK(Mat22(1, 1, 0, 1) * Mat22(1, 0, 25, 1) == Mat22(26, 1, 25, 1));
}

TEST_CASE("subgroup flags") {
    const auto f1 = Mat22(1, 0, 25, 1).subgroup_flags(25);
    CHECK(f1.gamma0);
    CHECK(f1.gamma1);
    CHECK(f1.gamma);

    const auto f2 = Mat22(26, 1, 25, 1).subgroup_flags(25);
    CHECK(f2.gamma0);
    CHECK(f2.gamma1);
    CHECK_FALSE(f2.gamma);

    const auto f3 = Mat22(2, 1, 9, 5).subgroup_flags(9);
    CHECK(f3.gamma0);
    CHECK_FALSE(f3.gamma1);
    CHECK_FALSE(f3.gamma);
}

TEST_CASE("column completion") {
    CHECK(complete_column(1, 25) == Mat22(1, 0, 25, 1));
    CHECK(complete_column(2, 9) == Mat22(2, 1, 9, 5));
    CHECK(complete_column(1, 0) == Mat22::identity());
    CHECK(complete_column(-1, 0) == Mat22(-1, 0, 0, -1));
    CHECK_THROWS_AS(complete_column(3, 9), std::invalid_argument);

    // first column preserved, canonical 0 <= d < |c|
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const long c = rand_range(rng, 1, 400);
        long a;
        do {
            a = rand_range(rng, -400, 400);
        } while (std::gcd(a, c) != 1);
        const Mat22 m = complete_column(a, c);
        CHECK(m.a() == a);
        CHECK(m.c() == c);
        CHECK(m.d() >= 0);
        CHECK(m.d() < c);
    }
}

TEST_CASE("fricke partner") {
    CHECK(fricke_partner(Mat22(1, 0, 25, 1), 5, 5) == Mat22(1, -1, 0, 1));
    CHECK(fricke_partner(Mat22(2, 1, 9, 5), 3, 3) == Mat22(5, -1, -9, 2));
    CHECK(fricke_partner(Mat22::identity(), 3, 5) == Mat22::identity());
    CHECK_THROWS_AS(fricke_partner(Mat22(1, 1, 0, 1) * Mat22(1, 0, 5, 1), 3, 3),
                    std::invalid_argument);

    // involution, and the partner stays in Gamma0
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Mat22 g = random_gamma0(rng, 15);
        const Mat22 partner = fricke_partner(g, 3, 5);
        CHECK(partner.in_gamma0(15));
        CHECK(fricke_partner(partner, 3, 5) == g);
    }
}

TEST_CASE("phi map") {
    const long q = 7;
    CHECK(phi_map(Mat22(1, q, 0, 1), q) == std::array<Integer, 4>{0, 1, 0, 0});
    CHECK(phi_map(Mat22::identity(), q) == std::array<Integer, 4>{0, 0, 0, 0});
    CHECK_THROWS_AS(phi_map(Mat22(1, 1, 0, 1), q), std::invalid_argument);

    // I + QA with A = (nd, -n^2; d^2, -nd) maps to A mod Q
    const Mat22 m = scaling_family(2, 3, 1, q);
    const auto img = phi_map(m, q);
    CHECK(img[0] == 6);
    CHECK(img[1] == (-4 % q + q) % q);
    CHECK(img[2] == 9 % q);
    CHECK(img[3] == (q - 6) % q);

    std::mt19937_64 rng(29);
    for (long level : {6L, 9L, 30L}) {
        for (int i = 0; i < 50; ++i) {
            const Mat22 x = random_gamma(rng, level);
            const Mat22 y = random_gamma(rng, level);
            const auto fx = phi_map(x, level);
            const auto fy = phi_map(y, level);
            const auto fxy = phi_map(x * y, level);
            for (int k = 0; k < 4; ++k)
                CHECK(fxy[k] == (fx[k] + fy[k]) % level);  // homomorphism
            CHECK((fx[0] + fx[3]) % level == 0);           // trace = 0 mod Q
        }
    }
}

TEST_CASE("scaling family") {
    CHECK(scaling_family(0, 1, 3, 25) == Mat22(1, 0, 75, 1));
    CHECK(scaling_family(4, 7, 0, 9) == Mat22::identity());
    CHECK(scaling_family(1, 2, 1, 25) == Mat22(51, -25, 100, -49));

    for (long k = -3; k <= 3; ++k)
        CHECK(scaling_family(2, 3, k, 10) == scaling_family(2, 3, 1, 10).power(k));
}

TEST_CASE("commutators") {
    const Mat22 x(1, 9, 0, 1), y(1, 0, 9, 1);
    CHECK(commutator(x, x) == Mat22::identity());
    const Mat22 k = commutator(x, y);
    CHECK(k == Mat22(6643, -729, 729, -80));
    CHECK(k.in_gamma(81));

    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const Mat22 a = random_gamma(rng, 9);
        const Mat22 b = random_gamma(rng, 9);
        CHECK(commutator(a, b).in_gamma(81));
    }
}

TEST_CASE("matrix parsing and rendering") {
    const Mat22 g(2, 1, 9, 5);
    CHECK(g.to_string() == "2,1,9,5");
    CHECK(Mat22::parse("2,1,9,5") == g);
    CHECK_THROWS_AS(Mat22::parse("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Mat22::parse("1,1,1,1"), std::invalid_argument);
}

TEST_CASE("samplers stay in their subgroups") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        CHECK(random_gamma0(rng, 15).in_gamma0(15));
        CHECK(random_gamma1(rng, 15).in_gamma1(15));
        CHECK(random_gamma(rng, 15).in_gamma(15));
    }
}
