#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "matchfab/analytic.hpp"

using namespace matchfab;

TEST_CASE("family counts") {
    const auto f1 = counts(Family::fractal, 1);
    CHECK(f1.n == 4);
    CHECK(f1.e == 4);
    const auto h3 = counts(Family::nonfractal, 3);
    CHECK(h3.n == 44);
    CHECK(h3.e == 64);
    const auto s2 = counts(Family::sierpinski, 2);
    CHECK(s2.n == 12);
    CHECK(s2.e == 18);
    CHECK_THROWS_AS(counts(Family::fractal, 0), DomainError);
}

TEST_CASE("lv and degree maps sum to n and 2e") {
    for (int g = 1; g <= 12; ++g) {
        const auto fc = counts(Family::fractal, g);
        BigInt vertices = 0, stubs = 0;
        for (const auto& [t, c] : fc.lv) {
            vertices += c;
            stubs += c * fc.degree_of.at(t);
        }
        CHECK(vertices == fc.n);
        CHECK(stubs == 2 * fc.e);
        CHECK(fc.lv.at(1) == 4);
        if (g > 1) CHECK(fc.lv.at(g) == 2 * pow4(g - 1));
        CHECK(fc.degree_of.at(g) == 2);
        CHECK(fc.degree_of.at(1) == pow2(g));
    }
}

TEST_CASE("matching size triples") {
    const auto t1 = fractal_matching_sizes(1);
    CHECK(t1.a == 0);
    CHECK(t1.b == 1);
    CHECK(t1.c == 2);
    const auto t2 = fractal_matching_sizes(2);
    CHECK(t2.a == 2);
    CHECK(t2.b == 3);
    CHECK(t2.c == 4);
    const auto t3 = fractal_matching_sizes(3);
    CHECK(t3.a == 10);
    CHECK(t3.b == 11);
    CHECK(t3.c == 12);
}

TEST_CASE("size recursion equals closed form up to g=30 and the max branches tie") {
    for (int g = 1; g <= 30; ++g) {
        const auto t = fractal_matching_sizes(g); // throws on any mismatch
        CHECK(t.c - t.a == 2);
        CHECK(t.b - t.a == 1);
        const auto br = fractal_size_recursion_branches(t);
        CHECK(br.b_args[0] == br.b_args[1]);
        CHECK(br.c_args[0] == br.c_args[1]);
        CHECK(br.c_args[1] == br.c_args[2]);
    }
}

TEST_CASE("matching count triples") {
    const auto c1 = fractal_matching_counts(1);
    CHECK(c1.phi == 1);
    CHECK(c1.varphi == 2);
    CHECK(c1.theta == 2);
    const auto c2 = fractal_matching_counts(2);
    CHECK(c2.phi == 16);
    CHECK(c2.varphi == 48);
    CHECK(c2.theta == 136);
    // frozen from the exhaustive-enumeration oracle run on F_3
    CHECK(fractal_matching_counts(3).theta == 80248832);
    CHECK(to_decimal(fractal_matching_counts(4).theta) == "573772321018215958743632314368");
    for (int g = 1; g <= 8; ++g) {
        const auto c = fractal_matching_counts(g);
        CHECK(c.phi > 0);
        CHECK(c.varphi > 0);
        CHECK(c.theta > 0);
    }
}

TEST_CASE("nonfractal perfect matching count") {
    CHECK(nonfractal_pm_count(1) == 2);
    CHECK(nonfractal_pm_count(2) == 8);
    CHECK(nonfractal_pm_count(3) == 512);
    CHECK(nonfractal_pm_exponent(6) == 459);
    CHECK(nonfractal_pm_count(6) == pow2(459));
}

TEST_CASE("exponent is an integer for every g up to 64") {
    for (int g = 1; g <= 64; ++g) {
        const BigInt raw = pow4(g) + 6 * g - 1;
        CHECK(raw % 9 == 0);
        CHECK(nonfractal_pm_exponent(g) * 9 == raw);
    }
}

TEST_CASE("sierpinski perfect matching count") {
    CHECK_THROWS_AS(sierpinski_pm_count(1), DomainError);
    CHECK(sierpinski_pm_count(2) == 8);
    CHECK(sierpinski_pm_count(3) == 128);
    CHECK(sierpinski_pm_exponent(4) == 19);
    CHECK(sierpinski_pm_exponent(5) == 55);
}

TEST_CASE("entropy estimates") {
    CHECK(entropy_estimate(BigInt(1), 10).z == 0.0);
    CHECK_THROWS_AS(entropy_estimate(BigInt(0), 10), DomainError);
    CHECK_THROWS_AS(entropy_estimate(BigInt(2), 9), DomainError);

    const auto est = entropy_estimate(nonfractal_pm_count(6), 2732);
    CHECK(est.log2_count == 459.0);
    CHECK(est.z == doctest::Approx(459.0 * std::log(2.0) / 1366.0));
}

TEST_CASE("entropy approaches ln2/3 monotonically") {
    const double limit = std::log(2.0) / 3.0;
    double prev_gap = 1.0;
    for (int g = 2; g <= 20; ++g) {
        const BigInt n = counts(Family::nonfractal, g).n;
        const double z = nonfractal_pm_exponent(g).get_d() * std::log(2.0) / (n.get_d() / 2.0);
        const double gap = std::abs(z - limit);
        CHECK(gap < prev_gap);
        // exact gap is ln2 (2g-1)/(4^g+2), comfortably below 4g/4^g
        CHECK(gap < 4.0 * g / std::pow(4.0, g));
        prev_gap = gap;
    }
    // the sierpinski formula drives to the same limit
    const double zs = sierpinski_pm_exponent(8).get_d() * std::log(2.0) /
                      (counts(Family::sierpinski, 8).n.get_d() / 2.0);
    CHECK(std::abs(zs - limit) < 5e-3 * limit);
}

TEST_CASE("closed-form average distances") {
    CHECK(avg_distance_closed(Family::fractal, 1) == make_rational(BigInt(4), BigInt(3)));
    CHECK(avg_distance_closed(Family::nonfractal, 1) == make_rational(BigInt(4), BigInt(3)));
    // both families coincide at g=2 (76/33), then split
    CHECK(avg_distance_closed(Family::fractal, 2) == make_rational(BigInt(76), BigInt(33)));
    CHECK(avg_distance_closed(Family::nonfractal, 2) == make_rational(BigInt(76), BigInt(33)));
    CHECK(avg_distance_closed(Family::fractal, 6) > avg_distance_closed(Family::nonfractal, 6));
    CHECK_THROWS_AS(avg_distance_closed(Family::sierpinski, 2), DomainError);
}

TEST_CASE("closed-form pearson") {
    CHECK_THROWS_AS(pearson_closed_fractal(1), DomainError);
    CHECK(pearson_closed_fractal(2) == -1);
    CHECK(pearson_closed_fractal(3) == make_rational(BigInt(-2), BigInt(3)));
    // disassortative throughout
    for (int g = 2; g <= 12; ++g) CHECK(pearson_closed_fractal(g) < 0);
}

TEST_CASE("closed-form knn maps") {
    const auto f3 = knn_closed(Family::fractal, 3);
    CHECK(f3.at(2) == 6);
    CHECK(f3.at(4) == 2);
    CHECK(f3.at(8) == 2);
    CHECK(f3.size() == 3);
    const auto f2 = knn_closed(Family::fractal, 2);
    CHECK(f2.at(4) == 2);
    const auto h3 = knn_closed(Family::nonfractal, 3);
    for (const auto& [d, v] : h3) CHECK(v == 4);
    CHECK(h3.size() == 3);
    CHECK_THROWS_AS(knn_closed(Family::sierpinski, 2), DomainError);
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::fractal, Family::nonfractal, Family::sierpinski})
        CHECK(family_from_string(to_string(f)) == f);
    CHECK(!family_from_string("farey"));
}
