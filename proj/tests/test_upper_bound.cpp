#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spgap/errors.hpp"
#include "spgap/family.hpp"
#include "spgap/upper_bound.hpp"

using namespace spgap;

namespace {

void check_sound(const Graph& g, const Certificate& c) {
    const double l = lambda1(g).lambda1;
    CHECK(c.max_quotient() <= c.bound);
    CHECK(l <= c.max_quotient() * (1 + 1e-9));
    CHECK(l <= c.vertex_pair_bound * (1 + 1e-9));
    // The two tents live in disjoint balls around the diametral pair.
    CHECK(2.0 * std::exp(c.k) <= c.diameter);
    for (const TentSide& s : c.sides) {
        CHECK(s.j >= 1);
        CHECK(s.j <= c.k - 1);
        CHECK(s.tent.nodes().back() <= std::exp(c.k) + 1e-9);
    }
}

}  // namespace

TEST_CASE("tent certificate on a long cycle") {
    const Graph c = named::cycle(1000);
    const Certificate cert = tent_certificate(c, 2.0, 1.0);
    // diam 500, so k = floor(ln 250) = 5.
    CHECK(cert.k == 5);
    CHECK(cert.bound == doctest::Approx((1.0 + std::log(3.0)) * 5.0 / std::exp(5.0)));
    check_sound(c, cert);
    CHECK(cert.ratio_within_bound);
}

TEST_CASE("tent certificate on a path has selection ratio 2") {
    const Graph p = named::path(100);
    const Certificate cert = tent_certificate(p, 1.0, 2.0);
    CHECK(cert.k == 3);
    for (const TentSide& s : cert.sides) {
        // rho == 1, so every shell has the same mass; E_0 is empty, which
        // makes j = 1 the minimizer with ratio 1.
        CHECK(s.selection_ratio == doctest::Approx(1.0));
        CHECK(s.j == 1);
    }
    const double L = std::exp(3.0) / 3.0;
    // Plateau L on E_1 and a fall of slope 1 across E_2:
    // quotient = L / (L^3 + L^3 / 3).
    CHECK(cert.sides[0].quotient == doctest::Approx(L / (L * L * L * 4.0 / 3.0)).epsilon(1e-12));
    check_sound(p, cert);
}

TEST_CASE("tent certificate preconditions") {
    CHECK_THROWS_AS(tent_certificate(named::path(11), 1.0, 2.0), InputError);  // diam 10, k = 1
    CHECK_THROWS_AS(tent_certificate(named::complete(6), 1.0, 2.0), InputError);
    // vol = 999 > 1 * 500^1 violates the volume hypothesis.
    CHECK_THROWS_AS(tent_certificate(named::cycle(999), 1.0, 1.0), InputError);
}

TEST_CASE("upper bound branches") {
    // Square grid: vol about diam^2 / 2, the boundary case of the tent branch.
    const Graph grid = named::grid(40, 40);
    const Theorem1Report t = verify_thm1(grid, 4);
    CHECK(t.branch == Theorem1Branch::tent);
    REQUIRE(t.certificate);
    check_sound(grid, *t.certificate);
    CHECK(t.bound_value == t.certificate->bound);
    CHECK(t.ratio > 0.0);

    // Cubic expander: vol = 1.5 V far exceeds diam^2.
    const Graph z = random_regular(200, 4);
    const Theorem1Report st = verify_thm1(z, 3);
    CHECK(st.branch == Theorem1Branch::spielman_teng);
    CHECK_FALSE(st.certificate);
    CHECK(st.c_fit == doctest::Approx(st.lambda1 * 300.0));

    CHECK_THROWS_AS(verify_thm1(named::complete(8), 7), InputError);  // diam 1
    CHECK_THROWS_AS(verify_thm1(named::grid(10, 10), 3), InputError);  // degree above d
}

TEST_CASE("upper bound ratio stays bounded on cycles") {
    std::vector<double> ratios;
    for (int k : {32, 64, 128, 256, 512, 1024}) {
        const Theorem1Report r = verify_thm1(named::cycle(k), 2);
        const double d = k / 2;
        const double closed = 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / k));
        CHECK(r.lambda1 == doctest::Approx(closed).epsilon(1e-9));
        CHECK(r.ratio == doctest::Approx(closed * std::pow(d / std::log(d), 2)).epsilon(1e-9));
        ratios.push_back(r.ratio);
        if (r.certificate) check_sound(named::cycle(k), *r.certificate);
    }
    CHECK(*std::max_element(ratios.begin(), ratios.end()) <= 4.0 * std::numbers::pi * std::numbers::pi / 4.0);
    // The ratio decreases like 1/ln^2(diam).
    CHECK(ratios.back() < ratios.front());
}
