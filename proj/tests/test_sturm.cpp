#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "spgap/errors.hpp"
#include "spgap/family.hpp"
#include "spgap/sturm.hpp"

using namespace spgap;

namespace {

StepFunction half_cells(std::vector<std::int64_t> cells) { return StepFunction::from_half_cells(cells); }

}  // namespace

TEST_CASE("constant sigma reproduces the Neumann spectrum of an interval") {
    constexpr double pi = std::numbers::pi;
    CHECK(neumann_lambda1(constant_sigma(pi, 1e-3)) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(neumann_lambda1(constant_sigma(1.0, 1e-3)) == doctest::Approx(pi * pi).epsilon(1e-4));
    CHECK(neumann_lambda1(constant_sigma(5.0, 1e-2, 7.0)) ==
          doctest::Approx(pi * pi / 25.0).epsilon(1e-4));
}

TEST_CASE("discretization error is second order") {
    const double exact = std::numbers::pi * std::numbers::pi / 4.0;
    const double e1 = std::abs(neumann_lambda1(constant_sigma(2.0, 0.04)) - exact);
    const double e2 = std::abs(neumann_lambda1(constant_sigma(2.0, 0.02)) - exact);
    CHECK(e1 > 0.0);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("rotation invariance threshold") {
    const SigmaProfile long_sigma = constant_sigma(100.0, 0.05);
    CHECK(invariance_threshold_check(long_sigma, neumann_lambda1(long_sigma)));
    const SigmaProfile short_sigma = constant_sigma(0.1, 0.001);
    CHECK_FALSE(invariance_threshold_check(short_sigma, neumann_lambda1(short_sigma)));
}

TEST_CASE("smoothing a step keeps sigma inside the band") {
    // rho = 3 on [0, 5), 6 on [5, 10)
    std::vector<std::int64_t> cells(20, 3);
    for (int i = 10; i < 20; ++i) cells[i] = 6;
    const StepFunction rho = half_cells(cells);
    const SigmaProfile s = smooth_sigma(rho, 1.0 / 64.0);
    CHECK(s.R == doctest::Approx(10.0));
    CHECK(s.interior_band <= 2.0);
    CHECK(s.max_curvature <= kSigmaCurvatureCap);
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        const double t = s.t(i);
        if (t <= 1.0 || t >= 9.0) CHECK(s.samples[i] == doctest::Approx(1.0));
        if (t >= 2.5 && t <= 4.5) CHECK(s.samples[i] == doctest::Approx(3.0));
        if (t >= 5.5 && t <= 7.0) CHECK(s.samples[i] == doctest::Approx(6.0));
    }
    // Monotone across the interior step.
    for (std::size_t i = 1; i < s.samples.size(); ++i) {
        const double t = s.t(i);
        if (t > 4.5 && t < 5.5) CHECK(s.samples[i] >= s.samples[i - 1] - 1e-12);
    }
}

TEST_CASE("smooth_sigma preconditions") {
    std::vector<std::int64_t> cells(20, 3);
    CHECK_THROWS_AS(smooth_sigma(half_cells(cells), 0.0), InputError);
    CHECK_THROWS_AS(smooth_sigma(half_cells(cells), 0.3), InputError);
    CHECK_THROWS_AS(smooth_sigma(half_cells({3, 3, 3, 3}), 0.1), InputError);
    cells[10] = 10;  // interior jump of 7
    CHECK_THROWS_AS(smooth_sigma(half_cells(cells), 0.1), InputError);
}

TEST_CASE("weighted quotient on the grid") {
    const SigmaProfile s = constant_sigma(1.0, 1.0 / 128.0);
    const PiecewiseLinearFn linear({0.0, 1.0}, {0.0, 1.0});
    CHECK(weighted_quotient_bridge(s, linear) == doctest::Approx(3.0).epsilon(1e-9));
    const PiecewiseLinearFn flat({0.0, 1.0}, {2.0, 2.0});
    CHECK(weighted_quotient_bridge(s, flat) == doctest::Approx(0.0));
    const PiecewiseLinearFn zero({0.0, 1.0}, {0.0, 0.0});
    CHECK_THROWS_AS(weighted_quotient_bridge(s, zero), InputError);
}

TEST_CASE("sigma quotients stay within band squared of rho quotients") {
    const RootedGraph y = build_y(8, 1, kDefaultExpanderEps, 3);
    const StepFunction rho = distance_density(y.graph, y.root);
    const SigmaProfile s = smooth_sigma(rho, 1.0 / 16.0);
    const double R = s.R;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> nodes, values;
        for (int k = 0; k <= 8; ++k) {
            nodes.push_back(R * k / 8.0);
            values.push_back(u(rng));
        }
        const PiecewiseLinearFn f(nodes, values);
        const double qs = weighted_quotient_bridge(s, f);
        const double qr = weighted_rayleigh(rho, f);
        const double b2 = s.band * s.band;
        CHECK(qs <= qr * b2 * b2 * (1 + 1e-9));
        CHECK(qr <= qs * b2 * b2 * (1 + 1e-9));
    }
}

TEST_CASE("eigenvalue is below every test quotient") {
    std::vector<std::int64_t> cells(24, 3);
    for (int i = 8; i < 16; ++i) cells[i] = 6;
    const SigmaProfile s = smooth_sigma(half_cells(cells), 1.0 / 32.0);
    const double lambda = neumann_lambda1(s);
    CHECK(lambda > 0.0);
    const double R = s.R;
    constexpr int kNodes = 256;
    for (int k = 1; k <= 4; ++k) {
        std::vector<double> nodes, values;
        double mass = 0.0, moment = 0.0;
        for (int i = 0; i <= kNodes; ++i) {
            const double t = R * i / kNodes;
            const double f = std::cos(k * std::numbers::pi * t / R) + 0.3 * t / R;
            const double w = (i == 0 || i == kNodes) ? 0.5 : 1.0;
            nodes.push_back(t);
            values.push_back(f);
            mass += w * s(t);
            moment += w * s(t) * f;
        }
        for (double& v : values) v -= moment / mass;
        CHECK(lambda <= weighted_quotient_bridge(s, PiecewiseLinearFn(nodes, values)) * (1 + 1e-3));
    }
}

TEST_CASE("family sigma profiles satisfy their invariants") {
    for (int n : {4, 8}) {
        const RootedGraph y = build_y(n, 1, kDefaultExpanderEps, 7);
        const SigmaProfile s = smooth_sigma(distance_density(y.graph, y.root), 1.0 / 16.0);
        CHECK(s.max_curvature <= kSigmaCurvatureCap);
        CHECK(s.band >= 1.0);
        CHECK(s.interior_band <= s.band);
        for (double v : s.samples) CHECK(v >= 1.0 - 1e-12);
        const double lambda = neumann_lambda1(s);
        CHECK(lambda > 0.0);
        CHECK(invariance_threshold_check(s, lambda));
    }
}
