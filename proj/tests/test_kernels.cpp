#include "doctest.h"

#include <omp.h>

#include <random>

#include "oracles.hpp"
#include "spgap/kernels.hpp"
#include "spgap/walk.hpp"

using namespace spgap;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> f(n);
    for (double& x : f) x = u(rng);
    return f;
}

std::vector<double> random_distribution(std::size_t n, std::uint64_t seed) {
    std::vector<double> mu = random_vector(n, seed);
    double s = 0.0;
    for (double& x : mu) s += (x = std::abs(x));
    for (double& x : mu) x /= s;
    return mu;
}

}  // namespace

TEST_CASE("parallel kernels agree with the serial reference") {
    const Graph g = oracle::random_connected(9000, 6000, 11);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const std::vector<double> f = random_vector(n, 1);
    const std::vector<double> h = random_vector(n, 2);

    std::vector<double> a(n), b(n);
    kernels::serial::laplacian_apply(g, f, a);
    kernels::parallel::laplacian_apply(g, f, b);
    CHECK(a == b);

    CHECK(kernels::serial::dot(f, h) == doctest::Approx(kernels::parallel::dot(f, h)).epsilon(1e-12));

    const std::vector<double> mu = random_distribution(n, 3);
    kernels::serial::lazy_walk_step(g, mu, a);
    kernels::parallel::lazy_walk_step(g, mu, b);
    CHECK(a == b);

    CHECK(kernels::serial::total_variation(a, mu) ==
          doctest::Approx(kernels::parallel::total_variation(b, mu)).epsilon(1e-12));

    const Graph small = oracle::random_connected(300, 80, 4);
    CHECK(kernels::serial::eccentricities(small) == kernels::parallel::eccentricities(small));
}

TEST_CASE("parallel reductions do not depend on the thread count") {
    const std::vector<double> f = random_vector(50000, 5);
    const std::vector<double> h = random_vector(50000, 6);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double one = kernels::parallel::dot(f, h);
    const double tv_one = kernels::parallel::total_variation(f, h);
    omp_set_num_threads(4);
    const double four = kernels::parallel::dot(f, h);
    const double tv_four = kernels::parallel::total_variation(f, h);
    omp_set_num_threads(saved);
    CHECK(one == four);
    CHECK(tv_one == tv_four);
}

TEST_CASE("laplacian quadratic form equals the edge sum") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = oracle::random_connected(40, 30, seed);
        const std::vector<double> f = random_vector(40, seed + 100);
        std::vector<double> lf(40);
        kernels::serial::laplacian_apply(g, f, lf);
        CHECK(kernels::serial::dot(f, lf) == doctest::Approx(oracle::edge_energy(g, f)).epsilon(1e-12));
    }
}

TEST_CASE("lazy walk step keeps mass and fixes the degree distribution") {
    const Graph g = oracle::random_connected(200, 150, 9);
    const std::vector<double> pi = stationary_distribution(g);
    std::vector<double> next(pi.size());
    kernels::parallel::lazy_walk_step(g, pi, next);
    for (std::size_t i = 0; i < pi.size(); ++i) CHECK(std::abs(next[i] - pi[i]) <= 1e-12);

    const std::vector<double> mu = random_distribution(pi.size(), 10);
    kernels::parallel::lazy_walk_step(g, mu, next);
    double s = 0.0;
    for (double x : next) s += x;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}
