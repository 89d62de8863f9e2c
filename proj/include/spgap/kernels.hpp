#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference kept for testing and an OpenMP version used by the library.
// Reductions in the parallel versions sum fixed-size blocks and combine the
// block sums in order, so results do not depend on the thread count.

#include <span>
#include <vector>

#include "spgap/graph.hpp"

namespace spgap::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

namespace serial {

// out[x] = sum over neighbors y of (f[x] - f[y]), counting parallel edges.
void laplacian_apply(const Graph& g, std::span<const double> f, std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);

// Eccentricity of every vertex (one BFS per root).
std::vector<int> eccentricities(const Graph& g);

// One step of the lazy simple random walk acting on a distribution:
// next[y] = mu[y]/2 + sum over x ~ y of mu[x] / (2 deg x).
void lazy_walk_step(const Graph& g, std::span<const double> mu, std::span<double> next);

// Total variation distance 1/2 * sum |a - b|.
double total_variation(std::span<const double> a, std::span<const double> b);

}  // namespace serial

namespace parallel {

void laplacian_apply(const Graph& g, std::span<const double> f, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
std::vector<int> eccentricities(const Graph& g);
void lazy_walk_step(const Graph& g, std::span<const double> mu, std::span<double> next);
double total_variation(std::span<const double> a, std::span<const double> b);

}  // namespace parallel

}  // namespace spgap::kernels
