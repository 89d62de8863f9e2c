#pragma once

#include <cstdint>
#include <vector>

#include "spgap/graph.hpp"
#include "spgap/profile.hpp"

namespace spgap {

struct Provenance {
    int base_n = 0;
    int alpha = 0;
    std::uint64_t seed = 0;
    double eps = 0.0;
    int expander_attempts = 0;  // certification attempts used
    double base_lambda1 = 0.0;  // spectral gap of the certified expander
    int subdivision = 1;        // m = n^alpha
    int goodify_rounds = 0;
};

// Graph with a distinguished root vertex; the rooted models fed to the
// cylinder construction.
struct RootedGraph {
    Graph graph;
    VertexId root = 0;
    Provenance provenance;
};

// Simple connected 3-regular graph on n vertices from the configuration
// model, rejecting loops, multi-edges and disconnected pairings (at most
// 1000 resamples). Bit-exact for a given seed.
Graph random_regular(int n, std::uint64_t seed);

bool certify_expander(const Graph& g, double eps);

// Per-round record of the goodify loop.
struct GoodifyRound {
    HalfInt treated;             // smallest bad critical value of the round
    std::int64_t jump_before = 0;
    std::int64_t jump_after = 0;
    int subdivided_edges = 0;
};

// Subdivides edges around all but one contributor of the smallest bad
// critical value until every critical value is good. Requires degree <= 3
// and no vertices of degree 1. Throws CheckFailure if more than 4T + 2
// rounds are needed (T = number of trivalent vertices).
RootedGraph goodify(RootedGraph rg, std::vector<GoodifyRound>* trace = nullptr);

// Certified cubic expander on n vertices, subdivided n^alpha times, rooted
// at base vertex 0 and goodified.
RootedGraph build_y(int n, int alpha, double eps, std::uint64_t seed);

// Default expander certification threshold.
inline constexpr double kDefaultExpanderEps = 0.1;

}  // namespace spgap
