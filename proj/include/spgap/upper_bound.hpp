#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "spgap/graph.hpp"
#include "spgap/profile.hpp"
#include "spgap/spectral.hpp"

namespace spgap {

// One half of the two-tent certificate: a tent around distance shell E_j
// from one endpoint of a diametral pair.
struct TentSide {
    VertexId root = 0;
    int j = 0;                 // chosen interval index in 1..k-1
    double selection_ratio = 0.0;  // (mass(E_{j-1}) + mass(E_{j+1})) / mass(E_j)
    PiecewiseLinearFn tent;
    double quotient = 0.0;     // weighted Rayleigh quotient of the tent
};

struct Certificate {
    int k = 0;
    int diameter = 0;
    double volume_constant = 0.0;  // V in vol <= V diam^r
    double exponent = 0.0;         // r
    double shell_width = 0.0;      // e^k / k
    std::array<TentSide, 2> sides;
    double bound = 0.0;            // (1 + ln(r + 2)) k / e^k
    bool ratio_within_bound = false;  // min selection ratio <= 1 + ln(r + 2) on both sides
    // max of the combinatorial quotients of the two tents sampled at
    // vertices; a rigorous upper bound on lambda1 of the vertex Laplacian.
    double vertex_pair_bound = 0.0;

    double max_quotient() const { return std::max(sides[0].quotient, sides[1].quotient); }
};

// Two disjointly supported tent functions around a diametral pair. Requires
// edge_count <= V diam^r and k = floor(ln(diam / 2)) >= 2.
Certificate tent_certificate(const Graph& g, double volume_constant, double exponent);

enum class Theorem1Branch { spielman_teng, tent };

std::string_view to_string(Theorem1Branch b);

struct Theorem1Report {
    double lambda1 = 0.0;
    int diameter = 0;
    std::size_t volume = 0;
    Theorem1Branch branch = Theorem1Branch::tent;
    double bound_value = 0.0;
    double c_fit = 0.0;   // spielman_teng branch: lambda1 * vol
    double ratio = 0.0;   // lambda1 * (diam / ln diam)^2
    std::optional<Certificate> certificate;
};

// Runs the branch logic: vol > diam^2 reports the reciprocal-volume branch
// with its fitted constant; otherwise builds a tent certificate with V = 1,
// r = 2.
Theorem1Report verify_thm1(const Graph& g, int max_degree, const IterativeOptions& options = {});

}  // namespace spgap
