#pragma once

#include <cstdint>
#include <vector>

#include "spgap/family.hpp"
#include "spgap/graph.hpp"
#include "spgap/profile.hpp"
#include "spgap/spectral.hpp"

namespace spgap {

// Cycle lengths w(0..R) of the stacked cylinder, one per integer level.
struct WidthProfile {
    std::vector<int> widths;

    int R() const { return static_cast<int>(widths.size()) - 1; }
    int max_width() const;
    long long total() const;
};

inline constexpr int kMinWidth = 3;
inline constexpr int kMaxWidthStep = 6;
inline constexpr int kDegreeCap = 12;

// w(t) = max(3, rho(t + 1/4)) for t = 0..floor(R), with w(0) = w(R) = 3.
// Throws InputError when R < 2 or when consecutive widths differ by more
// than 6 (rho not from a goodified graph).
WidthProfile width_profile(const StepFunction& rho);

// Throws InputError unless w >= 3, the end widths are 3 and steps are <= 6.
void validate_width_profile(const WidthProfile& w);

// Triangle of the annulus between cycles A (length a) and B (length b):
// (A_i, A_{i+1}, B_j) when base_on_a, else (A_i, B_j, B_{j+1}); indices mod
// the cycle length.
struct AnnulusTriangle {
    bool base_on_a = true;
    int i = 0;
    int j = 0;
};

struct AnnulusGadget {
    int a = 0;
    int b = 0;
    std::vector<std::pair<int, int>> cross_edges;  // (index on A, index on B)
    std::vector<AnnulusTriangle> triangles;
};

// a + b cross edges in balanced interleaving and a + b triangles.
// Requires a, b >= 3 and max(a, b) <= 3 min(a, b).
AnnulusGadget triangulated_annulus(int a, int b);

struct BumpyCylinder {
    Graph graph;
    std::vector<int> level;  // level of each vertex (the projection to [0, R])
    std::vector<Face> faces;
    std::vector<VertexId> bottom;  // boundary cycle at level 0, in cyclic order
    std::vector<VertexId> top;     // boundary cycle at level R
};

BumpyCylinder build_bumpy_cylinder(const WidthProfile& w);

// Adds one apex per boundary cycle. Both boundaries must be triangles.
SphereTriangulation cone_off(const BumpyCylinder& cylinder);

struct PipelineReport {
    int n = 0;
    int alpha = 0;
    std::uint64_t seed = 0;
    double eps = 0.0;
    std::size_t vertices = 0;
    std::size_t vol = 0;    // edge count of X_n
    std::size_t vol_y = 0;  // edge count of Y_n
    int R = 0;
    int diam = 0;
    int diam_y = 0;
    double lambda1 = 0.0;
    double lambda1_y = 0.0;
    SolverMethod lambda1_method = SolverMethod::dense;
    double ratio_thm2 = 0.0;  // lambda1 * (diam / ln diam)^2
    int degree_max = 0;
    int max_width = 0;
    int goodify_rounds = 0;
    TriangulationReport validator;
};

struct XnArtifacts {
    RootedGraph y;
    WidthProfile profile;
    BumpyCylinder cylinder;
    SphereTriangulation x;
    PipelineReport report;
};

// build_y -> distance_density -> width_profile -> build_bumpy_cylinder ->
// cone_off, with diameters and spectral gaps of X_n and Y_n.
XnArtifacts build_xn(int n, int alpha, double eps, std::uint64_t seed, const IterativeOptions& options = {});

}  // namespace spgap
