#include "spgap/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spgap/errors.hpp"
#include "spgap/rng.hpp"

namespace spgap {

int WidthProfile::max_width() const {
    return widths.empty() ? 0 : *std::max_element(widths.begin(), widths.end());
}

long long WidthProfile::total() const { return std::accumulate(widths.begin(), widths.end(), 0LL); }

void validate_width_profile(const WidthProfile& w) {
    if (w.R() < 1) {
        throw InputError("width profile needs at least two levels");
    }
    if (w.widths.front() != kMinWidth || w.widths.back() != kMinWidth) {
        throw InputError("width profile must start and end at width 3");
    }
    for (std::size_t t = 0; t < w.widths.size(); ++t) {
        if (w.widths[t] < kMinWidth) {
            throw InputError("width profile: width below 3 at level " + std::to_string(t));
        }
        if (t > 0 && std::abs(w.widths[t] - w.widths[t - 1]) > kMaxWidthStep) {
            throw InputError("width profile: step larger than 6 at level " + std::to_string(t));
        }
    }
}

WidthProfile width_profile(const StepFunction& rho) {
    const auto R = static_cast<int>(rho.support_end().twice / 2);
    if (R < 2) {
        throw InputError("width_profile: support end " + std::to_string(rho.support_end().value()) +
                         " gives R < 2");
    }
    WidthProfile w;
    w.widths.resize(static_cast<std::size_t>(R) + 1);
    for (int t = 0; t <= R; ++t) {
        // t + 1/4 lies inside the open cell (t, t + 1/2).
        w.widths[t] = static_cast<int>(std::max<std::int64_t>(kMinWidth, rho.at(t + 0.25)));
    }
    w.widths.front() = kMinWidth;
    w.widths.back() = kMinWidth;
    validate_width_profile(w);
    return w;
}

AnnulusGadget triangulated_annulus(int a, int b) {
    if (a < 3 || b < 3) {
        throw InputError("triangulated_annulus: cycles need length >= 3");
    }
    if (std::max(a, b) > 3 * std::min(a, b)) {
        throw InputError("triangulated_annulus: length ratio exceeds 3 (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
    }
    AnnulusGadget g;
    g.a = a;
    g.b = b;
    g.cross_edges.reserve(static_cast<std::size_t>(a + b));
    g.triangles.reserve(static_cast<std::size_t>(a + b));
    int i = 0, j = 0;
    g.cross_edges.emplace_back(0, 0);
    for (int step = 0; step < a + b; ++step) {
        // Advance the side whose next edge midpoint comes first in the
        // common angular parametrization; ties go to A.
        const bool advance_a = j == b || (i < a && static_cast<long long>(2 * i + 1) * b <=
                                                         static_cast<long long>(2 * j + 1) * a);
        if (advance_a) {
            g.triangles.push_back({true, i, j % b});
            ++i;
        } else {
            g.triangles.push_back({false, i % a, j});
            ++j;
        }
        if (step + 1 < a + b) {
            g.cross_edges.emplace_back(i % a, j % b);
        }
    }
    return g;
}

BumpyCylinder build_bumpy_cylinder(const WidthProfile& w) {
    validate_width_profile(w);
    const int R = w.R();
    std::vector<VertexId> first(static_cast<std::size_t>(R) + 2, 0);
    for (int t = 0; t <= R; ++t) {
        first[t + 1] = first[t] + w.widths[t];
    }
    BumpyCylinder cyl;
    cyl.level.resize(static_cast<std::size_t>(first.back()));
    std::vector<Edge> edges;
    for (int t = 0; t <= R; ++t) {
        const int width = w.widths[t];
        for (int k = 0; k < width; ++k) {
            cyl.level[first[t] + k] = t;
            edges.push_back({first[t] + k, first[t] + (k + 1) % width});
        }
    }
    for (int t = 0; t < R; ++t) {
        const int a = w.widths[t];
        const int b = w.widths[t + 1];
        const AnnulusGadget gadget = triangulated_annulus(a, b);
        auto A = [&](int k) { return first[t] + k % a; };
        auto B = [&](int k) { return first[t + 1] + k % b; };
        for (const auto& [i, j] : gadget.cross_edges) {
            edges.push_back({A(i), B(j)});
        }
        for (const AnnulusTriangle& tri : gadget.triangles) {
            if (tri.base_on_a) {
                cyl.faces.push_back({A(tri.i), A(tri.i + 1), B(tri.j)});
            } else {
                cyl.faces.push_back({A(tri.i), B(tri.j), B(tri.j + 1)});
            }
        }
    }
    cyl.graph = Graph::from_edge_list(first.back(), edges);
    for (int k = 0; k < w.widths.front(); ++k) cyl.bottom.push_back(first[0] + k);
    for (int k = 0; k < w.widths.back(); ++k) cyl.top.push_back(first[R] + k);
    if (!cyl.graph.simple()) {
        throw CheckFailure("build_bumpy_cylinder: produced parallel edges");
    }
    return cyl;
}

SphereTriangulation cone_off(const BumpyCylinder& cylinder) {
    if (cylinder.bottom.size() != 3 || cylinder.top.size() != 3) {
        throw InputError("cone_off: boundary cycles must be triangles");
    }
    std::vector<Edge> edges = cylinder.graph.edges();
    const VertexId n = cylinder.graph.vertex_count();
    SphereTriangulation out;
    out.faces = cylinder.faces;
    const std::array<std::pair<VertexId, const std::vector<VertexId>*>, 2> caps{
        std::pair{n, &cylinder.bottom}, std::pair{n + 1, &cylinder.top}};
    for (const auto& [apex, ring] : caps) {
        for (std::size_t k = 0; k < ring->size(); ++k) {
            edges.push_back({(*ring)[k], apex});
            out.faces.push_back({apex, (*ring)[k], (*ring)[(k + 1) % ring->size()]});
        }
    }
    out.graph = Graph::from_edge_list(n + 2, edges);
    return out;
}

XnArtifacts build_xn(int n, int alpha, double eps, std::uint64_t seed, const IterativeOptions& options) {
    XnArtifacts art;
    art.y = build_y(n, alpha, eps, seed);
    const StepFunction rho = distance_density(art.y.graph, art.y.root);
    art.profile = width_profile(rho);
    art.cylinder = build_bumpy_cylinder(art.profile);
    art.x = cone_off(art.cylinder);

    IterativeOptions solver = options;
    solver.seed = substream(seed, "solver");

    PipelineReport& r = art.report;
    r.n = n;
    r.alpha = alpha;
    r.seed = seed;
    r.eps = eps;
    r.vertices = static_cast<std::size_t>(art.x.graph.vertex_count());
    r.vol = art.x.graph.edge_count();
    r.vol_y = art.y.graph.edge_count();
    r.R = art.profile.R();
    r.diam = diameter(art.x.graph);
    r.diam_y = diameter(art.y.graph);
    const SpectralResult gap_x = lambda1(art.x.graph, solver);
    r.lambda1 = gap_x.lambda1;
    r.lambda1_method = gap_x.method;
    r.lambda1_y = lambda1(art.y.graph, solver).lambda1;
    r.ratio_thm2 = r.lambda1 * std::pow(r.diam / std::log(static_cast<double>(r.diam)), 2);
    r.degree_max = art.x.graph.max_degree();
    r.max_width = art.profile.max_width();
    r.goodify_rounds = art.y.provenance.goodify_rounds;
    r.validator = validate_sphere_triangulation(art.x, kDegreeCap);
    return art;
}

}  // namespace spgap
