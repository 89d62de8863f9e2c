#include "spgap/family.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "spgap/errors.hpp"
#include "spgap/rng.hpp"
#include "spgap/spectral.hpp"

namespace spgap {

Graph random_regular(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) {
        throw InputError("random_regular: n must be even and at least 4, got " + std::to_string(n));
    }
    constexpr int kDegree = 3;
    constexpr int kMaxSamples = 1000;
    Rng rng(seed);
    std::vector<VertexId> stubs(static_cast<std::size_t>(kDegree) * n);
    for (int attempt = 0; attempt < kMaxSamples; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) {
            stubs[i] = static_cast<VertexId>(i / kDegree);
        }
        rng.shuffle(stubs.begin(), stubs.end());
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                ok = false;
                break;
            }
            edges.push_back({stubs[i], stubs[i + 1]});
        }
        if (!ok) continue;
        Graph g = Graph::from_edge_list(n, edges);
        if (g.simple() && g.connected()) {
            return g;
        }
    }
    throw CheckFailure("random_regular: no simple connected pairing after 1000 samples");
}

bool certify_expander(const Graph& g, double eps) {
    if (g.vertex_count() < 2 || !g.connected()) {
        return false;
    }
    return lambda1(g).lambda1 >= eps;
}

namespace {

struct LevelCounts {
    int down = 0;
    int up = 0;
    int same = 0;

    // Jump of rho at the vertex's level contributed by its incident edges.
    std::int64_t contribution() const { return up + 2 * same - down; }
};

LevelCounts classify(const Graph& g, const std::vector<int>& dist, VertexId x) {
    LevelCounts c;
    for (VertexId y : g.neighbors(x)) {
        if (dist[y] < dist[x]) ++c.down;
        else if (dist[y] > dist[x]) ++c.up;
        else ++c.same;
    }
    return c;
}

}  // namespace

RootedGraph goodify(RootedGraph rg, std::vector<GoodifyRound>* trace) {
    Graph g = std::move(rg.graph);
    const VertexId root = rg.root;
    g.require_connected("goodify");
    if (root < 0 || root >= g.vertex_count()) {
        throw InputError("goodify: root out of range");
    }
    if (g.max_degree() > 3) {
        throw InputError("goodify: degree exceeds 3");
    }
    if (count_vertices_of_degree(g, 1) > 0) {
        throw InputError("goodify: graph has vertices of degree 1");
    }
    const int trivalent = count_vertices_of_degree(g, 3);
    const int round_cap = 4 * trivalent + 2;

    int rounds = 0;
    while (true) {
        const auto dist = bfs_distances(g, root);
        const StepFunction rho = distance_density(g, root);
        const auto cvs = critical_values(rho);
        const auto bad = std::find_if(cvs.begin(), cvs.end(), [](const CriticalValue& c) { return !c.good; });
        if (bad == cvs.end()) {
            break;
        }
        if (bad->t.twice == 0) {
            throw InputError("goodify: root degree exceeds 3");
        }
        if (rounds == round_cap) {
            throw CheckFailure("goodify: exceeded " + std::to_string(round_cap) + " rounds");
        }
        const HalfInt t = bad->t;
        const auto& edges = g.edges();
        std::vector<char> split(edges.size(), 0);

        if (t.is_integer()) {
            const int level = static_cast<int>(t.twice / 2);
            std::vector<VertexId> contributors;
            VertexId witness = -1;
            for (VertexId x = 0; x < g.vertex_count(); ++x) {
                if (dist[x] != level) continue;
                const LevelCounts c = classify(g, dist, x);
                // Pure pass-through vertices neither jump nor change when
                // their neighbors move; everything else is a contributor.
                if (c.contribution() == 0 && c.same == 0) continue;
                contributors.push_back(x);
                if (c.contribution() == 0) continue;
                const bool trivalent_x = g.degree(x) == 3;
                if (witness < 0 || (trivalent_x && g.degree(witness) != 3)) {
                    witness = x;
                }
            }
            if (witness < 0) {
                throw CheckFailure("goodify: bad critical value without a contributing vertex");
            }
            std::vector<char> moved(g.vertex_count(), 0);
            for (VertexId y : contributors) {
                if (y != witness) moved[y] = 1;
            }
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (moved[edges[i].u] || moved[edges[i].v]) split[i] = 1;
            }
        } else {
            const int level = static_cast<int>((t.twice - 1) / 2);
            bool have_witness = false;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (dist[edges[i].u] == level && dist[edges[i].v] == level) {
                    if (have_witness) {
                        split[i] = 1;
                    }
                    have_witness = true;
                }
            }
        }

        std::vector<Edge> next_edges;
        next_edges.reserve(edges.size() + edges.size() / 4);
        VertexId next_id = g.vertex_count();
        int split_count = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (split[i]) {
                next_edges.push_back({edges[i].u, next_id});
                next_edges.push_back({next_id, edges[i].v});
                ++next_id;
                ++split_count;
            } else {
                next_edges.push_back(edges[i]);
            }
        }
        Graph next = Graph::from_edge_list(next_id, next_edges);

        // rho below the treated value must not move, and the value itself
        // must now be good.
        const StepFunction next_rho = distance_density(next, root);
        const auto before = rho.half_cells();
        const auto after = next_rho.half_cells();
        for (std::int64_t c = 0; c < t.twice; ++c) {
            if (static_cast<std::size_t>(c) >= after.size() || after[c] != before[c]) {
                throw CheckFailure("goodify: density changed below the treated critical value");
            }
        }
        std::int64_t jump_after = 0;
        for (const CriticalValue& c : critical_values(next_rho)) {
            if (c.t == t) jump_after = c.jump;
        }
        if (std::abs(jump_after) > kGoodJumpLimit) {
            throw CheckFailure("goodify: treated critical value is still bad");
        }
        if (trace) {
            trace->push_back({t, bad->jump, jump_after, split_count});
        }
        g = std::move(next);
        ++rounds;
    }

    rg.graph = std::move(g);
    rg.provenance.goodify_rounds = rounds;
    return rg;
}

RootedGraph build_y(int n, int alpha, double eps, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) {
        throw InputError("build_y: n must be even and at least 4, got " + std::to_string(n));
    }
    if (alpha < 0) {
        throw InputError("build_y: alpha must be nonnegative");
    }
    const double m_real = std::pow(static_cast<double>(n), alpha);
    if (m_real > 1e6) {
        throw InputError("build_y: subdivision factor n^alpha too large");
    }
    const int m = static_cast<int>(std::llround(m_real));

    constexpr int kMaxCertifications = 100;
    const std::uint64_t stream = substream(seed, "expander");
    for (int attempt = 0; attempt < kMaxCertifications; ++attempt) {
        Graph z = random_regular(n, mix64(stream + static_cast<std::uint64_t>(attempt)));
        const double gap = lambda1(z).lambda1;
        if (gap < eps) {
            continue;
        }
        RootedGraph rg;
        rg.graph = subdivide(z, m);
        rg.root = 0;
        rg.provenance = {n, alpha, seed, eps, attempt + 1, gap, m, 0};
        return goodify(std::move(rg));
    }
    throw CheckFailure("build_y: no expander with gap >= " + std::to_string(eps) + " in " +
                       std::to_string(kMaxCertifications) + " attempts");
}

}  // namespace spgap
