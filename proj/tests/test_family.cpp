#include "doctest.h"

#include <cmath>

#include "spgap/errors.hpp"
#include "spgap/family.hpp"
#include "spgap/io.hpp"
#include "spgap/spectral.hpp"

using namespace spgap;

namespace {

// Two junctions joined by three paths of the given lengths.
Graph theta(int a, int b, int c) {
    std::vector<Edge> edges;
    VertexId next = 2;
    for (int len : {a, b, c}) {
        VertexId prev = 0;
        for (int i = 1; i < len; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, 1});
    }
    return Graph::from_edge_list(next, edges);
}

void check_homeomorphic(const Graph& before, const Graph& after) {
    CHECK(count_vertices_of_degree(after, 3) == count_vertices_of_degree(before, 3));
    CHECK(cycle_rank(after) == cycle_rank(before));
    CHECK(count_vertices_of_degree(after, 1) == 0);
    CHECK(after.max_degree() <= 3);
}

}  // namespace

TEST_CASE("random regular graphs") {
    const Graph k4 = random_regular(4, 1);
    CHECK(k4.edges() == named::complete(4).edges());

    const Graph a = random_regular(10, 77);
    const Graph b = random_regular(10, 77);
    CHECK(io::to_string(a) == io::to_string(b));

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = random_regular(50, seed);
        CHECK(g.simple());
        CHECK(g.connected());
        CHECK(g.edge_count() == 75);
        for (VertexId x = 0; x < 50; ++x) CHECK(g.degree(x) == 3);
    }
    CHECK_THROWS_AS(random_regular(9, 1), InputError);
    CHECK_THROWS_AS(random_regular(2, 1), InputError);
}

TEST_CASE("expander certification") {
    CHECK(certify_expander(named::complete(4), 0.1));
    CHECK(certify_expander(named::petersen(), 0.1));
    CHECK_FALSE(certify_expander(named::cycle(100), 0.1));
}

TEST_CASE("goodify leaves good inputs alone") {
    RootedGraph rg{named::cycle(12), 0, {}};
    std::vector<GoodifyRound> trace;
    const RootedGraph out = goodify(rg, &trace);
    CHECK(trace.empty());
    CHECK(out.provenance.goodify_rounds == 0);
    CHECK(out.graph.edges() == rg.graph.edges());
}

TEST_CASE("goodify repairs theta graphs") {
    // Rooted at a junction, two long arcs peak at the same level and the
    // density drops by 4 there.
    for (const auto& [a, b, c] : std::vector<std::array<int, 3>>{{4, 6, 6}, {5, 7, 7}, {3, 9, 9}, {4, 6, 8}, {7, 7, 7}}) {
        const Graph t = theta(a, b, c);
        std::vector<GoodifyRound> trace;
        const RootedGraph out = goodify({t, 0, {}}, &trace);
        CHECK(all_good(distance_density(out.graph, 0)));
        check_homeomorphic(t, out.graph);
        CHECK(out.provenance.goodify_rounds <= 4 * 2 + 2);
        for (const GoodifyRound& r : trace) CHECK(std::abs(r.jump_after) <= kGoodJumpLimit);
    }
    CHECK_FALSE(all_good(distance_density(theta(4, 6, 6), 0)));
}

TEST_CASE("goodify on subdivided K4 and bad inputs") {
    const Graph s = subdivide(named::complete(4), 5);
    std::vector<GoodifyRound> trace;
    const RootedGraph out = goodify({s, 0, {}}, &trace);
    CHECK(all_good(distance_density(out.graph, 0)));
    check_homeomorphic(s, out.graph);
    CHECK(static_cast<int>(trace.size()) <= 4 * 4 + 2);

    CHECK_THROWS_AS(goodify({named::star(3), 0, {}}), InputError);  // leaves
    CHECK_THROWS_AS(goodify({named::complete(5), 0, {}}), InputError);  // degree 4
    CHECK_THROWS_AS(goodify({named::cycle(5), 9, {}}), InputError);
}

TEST_CASE("build Y across sizes, exponents and seeds") {
    for (int n = 4; n <= 16; n += 4) {
        for (int alpha : {0, 1}) {
            for (std::uint64_t seed = 1; seed <= 2; ++seed) {
                const RootedGraph y = build_y(n, alpha, kDefaultExpanderEps, seed);
                const StepFunction rho = distance_density(y.graph, y.root);
                CHECK(all_good(rho));
                const int T = count_vertices_of_degree(y.graph, 3);
                CHECK(T == n);
                CHECK(y.provenance.goodify_rounds <= 4 * T + 2);
                CHECK(rho.max_value() <= 4 * T + 2);
                CHECK(cycle_rank(y.graph) == n / 2 + 1);
                CHECK(y.root == 0);
                CHECK(y.provenance.subdivision == static_cast<int>(std::lround(std::pow(n, alpha))));
            }
        }
    }
}

TEST_CASE("build Y with n = 4 subdivides K4") {
    const RootedGraph y = build_y(4, 1, kDefaultExpanderEps, 1);
    CHECK(y.graph.edge_count() >= 24);
    CHECK(y.provenance.base_lambda1 == doctest::Approx(4.0));
    CHECK_THROWS_AS(build_y(9, 1, 0.1, 1), InputError);
    CHECK_THROWS_AS(build_y(8, 1, 100.0, 1), CheckFailure);
}

TEST_CASE("build Y volume and gap scaling") {
    std::vector<double> vol_ratio;
    for (int n : {8, 16, 32}) {
        const RootedGraph y = build_y(n, 1, kDefaultExpanderEps, 7);
        vol_ratio.push_back(static_cast<double>(y.graph.edge_count()) / (n * n));
        if (n == 16) {
            const double scaled = lambda1(y.graph).lambda1 * n * n;
            const double base = y.provenance.base_lambda1;
            CHECK(scaled / base >= 0.05);
            CHECK(scaled / base <= 20.0);
        }
    }
    const auto [lo, hi] = std::minmax_element(vol_ratio.begin(), vol_ratio.end());
    CHECK(*hi / *lo <= 2.0);
}

TEST_CASE("build Y is deterministic per seed") {
    const RootedGraph a = build_y(16, 1, kDefaultExpanderEps, 5);
    const RootedGraph b = build_y(16, 1, kDefaultExpanderEps, 5);
    CHECK(io::to_string(a.graph) == io::to_string(b.graph));
    CHECK(a.provenance.expander_attempts == b.provenance.expander_attempts);
}
