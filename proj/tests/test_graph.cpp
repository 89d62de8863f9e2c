#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "spgap/errors.hpp"
#include "spgap/graph.hpp"
#include "spgap/io.hpp"
#include "spgap/spectral.hpp"

using namespace spgap;

TEST_CASE("edge list builds symmetric adjacency") {
    const std::vector<Edge> p3{{0, 1}, {1, 2}};
    const Graph g = Graph::from_edge_list(p3);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);

    const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
    const Graph k3 = Graph::from_edge_list(tri);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.simple());
    for (VertexId x = 0; x < 3; ++x) CHECK(k3.degree(x) == 2);

    const std::vector<Edge> doubled{{0, 1}, {0, 1}};
    const Graph m = Graph::from_edge_list(doubled);
    CHECK(m.edge_count() == 2);
    CHECK_FALSE(m.simple());
    CHECK(m.degree(0) == 2);
    CHECK(std::count(m.neighbors(0).begin(), m.neighbors(0).end(), 1) == 2);
}

TEST_CASE("edge list rejects self-loops and bad ids, flags disconnection") {
    const std::vector<Edge> loop{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(loop), InputError);
    const std::vector<Edge> neg{{0, -1}};
    CHECK_THROWS_AS(Graph::from_edge_list(neg), InputError);
    const std::vector<Edge> out_of_range{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, out_of_range), InputError);

    const std::vector<Edge> split{{0, 1}, {2, 3}};
    const Graph g = Graph::from_edge_list(split);
    CHECK_FALSE(g.connected());
    CHECK_THROWS_AS(g.require_connected("test"), InputError);
    CHECK_THROWS_AS(lambda1_dense(g), InputError);
}

TEST_CASE("adjacency stays symmetric on random multigraphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Edge> edges;
        for (int i = 0; i < 40; ++i) {
            const auto u = static_cast<VertexId>(rng() % 12);
            const auto v = static_cast<VertexId>(rng() % 12);
            if (u != v) edges.push_back({u, v});
        }
        const Graph g = Graph::from_edge_list(12, edges);
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            CHECK(std::is_sorted(g.neighbors(x).begin(), g.neighbors(x).end()));
            for (VertexId y : g.neighbors(x)) {
                const auto xy = std::count(g.neighbors(x).begin(), g.neighbors(x).end(), y);
                const auto yx = std::count(g.neighbors(y).begin(), g.neighbors(y).end(), x);
                CHECK(xy == yx);
            }
        }
    }
}

TEST_CASE("bfs distances on small graphs") {
    CHECK(bfs_distances(named::path(3), 0) == std::vector<int>{0, 1, 2});
    for (VertexId r = 0; r < 6; ++r) {
        auto d = bfs_distances(named::cycle(6), r);
        std::sort(d.begin(), d.end());
        CHECK(d == std::vector<int>{0, 1, 1, 2, 2, 3});
    }
    CHECK_THROWS_AS(bfs_distances(named::path(3), 3), InputError);
}

TEST_CASE("bfs matches the boolean matrix-power oracle") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = oracle::random_connected(50, 15, seed);
        const auto all = oracle::matrix_power_distances(g);
        for (VertexId r = 0; r < g.vertex_count(); r += 7) {
            CHECK(bfs_distances(g, r) == all[r]);
        }
        int diam = 0;
        for (const auto& row : all) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
        CHECK(diameter(g) == diam);
    }
}

TEST_CASE("diameter of cycles and paths, double sweep bracket") {
    for (int k = 2; k <= 20; ++k) {
        CHECK(diameter(named::cycle(2 * k)) == k);
        CHECK(diameter(named::path(k)) == k - 1);
    }
    for (std::uint64_t seed = 10; seed < 30; ++seed) {
        const Graph g = oracle::random_connected(60, static_cast<int>(seed % 7), seed);
        const int exact = diameter(g);
        const int sweep = diameter(g, DiameterMode::double_sweep);
        CHECK(sweep <= exact);
        CHECK(exact <= 2 * sweep);
    }
    const DiametralPair p = diametral_pair(named::path(9));
    CHECK(p.distance == 8);
    CHECK(bfs_distances(named::path(9), p.first)[p.second] == 8);
}

TEST_CASE("subdivision counts and scaled distances") {
    const Graph k3 = named::complete(3);
    const Graph same = subdivide(k3, 1);
    CHECK(same.edges() == k3.edges());

    const Graph c12 = subdivide(k3, 4);
    CHECK(c12.vertex_count() == 12);
    CHECK(c12.edge_count() == 12);
    for (VertexId x = 0; x < 12; ++x) CHECK(c12.degree(x) == 2);
    CHECK(c12.connected());
    CHECK(diameter(c12) == 6);

    CHECK_THROWS_AS(subdivide(k3, 0), InputError);

    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Graph g = oracle::random_connected(15, 6, seed);
        for (int m : {2, 3, 5}) {
            const Graph s = subdivide(g, m);
            CHECK(s.vertex_count() == g.vertex_count() + (m - 1) * static_cast<int>(g.edge_count()));
            CHECK(s.edge_count() == m * g.edge_count());
            CHECK(cycle_rank(s) == cycle_rank(g));
            for (VertexId r = 0; r < g.vertex_count(); r += 4) {
                const auto d = bfs_distances(g, r);
                const auto ds = bfs_distances(s, r);
                for (VertexId x = 0; x < g.vertex_count(); ++x) CHECK(ds[x] == m * d[x]);
            }
        }
    }
}

TEST_CASE("subdivision numbers new vertices from the u side") {
    const std::vector<Edge> e{{0, 1}};
    const Graph s = subdivide(Graph::from_edge_list(e), 3);
    // 0 - 2 - 3 - 1
    CHECK(bfs_distances(s, 0) == std::vector<int>{0, 3, 1, 2});
}

TEST_CASE("subdivided K4 gap scales like 1/m^2") {
    double prev = 1e9;
    std::vector<double> scaled;
    for (int m : {4, 8, 16, 32}) {
        const double l = lambda1_dense(subdivide(named::complete(4), m)).lambda1;
        CHECK(l <= prev);
        prev = l;
        scaled.push_back(l * m * m);
    }
    // m^2 lambda1 approaches the metric graph eigenvalue from above; the
    // branch vertices carry an O(1/m) correction, so changes roughly halve.
    for (std::size_t i = 1; i < scaled.size(); ++i) CHECK(scaled[i] < scaled[i - 1]);
    CHECK(std::abs(scaled[3] - scaled[2]) < 0.7 * std::abs(scaled[2] - scaled[1]));
    CHECK(std::abs(scaled[2] - scaled[1]) < 0.7 * std::abs(scaled[1] - scaled[0]));
    CHECK(std::abs(scaled[3] - scaled[2]) / scaled[3] < 0.05);
}

TEST_CASE("validator on named triangulations") {
    const TriangulationReport tet = validate_sphere_triangulation(named::tetrahedron(), 12);
    CHECK(tet.ok());
    CHECK(tet.max_degree == 3);

    const SphereTriangulation oct = named::octahedron();
    const TriangulationReport r = validate_sphere_triangulation(oct, 12);
    CHECK(r.ok());
    CHECK(r.euler_characteristic == 2);
    CHECK(oct.graph.vertex_count() == 6);
    CHECK(oct.graph.edge_count() == 12);
    CHECK(oct.faces.size() == 8);
    // Passing implies 3F = 2E and E = 3V - 6.
    CHECK(3 * oct.faces.size() == 2 * oct.graph.edge_count());
    CHECK(oct.graph.edge_count() == 3 * static_cast<std::size_t>(oct.graph.vertex_count()) - 6);

    SphereTriangulation missing = named::tetrahedron();
    missing.faces.pop_back();
    const TriangulationReport m = validate_sphere_triangulation(missing, 12);
    CHECK_FALSE(m.ok());
    CHECK_FALSE(m.edges_in_two_faces);
    CHECK_FALSE(m.failures().empty());

    CHECK_FALSE(validate_sphere_triangulation(oct, 3).degree_bounded);
}

TEST_CASE("edge list and triangulation text round trip") {
    const SphereTriangulation oct = named::octahedron();
    const std::string text = io::to_string(oct);
    std::istringstream in(text);
    const SphereTriangulation back = io::read_triangulation(in);
    CHECK(back.graph.edges() == oct.graph.edges());
    CHECK(back.faces == oct.faces);
    CHECK(io::to_string(back) == text);

    std::ostringstream rooted;
    io::write_rooted(rooted, named::cycle(5), 2);
    std::istringstream rin(rooted.str());
    const auto [g, root] = io::read_rooted(rin);
    CHECK(root == 2);
    CHECK(g.edges() == named::cycle(5).edges());
    CHECK(rooted.str().back() == '\n');
}

TEST_CASE("readers report the failing line") {
    std::istringstream bad("3 2\n0 1\n1 x\n");
    try {
        io::read_edge_list(bad);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream short_list("3 3\n0 1\n1 2\n");
    CHECK_THROWS_AS(io::read_edge_list(short_list), IoError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(io::read_edge_list(loop), IoError);
    CHECK_THROWS_AS(io::load_graph("/nonexistent/graph.g"), IoError);
}
