#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spgap {

using VertexId = std::int32_t;

// Undirected edge; Graph stores them canonically with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite undirected multigraph with unit edge lengths. Parallel edges are
// allowed, self-loops are not. Immutable after construction; adjacency is a
// CSR layout with each neighbor list sorted and repeated once per parallel
// edge.
class Graph {
public:
    Graph() = default;

    // Vertex count is one past the largest id that appears.
    static Graph from_edge_list(std::span<const Edge> edges);
    static Graph from_edge_list(VertexId vertex_count, std::span<const Edge> edges);

    VertexId vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted canonical edge list (u < v), one entry per parallel copy.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId x) const {
        return {adjacency_.data() + offsets_[x], adjacency_.data() + offsets_[x + 1]};
    }
    int degree(VertexId x) const { return static_cast<int>(offsets_[x + 1] - offsets_[x]); }
    int max_degree() const { return max_degree_; }

    bool connected() const { return connected_; }
    bool simple() const { return simple_; }

    // Throws InputError naming `operation` when the graph is disconnected.
    void require_connected(std::string_view operation) const;

    const std::vector<std::size_t>& offsets() const { return offsets_; }
    const std::vector<VertexId>& adjacency() const { return adjacency_; }

private:
    VertexId vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    int max_degree_ = 0;
    bool connected_ = true;
    bool simple_ = true;
};

// Shortest-path distances (in edges) from root; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId root);

int eccentricity(const Graph& g, VertexId root);

enum class DiameterMode { exact, double_sweep };

// Exact mode maximizes eccentricity over all roots. Double sweep returns the
// eccentricity L of a BFS-farthest vertex, which satisfies L <= diam <= 2L.
int diameter(const Graph& g, DiameterMode mode = DiameterMode::exact);

struct DiametralPair {
    VertexId first = 0;
    VertexId second = 0;
    int distance = 0;
};

// A pair realizing the exact diameter: the lowest-id vertex of maximum
// eccentricity and its lowest-id farthest vertex.
DiametralPair diametral_pair(const Graph& g);

// Endpoints of a double sweep started from vertex 0.
DiametralPair double_sweep(const Graph& g);

// Replace every edge by a path of m unit edges. The interior vertices of the
// path for the i-th canonical edge (u, v) get ids V + i*(m-1) ... in order
// from u towards v.
Graph subdivide(const Graph& g, int m);

// Cycle rank E - V + 1 of a connected graph.
std::int64_t cycle_rank(const Graph& g);

int count_vertices_of_degree(const Graph& g, int degree);

using Face = std::array<VertexId, 3>;

struct SphereTriangulation {
    Graph graph;
    std::vector<Face> faces;
};

struct TriangulationReport {
    bool faces_are_triangles = false;  // every face is a 3-cycle of the graph
    bool edges_in_two_faces = false;
    bool euler = false;
    bool simple = false;
    bool degree_bounded = false;
    bool connected = false;
    std::int64_t euler_characteristic = 0;
    int max_degree = 0;
    int degree_limit = 0;

    bool ok() const {
        return faces_are_triangles && edges_in_two_faces && euler && simple && degree_bounded &&
               connected;
    }
    // Names of the failed checks, empty when ok().
    std::vector<std::string> failures() const;
};

TriangulationReport validate_sphere_triangulation(const SphereTriangulation& t, int max_degree);

// Small named graphs used throughout tests and controls.
namespace named {
Graph path(int k);
Graph cycle(int k);
Graph complete(int n);
Graph star(int leaves);
Graph grid(int rows, int cols);
Graph petersen();
SphereTriangulation tetrahedron();
SphereTriangulation octahedron();
}  // namespace named

}  // namespace spgap
