#include "spgap/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "spgap/errors.hpp"
#include "spgap/kernels.hpp"

namespace spgap {

Graph Graph::from_edge_list(std::span<const Edge> edges) {
    VertexId n = 0;
    for (const Edge& e : edges) {
        n = std::max({n, static_cast<VertexId>(e.u + 1), static_cast<VertexId>(e.v + 1)});
    }
    return from_edge_list(n, edges);
}

Graph Graph::from_edge_list(VertexId vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) {
        throw InputError("negative vertex count");
    }
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") references a vertex outside [0," + std::to_string(vertex_count) + ")");
        }
        if (e.u == e.v) {
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        }
        g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());

    std::vector<std::size_t> degree(vertex_count, 0);
    for (const Edge& e : g.edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    g.offsets_.assign(vertex_count + 1, 0);
    for (VertexId x = 0; x < vertex_count; ++x) {
        g.offsets_[x + 1] = g.offsets_[x] + degree[x];
    }
    g.adjacency_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adjacency_[fill[e.u]++] = e.v;
        g.adjacency_[fill[e.v]++] = e.u;
    }
    for (VertexId x = 0; x < vertex_count; ++x) {
        auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[x]);
        auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[x + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            g.simple_ = false;
        }
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(degree[x]));
    }
    if (vertex_count > 0) {
        const auto dist = bfs_distances(g, 0);
        g.connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }
    return g;
}

void Graph::require_connected(std::string_view operation) const {
    if (vertex_count_ == 0) {
        throw InputError(std::string(operation) + ": empty graph");
    }
    if (!connected_) {
        throw InputError(std::string(operation) + ": graph is disconnected");
    }
}

std::vector<int> bfs_distances(const Graph& g, VertexId root) {
    if (root < 0 || root >= g.vertex_count()) {
        throw InputError("bfs root " + std::to_string(root) + " out of range");
    }
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    dist[root] = 0;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (VertexId y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int eccentricity(const Graph& g, VertexId root) {
    const auto dist = bfs_distances(g, root);
    return *std::max_element(dist.begin(), dist.end());
}

namespace {

VertexId farthest(const std::vector<int>& dist) {
    return static_cast<VertexId>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

int diameter(const Graph& g, DiameterMode mode) {
    g.require_connected("diameter");
    if (mode == DiameterMode::double_sweep) {
        return double_sweep(g).distance;
    }
    const auto ecc = kernels::parallel::eccentricities(g);
    return *std::max_element(ecc.begin(), ecc.end());
}

DiametralPair diametral_pair(const Graph& g) {
    g.require_connected("diametral_pair");
    const auto ecc = kernels::parallel::eccentricities(g);
    const VertexId a = farthest(ecc);
    const auto dist = bfs_distances(g, a);
    const VertexId b = farthest(dist);
    return {a, b, dist[b]};
}

DiametralPair double_sweep(const Graph& g) {
    g.require_connected("double_sweep");
    const VertexId a = farthest(bfs_distances(g, 0));
    const auto dist = bfs_distances(g, a);
    const VertexId b = farthest(dist);
    return {a, b, dist[b]};
}

Graph subdivide(const Graph& g, int m) {
    if (m < 1) {
        throw InputError("subdivide: m must be at least 1");
    }
    if (m == 1) {
        return g;
    }
    const auto& edges = g.edges();
    const std::int64_t added = static_cast<std::int64_t>(m - 1) * static_cast<std::int64_t>(edges.size());
    if (g.vertex_count() + added > std::numeric_limits<VertexId>::max()) {
        throw InputError("subdivide: result too large");
    }
    std::vector<Edge> out;
    out.reserve(edges.size() * static_cast<std::size_t>(m));
    VertexId next = g.vertex_count();
    for (const Edge& e : edges) {
        VertexId prev = e.u;
        for (int i = 0; i < m - 1; ++i) {
            out.push_back({prev, next});
            prev = next++;
        }
        out.push_back({prev, e.v});
    }
    return Graph::from_edge_list(next, out);
}

std::int64_t cycle_rank(const Graph& g) {
    return static_cast<std::int64_t>(g.edge_count()) - g.vertex_count() + 1;
}

int count_vertices_of_degree(const Graph& g, int degree) {
    int count = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        count += g.degree(x) == degree;
    }
    return count;
}

std::vector<std::string> TriangulationReport::failures() const {
    std::vector<std::string> out;
    if (!faces_are_triangles) out.emplace_back("faces_are_triangles");
    if (!edges_in_two_faces) out.emplace_back("edges_in_two_faces");
    if (!euler) out.emplace_back("euler");
    if (!simple) out.emplace_back("simple");
    if (!degree_bounded) out.emplace_back("degree_bounded");
    if (!connected) out.emplace_back("connected");
    return out;
}

TriangulationReport validate_sphere_triangulation(const SphereTriangulation& t, int max_degree) {
    const Graph& g = t.graph;
    TriangulationReport r;
    r.degree_limit = max_degree;
    r.max_degree = g.max_degree();
    r.simple = g.simple();
    r.connected = g.vertex_count() > 0 && g.connected();
    r.degree_bounded = g.max_degree() <= max_degree;
    r.euler_characteristic = static_cast<std::int64_t>(g.vertex_count()) -
                             static_cast<std::int64_t>(g.edge_count()) +
                             static_cast<std::int64_t>(t.faces.size());
    r.euler = r.euler_characteristic == 2;

    auto has_edge = [&](VertexId a, VertexId b) {
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) {
            return false;
        }
        const auto nb = g.neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    };

    r.faces_are_triangles = true;
    std::map<Edge, int> face_count;
    for (const Face& f : t.faces) {
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
            r.faces_are_triangles = false;
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            const VertexId a = f[i];
            const VertexId b = f[(i + 1) % 3];
            if (!has_edge(a, b)) {
                r.faces_are_triangles = false;
            }
            ++face_count[a < b ? Edge{a, b} : Edge{b, a}];
        }
    }

    r.edges_in_two_faces = true;
    for (const Edge& e : g.edges()) {
        auto it = face_count.find(e);
        if (it == face_count.end() || it->second != 2) {
            r.edges_in_two_faces = false;
            break;
        }
    }
    if (r.edges_in_two_faces) {
        for (const auto& [e, count] : face_count) {
            if (count != 2) {
                r.edges_in_two_faces = false;
                break;
            }
        }
    }
    return r;
}

namespace named {

Graph path(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph::from_edge_list(k, edges);
}

Graph cycle(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({i, (i + 1) % k});
    }
    return Graph::from_edge_list(k, edges);
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.push_back({0, i});
    }
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph grid(int rows, int cols) {
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return Graph::from_edge_list(rows * cols, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edge_list(10, edges);
}

SphereTriangulation tetrahedron() {
    return {complete(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

SphereTriangulation octahedron() {
    // Poles 0 and 5, equator 1-2-3-4.
    std::vector<Edge> edges;
    for (int i = 1; i <= 4; ++i) {
        edges.push_back({0, i});
        edges.push_back({5, i});
        edges.push_back({i, i % 4 + 1});
    }
    SphereTriangulation t{Graph::from_edge_list(6, edges), {}};
    for (int i = 1; i <= 4; ++i) {
        t.faces.push_back({0, i, i % 4 + 1});
        t.faces.push_back({5, i, i % 4 + 1});
    }
    return t;
}

}  // namespace named

}  // namespace spgap
