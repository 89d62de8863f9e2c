#include "spgap/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <queue>

namespace spgap::kernels {

namespace {

int bfs_eccentricity(const Graph& g, VertexId root, std::vector<int>& dist, std::vector<VertexId>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[root] = 0;
    queue.push_back(root);
    int far = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        far = dist[x];
        for (VertexId y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return far;
}

template <class BlockFn>
double blocked_sum(std::size_t n, BlockFn&& block_fn) {
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    if (blocks <= 1) {
        return block_fn(0, n);
    }
    std::vector<double> partial(blocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        partial[b] = block_fn(lo, hi);
    }
    double s = 0.0;
    for (double p : partial) {
        s += p;
    }
    return s;
}

}  // namespace

namespace serial {

void laplacian_apply(const Graph& g, std::span<const double> f, std::span<double> out) {
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        double acc = 0.0;
        for (VertexId y : g.neighbors(x)) {
            acc += f[x] - f[y];
        }
        out[x] = acc;
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> ecc(g.vertex_count());
    std::vector<int> dist(g.vertex_count());
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
        ecc[r] = bfs_eccentricity(g, r, dist, queue);
    }
    return ecc;
}

void lazy_walk_step(const Graph& g, std::span<const double> mu, std::span<double> next) {
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
        double acc = 0.0;
        for (VertexId x : g.neighbors(y)) {
            acc += mu[x] / g.degree(x);
        }
        next[y] = 0.5 * mu[y] + 0.5 * acc;
    }
}

double total_variation(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::abs(a[i] - b[i]);
    }
    return 0.5 * s;
}

}  // namespace serial

namespace parallel {

void laplacian_apply(const Graph& g, std::span<const double> f, std::span<double> out) {
    const auto& offsets = g.offsets();
    const auto& adj = g.adjacency();
#pragma omp parallel for schedule(static)
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        double acc = 0.0;
        for (std::size_t k = offsets[x]; k < offsets[x + 1]; ++k) {
            acc += f[x] - f[adj[k]];
        }
        out[x] = acc;
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    return blocked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            s += a[i] * b[i];
        }
        return s;
    });
}

std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> ecc(g.vertex_count());
#pragma omp parallel
    {
        std::vector<int> dist(g.vertex_count());
        std::vector<VertexId> queue;
        queue.reserve(g.vertex_count());
#pragma omp for schedule(dynamic, 16)
        for (VertexId r = 0; r < g.vertex_count(); ++r) {
            ecc[r] = bfs_eccentricity(g, r, dist, queue);
        }
    }
    return ecc;
}

void lazy_walk_step(const Graph& g, std::span<const double> mu, std::span<double> next) {
    const auto& offsets = g.offsets();
    const auto& adj = g.adjacency();
#pragma omp parallel for schedule(static)
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
        double acc = 0.0;
        for (std::size_t k = offsets[y]; k < offsets[y + 1]; ++k) {
            const VertexId x = adj[k];
            acc += mu[x] / static_cast<double>(offsets[x + 1] - offsets[x]);
        }
        next[y] = 0.5 * mu[y] + 0.5 * acc;
    }
}

double total_variation(std::span<const double> a, std::span<const double> b) {
    return 0.5 * blocked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            s += std::abs(a[i] - b[i]);
        }
        return s;
    });
}

}  // namespace parallel

}  // namespace spgap::kernels
