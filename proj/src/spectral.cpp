#include "spgap/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "spgap/errors.hpp"
#include "spgap/kernels.hpp"
#include "spgap/rng.hpp"

namespace spgap {

namespace k = kernels::parallel;

std::string_view to_string(SolverMethod m) {
    return m == SolverMethod::dense ? "dense" : "iterative";
}

std::vector<double> laplacian_apply(const Graph& g, std::span<const double> f) {
    if (f.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw InputError("laplacian_apply: vector has " + std::to_string(f.size()) + " entries, graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
    std::vector<double> out(f.size());
    k::laplacian_apply(g, f, out);
    return out;
}

double rayleigh_quotient_vertex(const Graph& g, std::span<const double> f) {
    if (f.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw InputError("rayleigh_quotient_vertex: dimension mismatch");
    }
    const double mass = k::dot(f, f);
    if (mass == 0.0) {
        throw InputError("rayleigh_quotient_vertex: zero vector");
    }
    // Summing over canonical edges avoids the ordered-pair double count.
    double energy = 0.0;
    for (const Edge& e : g.edges()) {
        const double d = f[e.u] - f[e.v];
        energy += d * d;
    }
    return energy / mass;
}

std::size_t dense_size_limit() {
    if (const char* env = std::getenv("SPGAP_DENSE_LIMIT")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return 2000;
}

namespace {

void remove_mean(std::span<double> v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    const double mean = s / static_cast<double>(v.size());
    for (double& x : v) {
        x -= mean;
    }
}

double norm(std::span<const double> v) { return std::sqrt(k::dot(v, v)); }

void scale(std::span<double> v, double a) {
    for (double& x : v) {
        x *= a;
    }
}

void check_solvable(const Graph& g, std::string_view what) {
    g.require_connected(what);
    if (g.vertex_count() < 2) {
        throw InputError(std::string(what) + ": a single vertex has no spectral gap");
    }
}

// Fills eigvec/lambda1/residual from an (unnormalized) approximate eigenvector.
void finalize(const Graph& g, std::vector<double> x, SpectralResult& r) {
    remove_mean(x);
    scale(x, 1.0 / norm(x));
    std::vector<double> lx(x.size());
    k::laplacian_apply(g, x, lx);
    r.lambda1 = k::dot(x, lx);
    for (std::size_t i = 0; i < x.size(); ++i) {
        lx[i] -= r.lambda1 * x[i];
    }
    r.residual = norm(lx);
    r.eigvec = std::move(x);
}

}  // namespace

SpectralResult lambda1_dense(const Graph& g) { return lambda1_dense(g, dense_size_limit()); }

SpectralResult lambda1_dense(const Graph& g, std::size_t size_limit) {
    check_solvable(g, "lambda1_dense");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (n > size_limit) {
        throw InputError("lambda1_dense: " + std::to_string(n) + " vertices exceeds the dense limit " +
                         std::to_string(size_limit));
    }
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const Edge& e : g.edges()) {
        lap(e.u, e.u) += 1.0;
        lap(e.v, e.v) += 1.0;
        lap(e.u, e.v) -= 1.0;
        lap(e.v, e.u) -= 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success) {
        throw CheckFailure("lambda1_dense: eigendecomposition failed");
    }
    SpectralResult r;
    r.method = SolverMethod::dense;
    const Eigen::VectorXd v = solver.eigenvectors().col(1);
    finalize(g, std::vector<double>(v.data(), v.data() + v.size()), r);
    // The Rayleigh quotient of the normalized vector equals the eigenvalue to
    // rounding; keep the solver's value, which is what the oracle promises.
    r.lambda1 = solver.eigenvalues()(1);
    return r;
}

SpectralResult lambda1_iterative(const Graph& g, const IterativeOptions& options) {
    check_solvable(g, "lambda1_iterative");
    if (!(options.tol > 0.0)) {
        throw InputError("lambda1_iterative: tol must be positive");
    }
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const int cap = options.max_iterations > 0
                        ? options.max_iterations
                        : static_cast<int>(std::ceil(50.0 * std::sqrt(static_cast<double>(n))));
    // The complement of the constants has dimension n - 1.
    const int max_dim = static_cast<int>(std::min<std::size_t>(std::max(options.basis_size, 4), n - 1));
    const int keep = std::max(1, std::min(options.keep, max_dim - 1));

    std::vector<std::vector<double>> basis(max_dim + 1, std::vector<double>(n));
    Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(max_dim + 1, max_dim + 1);

    Rng rng(substream(options.seed, "solver"));
    for (double& x : basis[0]) {
        x = 2.0 * rng.uniform() - 1.0;
    }
    remove_mean(basis[0]);
    scale(basis[0], 1.0 / norm(basis[0]));

    std::vector<double> w(n);
    int matvecs = 0;
    int start = 0;
    double anorm = 0.0;
    double last_residual = std::numeric_limits<double>::infinity();
    const double eps = std::numeric_limits<double>::epsilon();

    SpectralResult result;
    result.method = SolverMethod::iterative;

    auto ritz_vector = [&](const Eigen::VectorXd& y, int dim) {
        std::vector<double> x(n, 0.0);
        for (int s = 0; s < dim; ++s) {
            const double c = y(s);
            const auto& q = basis[s];
            for (std::size_t i = 0; i < n; ++i) {
                x[i] += c * q[i];
            }
        }
        return x;
    };

    while (true) {
        for (int i = start; i < max_dim; ++i) {
            k::laplacian_apply(g, basis[i], w);
            ++matvecs;
            remove_mean(w);
            // Classical Gram-Schmidt, applied twice.
            for (int pass = 0; pass < 2; ++pass) {
                for (int l = 0; l <= i; ++l) {
                    const double h = k::dot(basis[l], w);
                    const auto& q = basis[l];
                    for (std::size_t t = 0; t < n; ++t) {
                        w[t] -= h * q[t];
                    }
                    projected(l, i) = pass == 0 ? h : projected(l, i) + h;
                }
            }
            for (int l = 0; l < i; ++l) {
                projected(i, l) = projected(l, i);
            }
            // Rounding leaves a constant component of size eps |Lq|; it must
            // not survive the division by a small beta.
            remove_mean(w);
            const double beta = norm(w);
            const int dim = i + 1;
            anorm = std::max(anorm, std::abs(projected(i, i)) + beta);
            const bool breakdown = beta <= 1e3 * eps * std::max(anorm, 1.0);
            const bool full = dim == max_dim;

            if (!breakdown) {
                scale(w, 1.0 / beta);
                std::copy(w.begin(), w.end(), basis[dim].begin());
                projected(dim, i) = beta;
                projected(i, dim) = beta;
            }

            const bool check = breakdown || full || matvecs >= cap || dim % 4 == 0 || dim < 8;
            if (!check) {
                continue;
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(projected.topLeftCorner(dim, dim));
            const double theta = ritz.eigenvalues()(0);
            const double residual = breakdown ? 0.0 : beta * std::abs(ritz.eigenvectors()(dim - 1, 0));
            last_residual = residual;
            anorm = std::max(anorm, std::abs(ritz.eigenvalues()(dim - 1)));
            bool converged = breakdown || (full && keep >= max_dim) || residual <= options.tol * theta ||
                             residual <= 1e3 * eps * anorm;
            if (!converged && dim > 1) {
                // Eigenvalue error is bounded by residual^2 / gap.
                const double gap = ritz.eigenvalues()(1) - theta;
                converged = residual * residual <= 1e-3 * options.tol * theta * gap;
            }
            if (converged) {
                result.iterations = matvecs;
                finalize(g, ritz_vector(ritz.eigenvectors().col(0), dim), result);
                return result;
            }
            if (matvecs >= cap) {
                std::ostringstream msg;
                msg << "lambda1_iterative: no convergence after " << matvecs
                    << " matrix-vector products (residual " << last_residual << ", Ritz value " << theta
                    << "); raise the iteration cap";
                throw CheckFailure(msg.str());
            }
            if (full) {
                // Thick restart: keep the `keep` smallest Ritz vectors plus the
                // current residual direction.
                std::vector<std::vector<double>> kept;
                kept.reserve(keep);
                for (int l = 0; l < keep; ++l) {
                    kept.push_back(ritz_vector(ritz.eigenvectors().col(l), dim));
                }
                std::vector<double> next = basis[dim];
                Eigen::MatrixXd restarted = Eigen::MatrixXd::Zero(max_dim + 1, max_dim + 1);
                for (int l = 0; l < keep; ++l) {
                    basis[l] = std::move(kept[l]);
                    restarted(l, l) = ritz.eigenvalues()(l);
                    const double coupling = beta * ritz.eigenvectors()(dim - 1, l);
                    restarted(l, keep) = coupling;
                    restarted(keep, l) = coupling;
                }
                basis[keep] = std::move(next);
                projected = std::move(restarted);
                start = keep;
                break;
            }
        }
    }
}

SpectralResult lambda1(const Graph& g, const IterativeOptions& options) {
    if (static_cast<std::size_t>(g.vertex_count()) <= dense_size_limit()) {
        return lambda1_dense(g);
    }
    return lambda1_iterative(g, options);
}

double test_pair_bound(const Graph& g, std::span<const double> f1, std::span<const double> f2) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (f1.size() != n || f2.size() != n) {
        throw InputError("test_pair_bound: dimension mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (f1[i] != 0.0 && f2[i] != 0.0) {
            throw InputError("test_pair_bound: supports overlap at vertex " + std::to_string(i));
        }
    }
    return std::max(rayleigh_quotient_vertex(g, f1), rayleigh_quotient_vertex(g, f2));
}

}  // namespace spgap
