#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "spgap/graph.hpp"

namespace spgap {

enum class SolverMethod { dense, iterative };

std::string_view to_string(SolverMethod m);

struct SpectralResult {
    double lambda1 = 0.0;
    std::vector<double> eigvec;  // unit norm, orthogonal to constants
    double residual = 0.0;       // |L f - lambda f| / |f|
    SolverMethod method = SolverMethod::dense;
    int iterations = 0;          // matrix-vector products (dense: 0)
};

// Combinatorial Laplacian (L f)(x) = sum_{y ~ x} (f(x) - f(y)); parallel
// edges count with their multiplicity.
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> f);

// sum over edges (f(x) - f(y))^2 / sum_x f(x)^2. Throws InputError on f = 0.
double rayleigh_quotient_vertex(const Graph& g, std::span<const double> f);

// Largest vertex count handled by the dense solver; 2000 unless the
// SPGAP_DENSE_LIMIT environment variable overrides it.
std::size_t dense_size_limit();

// Full symmetric eigendecomposition; the oracle for the iterative solver.
SpectralResult lambda1_dense(const Graph& g);
SpectralResult lambda1_dense(const Graph& g, std::size_t size_limit);

struct IterativeOptions {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int max_iterations = 0;  // matrix-vector products; 0 selects ceil(50 sqrt V)
    int basis_size = 96;     // Krylov basis size before a thick restart
    int keep = 24;           // Ritz vectors retained across restarts
};

// Thick-restart Lanczos with full reorthogonalization, run entirely in the
// orthogonal complement of the constants. Deterministic for fixed options.
// Throws CheckFailure (with the last residual) when the cap is reached.
SpectralResult lambda1_iterative(const Graph& g, const IterativeOptions& options = {});

// Dense below dense_size_limit(), iterative above.
SpectralResult lambda1(const Graph& g, const IterativeOptions& options = {});

// max(RQ(f1), RQ(f2)) for nonzero f1, f2 with disjoint supports; an upper
// bound on lambda1 by the minimax principle.
double test_pair_bound(const Graph& g, std::span<const double> f1, std::span<const double> f2);

}  // namespace spgap
