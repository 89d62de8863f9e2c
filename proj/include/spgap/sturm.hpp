#pragma once

#include <vector>

#include "spgap/profile.hpp"

namespace spgap {

// Smooth positive width function sampled on a uniform grid over [0, R].
struct SigmaProfile {
    double h = 0.0;               // grid step, R / (samples.size() - 1)
    double R = 0.0;
    std::vector<double> samples;  // sigma(i h)
    // max over [0, R] of max(sigma / rho, rho / sigma); 1 for profiles not
    // derived from a density.
    double band = 1.0;
    // Same ratio restricted to points whose smoothing window avoids the
    // pinned end units.
    double interior_band = 1.0;
    double max_curvature = 0.0;  // max |second difference| / h^2

    double t(std::size_t i) const { return static_cast<double>(i) * h; }
    double operator()(double t) const;  // linear interpolation
    double max_value() const;
};

// Triangle kernel of total width 1/2 applied to a density whose jumps are at
// most 3 gives |sigma''| <= 16 * 3 away from the ends; the ramps towards
// sigma = 1 can stack two such jumps a quarter apart.
inline constexpr double kSigmaCurvatureCap = 2.0 * 16.0 * static_cast<double>(kGoodJumpLimit);

// Smoothed version of rho on an h-grid: rho clamped to 1 on the end units
// and ramped back up in steps of 3 per half unit, then convolved with the
// triangle kernel. Throws InputError for h outside (0, 1/4], support shorter
// than 3 or a bad interior critical value; CheckFailure if the curvature bound fails.
SigmaProfile smooth_sigma(const StepFunction& rho, double h);

// sigma == value on [0, R] with grid step close to h.
SigmaProfile constant_sigma(double R, double h, double value = 1.0);

// Smallest positive eigenvalue of -(sigma u')' = lambda sigma u on [0, R]
// with Neumann ends: finite volumes with midpoint sigma and lumped mass,
// symmetrized by sigma^{1/2} scaling and solved by Sturm-sequence bisection.
double neumann_lambda1(const SigmaProfile& sigma);

// True iff lambda1 < 4 pi^2 / max sigma^2, the condition under which the
// first eigenfunctions of the warped annulus are rotation invariant.
bool invariance_threshold_check(const SigmaProfile& sigma, double lambda1);

// Integral of F'^2 sigma over Integral of F^2 sigma on [0, R].
double weighted_quotient_bridge(const SigmaProfile& sigma, const PiecewiseLinearFn& f);

}  // namespace spgap
