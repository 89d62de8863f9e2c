#include "spgap/sturm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "spgap/errors.hpp"

namespace spgap {

double SigmaProfile::operator()(double t) const {
    if (t <= 0.0) return samples.front();
    if (t >= R) return samples.back();
    const double x = t / h;
    const auto i = std::min(static_cast<std::size_t>(x), samples.size() - 2);
    const double w = x - static_cast<double>(i);
    return (1.0 - w) * samples[i] + w * samples[i + 1];
}

double SigmaProfile::max_value() const { return *std::max_element(samples.begin(), samples.end()); }

namespace {

constexpr double kKernelHalfWidth = 0.25;

// Mass of the triangle kernel on (-inf, x].
double kernel_cdf(double x) {
    constexpr double c = kKernelHalfWidth;
    if (x <= -c) return 0.0;
    if (x >= c) return 1.0;
    if (x <= 0.0) return (x + c) * (x + c) / (2.0 * c * c);
    return 1.0 - (c - x) * (c - x) / (2.0 * c * c);
}

std::size_t grid_intervals(double R, double h) {
    return static_cast<std::size_t>(std::max(1.0, std::ceil(R / h - 1e-9)));
}

}  // namespace

SigmaProfile smooth_sigma(const StepFunction& rho, double h) {
    if (!(h > 0.0) || h > 0.25) {
        throw InputError("smooth_sigma: grid step must lie in (0, 1/4]");
    }
    // The end jumps do not matter: sigma is pinned to 1 near both ends.
    const HalfInt end = rho.support_end();
    for (const CriticalValue& c : critical_values(rho)) {
        if (!c.good && c.t.twice != 0 && c.t != end) {
            throw InputError("smooth_sigma: bad critical value at t = " + std::to_string(c.t.value()) +
                             " (jump " + std::to_string(c.jump) + ")");
        }
    }
    const double R = rho.support_end().value();
    if (R < 3.0) {
        throw InputError("smooth_sigma: support [0, R] needs R >= 3");
    }

    // Target step function on quarter cells [q/4, (q+1)/4], q = 0..4R-1.
    const auto quarters = static_cast<std::int64_t>(std::llround(4.0 * R));
    constexpr double kRampStart = 1.25;
    constexpr double kRampStep = 3.0;
    auto ramp = [&](double distance_from_pin) {
        // 1 inside the pinned unit, then +3 every half unit.
        if (distance_from_pin < 0.0) return 1.0;
        return 1.0 + kRampStep * (std::floor(distance_from_pin / 0.5) + 1.0);
    };
    std::vector<double> target(static_cast<std::size_t>(quarters));
    std::vector<char> unclamped(target.size());
    for (std::int64_t q = 0; q < quarters; ++q) {
        const double mid = (static_cast<double>(q) + 0.5) / 4.0;
        const auto r = static_cast<double>(rho.at(mid));
        const double cap = std::min(ramp(mid - kRampStart), ramp(R - kRampStart - mid));
        target[q] = std::min(r, cap);
        unclamped[q] = r <= cap;
    }
    auto target_at = [&](std::int64_t q) { return q < 0 || q >= quarters ? 1.0 : target[q]; };

    SigmaProfile s;
    s.R = R;
    const std::size_t n = grid_intervals(R, h);
    s.h = R / static_cast<double>(n);
    s.samples.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = s.t(i);
        const auto lo = static_cast<std::int64_t>(std::floor((t - kKernelHalfWidth) * 4.0)) - 1;
        const auto hi = static_cast<std::int64_t>(std::ceil((t + kKernelHalfWidth) * 4.0)) + 1;
        double acc = 0.0;
        double weight = 0.0;
        for (std::int64_t q = lo; q <= hi; ++q) {
            const double w = kernel_cdf(t - q / 4.0) - kernel_cdf(t - (q + 1) / 4.0);
            acc += w * target_at(q);
            weight += w;
        }
        s.samples[i] = acc / weight;
    }

    // Condition (1): compare with both one-sided values of rho.
    s.band = 1.0;
    s.interior_band = 1.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = s.t(i);
        double local = 1.0;
        for (double probe : {t, t - 1e-9}) {
            const auto r = static_cast<double>(rho.at(std::clamp(probe, 0.0, R - 1e-9)));
            local = std::max({local, s.samples[i] / r, r / s.samples[i]});
        }
        s.band = std::max(s.band, local);
        const auto q0 = static_cast<std::int64_t>(std::floor((t - kKernelHalfWidth) * 4.0));
        const auto q1 = static_cast<std::int64_t>(std::ceil((t + kKernelHalfWidth) * 4.0));
        bool free = q0 >= 0 && q1 <= quarters;
        for (std::int64_t q = std::max<std::int64_t>(q0, 0); free && q < std::min(q1, quarters); ++q) {
            free = unclamped[q] != 0;
        }
        if (free) {
            s.interior_band = std::max(s.interior_band, local);
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double d2 = (s.samples[i + 1] - 2.0 * s.samples[i] + s.samples[i - 1]) / (s.h * s.h);
        s.max_curvature = std::max(s.max_curvature, std::abs(d2));
    }
    if (s.max_curvature > kSigmaCurvatureCap * (1.0 + 1e-9)) {
        throw CheckFailure("smooth_sigma: curvature " + std::to_string(s.max_curvature) + " exceeds " +
                           std::to_string(kSigmaCurvatureCap));
    }
    // Condition (3).
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = s.t(i);
        if ((t <= 1.0 || t >= R - 1.0) && std::abs(s.samples[i] - 1.0) > 1e-12) {
            throw CheckFailure("smooth_sigma: sigma is not 1 on the end units");
        }
    }
    return s;
}

SigmaProfile constant_sigma(double R, double h, double value) {
    if (!(R > 0.0) || !(h > 0.0) || !(value > 0.0)) {
        throw InputError("constant_sigma: R, h and value must be positive");
    }
    SigmaProfile s;
    s.R = R;
    const std::size_t n = grid_intervals(R, h);
    s.h = R / static_cast<double>(n);
    s.samples.assign(n + 1, value);
    return s;
}

double neumann_lambda1(const SigmaProfile& sigma) {
    const std::size_t nodes = sigma.samples.size();
    if (nodes < 3) {
        throw InputError("neumann_lambda1: need at least 3 grid nodes");
    }
    const double h = sigma.h;
    std::vector<double> mass(nodes), stiff(nodes - 1);
    for (std::size_t i = 0; i < nodes; ++i) {
        if (!(sigma.samples[i] > 0.0)) {
            throw InputError("neumann_lambda1: sigma must be positive");
        }
        mass[i] = h * sigma.samples[i] * (i == 0 || i + 1 == nodes ? 0.5 : 1.0);
    }
    for (std::size_t i = 0; i + 1 < nodes; ++i) {
        stiff[i] = 0.5 * (sigma.samples[i] + sigma.samples[i + 1]) / h;
    }
    // Symmetric tridiagonal M^{-1/2} K M^{-1/2}.
    std::vector<double> diag(nodes), off2(nodes - 1);
    double upper = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double left = i > 0 ? stiff[i - 1] : 0.0;
        const double right = i + 1 < nodes ? stiff[i] : 0.0;
        diag[i] = (left + right) / mass[i];
    }
    for (std::size_t i = 0; i + 1 < nodes; ++i) {
        off2[i] = stiff[i] * stiff[i] / (mass[i] * mass[i + 1]);
    }
    for (std::size_t i = 0; i < nodes; ++i) {
        const double l = i > 0 ? std::sqrt(off2[i - 1]) : 0.0;
        const double r = i + 1 < nodes ? std::sqrt(off2[i]) : 0.0;
        upper = std::max(upper, diag[i] + l + r);
    }
    // Number of eigenvalues below x (Sturm sequence of the LDL^T pivots).
    auto count_below = [&](double x) {
        int count = 0;
        double q = diag[0] - x;
        const double tiny = 1e-300;
        if (q < 0.0) ++count;
        for (std::size_t i = 1; i < nodes; ++i) {
            if (std::abs(q) < tiny) q = -tiny;
            q = diag[i] - x - off2[i - 1] / q;
            if (q < 0.0) ++count;
        }
        return count;
    };
    double lo = 0.0;
    double hi = upper;
    for (int iter = 0; iter < 400 && hi - lo > 1e-13 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(mid) >= 2) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if (count_below(hi) < 2) {
        throw CheckFailure("neumann_lambda1: bisection failed to bracket the first eigenvalue");
    }
    return 0.5 * (lo + hi);
}

bool invariance_threshold_check(const SigmaProfile& sigma, double lambda1) {
    const double m = sigma.max_value();
    return lambda1 < 4.0 * std::numbers::pi * std::numbers::pi / (m * m);
}

double weighted_quotient_bridge(const SigmaProfile& sigma, const PiecewiseLinearFn& f) {
    constexpr std::array<double, 3> gx{0.5 - 0.3872983346207417, 0.5, 0.5 + 0.3872983346207417};
    constexpr std::array<double, 3> gw{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    double energy = 0.0;
    double mass = 0.0;
    const std::size_t cells = sigma.samples.size() - 1;
    std::vector<double> cuts;
    for (std::size_t i = 0; i < cells; ++i) {
        const double a = sigma.t(i);
        const double b = i + 1 == cells ? sigma.R : sigma.t(i + 1);
        cuts.assign({a, b});
        const auto first = std::upper_bound(f.nodes().begin(), f.nodes().end(), a);
        for (auto it = first; it != f.nodes().end() && *it < b; ++it) {
            cuts.push_back(*it);
        }
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const double x0 = cuts[k], x1 = cuts[k + 1];
            const double len = x1 - x0;
            if (len <= 0.0) continue;
            for (int q = 0; q < 3; ++q) {
                const double x = x0 + gx[q] * len;
                const double fx = f(x);
                mass += gw[q] * len * fx * fx * sigma(x);
            }
            const double mid = 0.5 * (x0 + x1);
            const double d = f.slope(mid);
            energy += len * d * d * sigma(mid);
        }
    }
    if (mass == 0.0) {
        throw InputError("weighted_quotient_bridge: F vanishes on [0, R]");
    }
    return energy / mass;
}

}  // namespace spgap
