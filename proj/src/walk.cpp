#include "spgap/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spgap/errors.hpp"
#include "spgap/kernels.hpp"

namespace spgap {

std::string_view to_string(StartPolicy p) {
    return p == StartPolicy::worst_exact ? "worst_exact" : "heuristic";
}

StartPolicy parse_start_policy(std::string_view s) {
    if (s == "worst_exact") return StartPolicy::worst_exact;
    if (s == "heuristic") return StartPolicy::heuristic;
    throw InputError("unknown start policy '" + std::string(s) + "'");
}

std::vector<double> stationary_distribution(const Graph& g) {
    std::vector<double> pi(static_cast<std::size_t>(g.vertex_count()));
    const double two_e = 2.0 * static_cast<double>(g.edge_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        pi[x] = g.degree(x) / two_e;
    }
    return pi;
}

MixingResult mixing_time(const Graph& g, const MixingOptions& options) {
    g.require_connected("mixing_time");
    if (!(options.eps > 0.0) || options.eps >= 1.0) {
        throw InputError("mixing_time: eps must lie in (0, 1)");
    }
    const auto n = static_cast<std::size_t>(g.vertex_count());
    MixingResult result;
    result.start_policy = options.policy;
    if (n == 1) {
        result.starts = {0};
        result.tv_curve = {0.0};
        return result;
    }

    if (options.policy == StartPolicy::worst_exact) {
        if (n > kWorstExactLimit) {
            throw InputError("mixing_time: worst_exact needs at most " + std::to_string(kWorstExactLimit) +
                             " vertices, got " + std::to_string(n));
        }
        result.starts.resize(n);
        for (std::size_t x = 0; x < n; ++x) result.starts[x] = static_cast<VertexId>(x);
    } else {
        const DiametralPair ends = double_sweep(g);
        result.starts = {ends.first, ends.second};
        for (VertexId x : options.extra_starts) {
            if (x < 0 || x >= g.vertex_count()) {
                throw InputError("mixing_time: start vertex out of range");
            }
            result.starts.push_back(x);
        }
        std::sort(result.starts.begin(), result.starts.end());
        result.starts.erase(std::unique(result.starts.begin(), result.starts.end()), result.starts.end());
    }

    const std::vector<double> pi = stationary_distribution(g);
    const std::size_t s = result.starts.size();
    std::vector<std::vector<double>> mu(s, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> next(s, std::vector<double>(n, 0.0));
    std::vector<double> tv(s);
    for (std::size_t k = 0; k < s; ++k) {
        mu[k][result.starts[k]] = 1.0;
        tv[k] = kernels::serial::total_variation(mu[k], pi);
    }
    if (options.keep_start_curves) {
        result.start_curves.assign(s, {});
        for (std::size_t k = 0; k < s; ++k) result.start_curves[k].push_back(tv[k]);
    }
    result.tv_curve.push_back(*std::max_element(tv.begin(), tv.end()));

    // Slack for rounding in the TV sums; genuine increases are far larger.
    constexpr double kMonotoneSlack = 1e-12;
    long long t = 0;
    while (result.tv_curve.back() > options.eps) {
        if (t == options.max_steps) {
            throw CheckFailure("mixing_time: no mixing within " + std::to_string(options.max_steps) + " steps");
        }
        ++t;
        int increased = 0;
#pragma omp parallel for schedule(static) reduction(+ : increased)
        for (std::size_t k = 0; k < s; ++k) {
            kernels::serial::lazy_walk_step(g, mu[k], next[k]);
            std::swap(mu[k], next[k]);
            const double d = kernels::serial::total_variation(mu[k], pi);
            if (d > tv[k] + kMonotoneSlack) ++increased;
            tv[k] = d;
        }
        if (increased > 0) {
            throw CheckFailure("mixing_time: total variation increased at step " + std::to_string(t));
        }
        if (options.keep_start_curves) {
            for (std::size_t k = 0; k < s; ++k) result.start_curves[k].push_back(tv[k]);
        }
        result.tv_curve.push_back(*std::max_element(tv.begin(), tv.end()));
    }
    result.tau = t;
    return result;
}

SandwichReport make_sandwich(long long tau, StartPolicy policy, double lambda1, std::size_t vol) {
    if (!(lambda1 > 0.0)) {
        throw InputError("make_sandwich: lambda1 must be positive");
    }
    SandwichReport r;
    r.tau = tau;
    r.policy = policy;
    r.lambda1 = lambda1;
    r.vol = vol;
    r.log_vol = std::max(1.0, std::log(static_cast<double>(vol)));
    r.lower = 1.0 / lambda1;
    r.upper = r.log_vol / lambda1;
    const auto t = static_cast<double>(std::max<long long>(tau, 1));
    r.c_fit = std::max(1.0 / (lambda1 * t), t * lambda1 / r.log_vol);
    return r;
}

SandwichReport verify_mixing_sandwich(const Graph& g, const MixingOptions& options,
                                      const IterativeOptions& solver) {
    const MixingResult mix = mixing_time(g, options);
    return make_sandwich(mix.tau, mix.start_policy, lambda1(g, solver).lambda1, g.edge_count());
}

SandwichReport verify_mixing_sandwich(const Graph& g) {
    MixingOptions options;
    if (static_cast<std::size_t>(g.vertex_count()) > kWorstExactLimit) {
        options.policy = StartPolicy::heuristic;
    }
    return verify_mixing_sandwich(g, options);
}

NoBcReport verify_no_bc(const std::vector<NoBcMember>& members) {
    if (members.size() < 3) {
        throw InputError("verify_no_bc: need at least 3 family members, got " + std::to_string(members.size()));
    }
    NoBcReport r;
    double lo = 0.0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const NoBcMember& m : members) {
        if (m.diam < 2) {
            throw InputError("verify_no_bc: member '" + m.label + "' has diameter below 2");
        }
        const double d = m.diam;
        const double stat = static_cast<double>(m.tau) * std::log(d) / (d * d);
        r.labels.push_back(m.label);
        r.diam.push_back(m.diam);
        r.statistic.push_back(stat);
        r.c_fit = std::max(r.c_fit, stat);
        lo = r.statistic.size() == 1 ? stat : std::min(lo, stat);
        const double x = std::log(std::log(d));
        const double y = std::log(std::max(stat, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    r.spread = lo > 0.0 ? r.c_fit / lo : std::numeric_limits<double>::infinity();
    const auto k = static_cast<double>(members.size());
    const double denom = k * sxx - sx * sx;
    r.trend = denom > 0.0 ? (k * sxy - sx * sy) / denom : 0.0;
    return r;
}

}  // namespace spgap
