#include "spgap/upper_bound.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spgap/errors.hpp"

namespace spgap {

namespace {

// Integral of rho over [a, b].
double mass_between(const StepFunction& rho, double a, double b) {
    const auto& bp = rho.breakpoints();
    const auto& vals = rho.values();
    double total = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double lo = std::max(a, bp[i].value());
        const double hi = std::min(b, bp[i + 1].value());
        if (hi > lo) {
            total += static_cast<double>(vals[i]) * (hi - lo);
        }
    }
    return total;
}

TentSide build_side(const Graph& g, VertexId root, int k, double width) {
    const StepFunction rho = distance_density(g, root);
    auto shell = [&](int i) { return i <= 0 ? 0.0 : mass_between(rho, (i - 1) * width, i * width); };

    TentSide side;
    side.root = root;
    side.selection_ratio = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= k - 1; ++j) {
        const double ratio = (shell(j - 1) + shell(j + 1)) / shell(j);
        if (ratio < side.selection_ratio) {
            side.selection_ratio = ratio;
            side.j = j;
        }
    }
    const int j = side.j;
    // Rises on E_{j-1}, equals the shell width on E_j, falls to 0 across E_{j+1}.
    if (j == 1) {
        side.tent = PiecewiseLinearFn({0.0, width, 2.0 * width}, {width, width, 0.0});
    } else {
        side.tent = PiecewiseLinearFn({(j - 2) * width, (j - 1) * width, j * width, (j + 1) * width},
                                      {0.0, width, width, 0.0});
    }
    side.quotient = weighted_rayleigh(rho, side.tent);
    return side;
}

}  // namespace

Certificate tent_certificate(const Graph& g, double volume_constant, double exponent) {
    g.require_connected("tent_certificate");
    if (!(volume_constant > 0.0) || !(exponent >= 0.0)) {
        throw InputError("tent_certificate: need V > 0 and r >= 0");
    }
    const DiametralPair pair = diametral_pair(g);
    const int diam = pair.distance;
    const double allowed = volume_constant * std::pow(static_cast<double>(diam), exponent);
    if (static_cast<double>(g.edge_count()) > allowed) {
        throw InputError("tent_certificate: volume " + std::to_string(g.edge_count()) + " exceeds V*diam^r = " +
                         std::to_string(allowed));
    }
    const int k = diam >= 2 ? static_cast<int>(std::floor(std::log(diam / 2.0))) : 0;
    if (k < 2) {
        throw InputError("tent_certificate: diameter " + std::to_string(diam) + " gives k = " + std::to_string(k) +
                         " < 2");
    }

    Certificate c;
    c.k = k;
    c.diameter = diam;
    c.volume_constant = volume_constant;
    c.exponent = exponent;
    c.shell_width = std::exp(static_cast<double>(k)) / k;
    c.bound = (1.0 + std::log(exponent + 2.0)) * k / std::exp(static_cast<double>(k));
    c.sides[0] = build_side(g, pair.first, k, c.shell_width);
    c.sides[1] = build_side(g, pair.second, k, c.shell_width);
    const double ratio_limit = 1.0 + std::log(exponent + 2.0);
    c.ratio_within_bound = c.sides[0].selection_ratio <= ratio_limit && c.sides[1].selection_ratio <= ratio_limit;

    std::array<std::vector<double>, 2> sampled;
    for (int s = 0; s < 2; ++s) {
        const auto dist = bfs_distances(g, c.sides[s].root);
        sampled[s].resize(dist.size());
        for (std::size_t x = 0; x < dist.size(); ++x) {
            sampled[s][x] = c.sides[s].tent(static_cast<double>(dist[x]));
        }
    }
    c.vertex_pair_bound = test_pair_bound(g, sampled[0], sampled[1]);
    return c;
}

std::string_view to_string(Theorem1Branch b) {
    return b == Theorem1Branch::spielman_teng ? "spielman_teng" : "tent";
}

Theorem1Report verify_thm1(const Graph& g, int max_degree, const IterativeOptions& options) {
    g.require_connected("verify_thm1");
    if (g.max_degree() > max_degree) {
        throw InputError("verify_thm1: graph degree " + std::to_string(g.max_degree()) + " exceeds " +
                         std::to_string(max_degree));
    }
    Theorem1Report r;
    r.diameter = diameter(g);
    if (r.diameter < 3) {
        throw InputError("verify_thm1: diameter must be at least 3");
    }
    r.lambda1 = lambda1(g, options).lambda1;
    r.volume = g.edge_count();
    const double diam = r.diameter;
    r.ratio = r.lambda1 * std::pow(diam / std::log(diam), 2);
    if (static_cast<double>(r.volume) > diam * diam) {
        r.branch = Theorem1Branch::spielman_teng;
        r.c_fit = r.lambda1 * static_cast<double>(r.volume);
        r.bound_value = r.c_fit / static_cast<double>(r.volume);
    } else {
        r.branch = Theorem1Branch::tent;
        r.certificate = tent_certificate(g, 1.0, 2.0);
        r.bound_value = r.certificate->bound;
    }
    return r;
}

}  // namespace spgap
