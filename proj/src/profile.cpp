#include "spgap/profile.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "spgap/errors.hpp"

namespace spgap {

StepFunction StepFunction::from_half_cells(std::span<const std::int64_t> cells) {
    StepFunction rho;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] < 0) {
            throw InputError("StepFunction: negative density");
        }
        if (rho.values_.empty() || rho.values_.back() != cells[i]) {
            rho.breakpoints_.push_back({static_cast<std::int64_t>(i)});
            rho.values_.push_back(cells[i]);
        }
    }
    if (!cells.empty()) {
        rho.breakpoints_.push_back({static_cast<std::int64_t>(cells.size())});
    }
    return rho;
}

std::int64_t StepFunction::at(double t) const {
    if (values_.empty() || t < 0.0 || t >= support_end().value()) {
        return 0;
    }
    const HalfInt probe{static_cast<std::int64_t>(std::floor(2.0 * t))};
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), probe);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

std::int64_t StepFunction::integral_twice() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        total += values_[i] * (breakpoints_[i + 1].twice - breakpoints_[i].twice);
    }
    return total;
}

std::int64_t StepFunction::max_value() const {
    return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::vector<std::int64_t> StepFunction::half_cells() const {
    std::vector<std::int64_t> cells;
    cells.reserve(static_cast<std::size_t>(support_end().twice));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        cells.insert(cells.end(), static_cast<std::size_t>(breakpoints_[i + 1].twice - breakpoints_[i].twice),
                     values_[i]);
    }
    return cells;
}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.empty() || nodes_.size() != values_.size()) {
        throw InputError("PiecewiseLinearFn: need matching, nonempty node and value lists");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i]) || !std::isfinite(values_[i])) {
            throw InputError("PiecewiseLinearFn: non-finite node or value");
        }
        if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
            throw InputError("PiecewiseLinearFn: nodes must be strictly increasing");
        }
    }
}

double PiecewiseLinearFn::operator()(double t) const {
    if (t <= nodes_.front()) return values_.front();
    if (t >= nodes_.back()) return values_.back();
    const auto i = static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), t) - nodes_.begin());
    const double x0 = nodes_[i - 1], x1 = nodes_[i];
    const double w = (t - x0) / (x1 - x0);
    return (1.0 - w) * values_[i - 1] + w * values_[i];
}

double PiecewiseLinearFn::slope(double t) const {
    if (t < nodes_.front() || t >= nodes_.back()) return 0.0;
    const auto i = static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), t) - nodes_.begin());
    return (values_[i] - values_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
}

StepFunction distance_density(const Graph& g, VertexId root) {
    if (root < 0 || root >= g.vertex_count()) {
        throw InputError("distance_density: root " + std::to_string(root) + " out of range");
    }
    g.require_connected("distance_density");
    const auto dist = bfs_distances(g, root);
    std::int64_t end_twice = 0;
    for (const Edge& e : g.edges()) {
        const std::int64_t a = std::min(dist[e.u], dist[e.v]);
        const std::int64_t b = std::max(dist[e.u], dist[e.v]);
        end_twice = std::max(end_twice, a == b ? 2 * a + 1 : 2 * b);
    }
    std::vector<std::int64_t> cells(static_cast<std::size_t>(end_twice), 0);
    for (const Edge& e : g.edges()) {
        const std::int64_t a = std::min(dist[e.u], dist[e.v]);
        const std::int64_t b = std::max(dist[e.u], dist[e.v]);
        if (a == b) {
            cells[2 * a] += 2;
        } else {
            cells[2 * a] += 1;
            cells[2 * a + 1] += 1;
        }
    }
    return StepFunction::from_half_cells(cells);
}

std::vector<CriticalValue> critical_values(const StepFunction& rho) {
    std::vector<CriticalValue> out;
    const auto& bp = rho.breakpoints();
    const auto& vals = rho.values();
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const std::int64_t before = i == 0 ? 0 : vals[i - 1];
        const std::int64_t after = i < vals.size() ? vals[i] : 0;
        const std::int64_t jump = after - before;
        out.push_back({bp[i], jump, std::abs(jump) <= kGoodJumpLimit});
    }
    return out;
}

bool all_good(const StepFunction& rho) {
    const auto cv = critical_values(rho);
    return std::all_of(cv.begin(), cv.end(), [](const CriticalValue& c) { return c.good; });
}

std::int64_t half_unit_variation(const StepFunction& rho) {
    std::vector<std::int64_t> cells{0};
    const auto inner = rho.half_cells();
    cells.insert(cells.end(), inner.begin(), inner.end());
    cells.push_back(0);
    std::int64_t worst = 0;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        worst = std::max(worst, std::abs(cells[i + 1] - cells[i]));
    }
    return worst;
}

double weighted_rayleigh(const StepFunction& rho, const PiecewiseLinearFn& f) {
    const double end = rho.support_end().value();
    std::vector<double> cuts;
    for (HalfInt b : rho.breakpoints()) {
        cuts.push_back(b.value());
    }
    for (double x : f.nodes()) {
        if (x > 0.0 && x < end) {
            cuts.push_back(x);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double energy = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double x0 = cuts[i], x1 = cuts[i + 1];
        const double len = x1 - x0;
        const auto c = static_cast<double>(rho.at(0.5 * (x0 + x1)));
        const double fa = f(x0), fb = f(x1);
        energy += c * (fb - fa) * (fb - fa) / len;
        mass += c * len * (fa * fa + fa * fb + fb * fb) / 3.0;
    }
    if (mass == 0.0) {
        throw InputError("weighted_rayleigh: F vanishes on the support of rho");
    }
    return energy / mass;
}

namespace {

// Three-point Gauss-Legendre on [0, 1]; exact for polynomials of degree 5.
constexpr std::array<double, 3> kGaussX{0.5 - 0.3872983346207417, 0.5, 0.5 + 0.3872983346207417};
constexpr std::array<double, 3> kGaussW{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

struct EdgeIntegrals {
    double energy = 0.0;
    double mass = 0.0;
};

// Integrates over the edge parameter s in [s0, s1] where the distance is
// delta(s) = base + direction * s (direction = +1 or -1).
void integrate_segment(const PiecewiseLinearFn& f, double base, double direction, double s0, double s1,
                       EdgeIntegrals& acc) {
    std::vector<double> cuts{s0, s1};
    for (double node : f.nodes()) {
        const double s = (node - base) * direction;
        if (s > s0 && s < s1) {
            cuts.push_back(s);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double len = b - a;
        if (len <= 0.0) continue;
        for (int q = 0; q < 3; ++q) {
            const double s = a + kGaussX[q] * len;
            const double delta = base + direction * s;
            const double value = f(delta);
            acc.mass += kGaussW[q] * len * value * value;
        }
        // |d/ds F(delta(s))| = |F'(delta)|, constant on the piece.
        const double mid = base + direction * (0.5 * (a + b));
        const double d = f.slope(mid);
        acc.energy += len * d * d;
    }
}

}  // namespace

double metric_rayleigh(const Graph& g, VertexId root, const PiecewiseLinearFn& f) {
    if (root < 0 || root >= g.vertex_count()) {
        throw InputError("metric_rayleigh: root out of range");
    }
    g.require_connected("metric_rayleigh");
    const auto dist = bfs_distances(g, root);
    EdgeIntegrals acc;
    for (const Edge& e : g.edges()) {
        const double du = dist[e.u];
        const double dv = dist[e.v];
        if (du == dv) {
            // Geodesics enter from both ends; the distance peaks at s = 1/2.
            integrate_segment(f, du, +1.0, 0.0, 0.5, acc);
            integrate_segment(f, dv + 1.0, -1.0, 0.5, 1.0, acc);
        } else {
            integrate_segment(f, du, dv > du ? +1.0 : -1.0, 0.0, 1.0, acc);
        }
    }
    if (acc.mass == 0.0) {
        throw InputError("metric_rayleigh: F composed with the distance vanishes");
    }
    return acc.energy / acc.mass;
}

}  // namespace spgap
