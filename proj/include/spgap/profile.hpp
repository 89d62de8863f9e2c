#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spgap/graph.hpp"

namespace spgap {

// A point of (1/2)Z stored exactly as its double.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr double value() const { return static_cast<double>(twice) / 2.0; }
    constexpr bool is_integer() const { return twice % 2 == 0; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

// Jump size above which a critical value is bad. The bound is tailored to
// graphs of degree at most 3.
inline constexpr std::int64_t kGoodJumpLimit = 3;

// Integer-valued step function supported on [0, R] with breakpoints in
// (1/2)Z. values()[i] holds on the open interval
// (breakpoints()[i], breakpoints()[i+1]); adjacent values differ.
class StepFunction {
public:
    StepFunction() = default;

    // From values on consecutive half-unit cells (0, 1/2), (1/2, 1), ...
    static StepFunction from_half_cells(std::span<const std::int64_t> cells);

    const std::vector<HalfInt>& breakpoints() const { return breakpoints_; }
    const std::vector<std::int64_t>& values() const { return values_; }
    HalfInt support_end() const { return breakpoints_.empty() ? HalfInt{} : breakpoints_.back(); }

    // Value at t, taking the right-continuous convention at breakpoints and
    // 0 outside [0, R).
    std::int64_t at(double t) const;

    // Exact integral times two (integer arithmetic on doubled breakpoints).
    std::int64_t integral_twice() const;

    std::int64_t max_value() const;

    // Value on each half-unit cell of [0, R].
    std::vector<std::int64_t> half_cells() const;

private:
    std::vector<HalfInt> breakpoints_;
    std::vector<std::int64_t> values_;
};

// Piecewise-linear function given by nodes and node values, linear between
// nodes and constant beyond the first and last node.
class PiecewiseLinearFn {
public:
    PiecewiseLinearFn() = default;
    PiecewiseLinearFn(std::vector<double> nodes, std::vector<double> values);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& node_values() const { return values_; }

    double operator()(double t) const;
    // One-sided derivative from the right; 0 outside the node range.
    double slope(double t) const;

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
};

// Density of the pushforward of edge length under the distance from root:
// a monotone edge from level a to a+1 adds 1 on (a, a+1), an edge inside
// level a folds at its midpoint and adds 2 on (a, a+1/2).
StepFunction distance_density(const Graph& g, VertexId root);

struct CriticalValue {
    HalfInt t;
    std::int64_t jump = 0;  // value just after t minus value just before
    bool good = true;
};

// Discontinuities of rho including 0 and R, in increasing order.
std::vector<CriticalValue> critical_values(const StepFunction& rho);

bool all_good(const StepFunction& rho);

// max |rho(t) - rho(s)| over |t - s| < 1/2, evaluated on half-unit cells
// (rho is constant on each, and two points closer than 1/2 lie in the same
// or in adjacent cells).
std::int64_t half_unit_variation(const StepFunction& rho);

// Integral of F'^2 rho over Integral of F^2 rho, integrated exactly piecewise.
double weighted_rayleigh(const StepFunction& rho, const PiecewiseLinearFn& f);

// Rayleigh quotient of F composed with the distance from root on the metric
// graph, integrated edge by edge in the edge parameter.
double metric_rayleigh(const Graph& g, VertexId root, const PiecewiseLinearFn& f);

}  // namespace spgap
