#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spgap/graph.hpp"
#include "spgap/spectral.hpp"

namespace spgap {

enum class StartPolicy { worst_exact, heuristic };

std::string_view to_string(StartPolicy p);
StartPolicy parse_start_policy(std::string_view s);  // InputError on unknown names

inline constexpr std::size_t kWorstExactLimit = 2000;

struct MixingOptions {
    StartPolicy policy = StartPolicy::worst_exact;
    double eps = 0.25;
    // Used by the heuristic policy in addition to the double-sweep endpoints
    // (for X_n: the two cone apexes).
    std::vector<VertexId> extra_starts;
    long long max_steps = 50'000'000;
    bool keep_start_curves = false;
};

struct MixingResult {
    long long tau = 0;
    StartPolicy start_policy = StartPolicy::worst_exact;
    std::vector<VertexId> starts;
    std::vector<double> tv_curve;  // tv_curve[t] = max over starts of TV at step t, t = 0..tau
    std::vector<std::vector<double>> start_curves;  // per start, filled when requested
};

// Lazy walk (stay with probability 1/2), stationary distribution deg / 2E,
// iterated exactly from every chosen start until the worst TV is <= eps.
// InputError: disconnected graph, worst_exact above 2000 vertices, bad eps.
// CheckFailure: TV increased along some start, or the step cap was hit.
MixingResult mixing_time(const Graph& g, const MixingOptions& options = {});

// Stationary distribution deg(x) / 2E.
std::vector<double> stationary_distribution(const Graph& g);

// tau, lambda1 and the smallest C with 1/(C lambda1) <= tau <= C ln(vol)/lambda1.
struct SandwichReport {
    long long tau = 0;
    StartPolicy policy = StartPolicy::worst_exact;
    double lambda1 = 0.0;
    std::size_t vol = 0;
    double log_vol = 0.0;  // max(1, ln vol)
    double lower = 0.0;    // 1 / lambda1
    double upper = 0.0;    // log_vol / lambda1
    double c_fit = 0.0;
};

// Sandwich from an already measured tau and lambda1.
SandwichReport make_sandwich(long long tau, StartPolicy policy, double lambda1, std::size_t vol);

// Picks worst_exact up to 2000 vertices and the heuristic policy above,
// unless options say otherwise.
SandwichReport verify_mixing_sandwich(const Graph& g, const MixingOptions& options,
                                      const IterativeOptions& solver = {});
SandwichReport verify_mixing_sandwich(const Graph& g);

struct NoBcMember {
    std::string label;
    long long tau = 0;
    int diam = 0;
};

struct NoBcReport {
    std::vector<std::string> labels;
    std::vector<int> diam;
    std::vector<double> statistic;  // tau ln(diam) / diam^2
    double c_fit = 0.0;             // max statistic
    double spread = 0.0;            // max / min statistic
    // Least-squares slope of ln(statistic) against ln(ln(diam)): about 1 when
    // tau ~ diam^2, at most 0 when tau ~ diam^2 / ln(diam).
    double trend = 0.0;
};

// Throws InputError with fewer than 3 members or a member with diam < 2.
NoBcReport verify_no_bc(const std::vector<NoBcMember>& members);

}  // namespace spgap
