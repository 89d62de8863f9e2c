#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spgap/cylinder.hpp"
#include "spgap/report.hpp"

namespace spgap {

// Runs fn(0..count-1) on at most `jobs` threads. The first exception (by
// index) is rethrown after all workers finish.
void for_each_bounded(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

struct FamilyConfig {
    std::vector<int> n_list;
    int alpha = 1;
    double eps = kDefaultExpanderEps;
    std::uint64_t seed = 0;
    IterativeOptions solver;
    int jobs = 1;
};

std::vector<XnArtifacts> generate_family(const FamilyConfig& config);

// Everything verify needs from one family member; what gen writes to disk.
struct FamilyMember {
    std::string label;
    SphereTriangulation x;
    Graph y;
    VertexId root = 0;
};

FamilyMember member_of(const XnArtifacts& art);

// Provenance sidecar written next to X_n by gen.
json artifact_sidecar(const XnArtifacts& art);

inline constexpr double kThm2BandLimit = 50.0;    // C / c for lambda1 (diam / ln diam)^2
inline constexpr double kChainBandLimit = 25.0;   // c2 / c1 for lambda1(X) / lambda1(Y)
inline constexpr double kSturmBandLimit = 25.0;   // max / min of lambda1(sturm) / lambda1(cylinder)
inline constexpr double kSandwichLimit = 100.0;   // one C for the whole corpus
inline constexpr double kSturmGridStep = 1.0 / 16.0;
inline constexpr int kCertificateMinDiameter = 30;

struct VerifyOptions {
    IterativeOptions solver;
    std::vector<int> cycle_controls;  // cycle lengths
    double tv_eps = 0.25;
    int jobs = 1;
};

struct CheckOutcome {
    std::string name;
    std::string status;  // pass, fail or skipped
    json detail;
};

struct VerifyOutcome {
    std::vector<CheckOutcome> checks;
    json report;

    bool pass() const;
};

// Tent certificates, the diameter and Sturm bands, the mixing
// sandwich, the noBC contrast against cycles of matching diameter, and the
// triangulation validator over the family plus cycle controls. Throws
// InputError when both lists are empty.
VerifyOutcome run_verify(const std::vector<FamilyMember>& family, const VerifyOptions& options);

}  // namespace spgap
