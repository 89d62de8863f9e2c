#pragma once

// JSON views of the result structs. Field names are the ones published in
// schemas/report.schema.json.

#include "json.hpp"

#include "spgap/cylinder.hpp"
#include "spgap/family.hpp"
#include "spgap/profile.hpp"
#include "spgap/spectral.hpp"
#include "spgap/sturm.hpp"
#include "spgap/upper_bound.hpp"
#include "spgap/walk.hpp"

namespace spgap {

using json = nlohmann::ordered_json;

json to_json(const Provenance& p);
json to_json(const TriangulationReport& r);
json to_json(const PipelineReport& r);
json to_json(const Certificate& c);
json to_json(const Theorem1Report& r);
json to_json(const SandwichReport& r);
json to_json(const NoBcReport& r);
json to_json(const MixingResult& r, bool with_curve);
json to_json(const StepFunction& rho);
json to_json(const std::vector<CriticalValue>& cvs);

}  // namespace spgap
