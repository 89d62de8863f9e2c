#include "spgap/report.hpp"

namespace spgap {

json to_json(const Provenance& p) {
    return {{"base_n", p.base_n},
            {"alpha", p.alpha},
            {"seed", p.seed},
            {"eps", p.eps},
            {"expander_attempts", p.expander_attempts},
            {"base_lambda1", p.base_lambda1},
            {"subdivision", p.subdivision},
            {"goodify_rounds", p.goodify_rounds}};
}

json to_json(const TriangulationReport& r) {
    return {{"ok", r.ok()},
            {"faces_are_triangles", r.faces_are_triangles},
            {"edges_in_two_faces", r.edges_in_two_faces},
            {"euler", r.euler},
            {"simple", r.simple},
            {"degree_bounded", r.degree_bounded},
            {"connected", r.connected},
            {"euler_characteristic", r.euler_characteristic},
            {"max_degree", r.max_degree},
            {"degree_limit", r.degree_limit},
            {"failures", r.failures()}};
}

json to_json(const PipelineReport& r) {
    return {{"n", r.n},
            {"alpha", r.alpha},
            {"seed", r.seed},
            {"eps", r.eps},
            {"vertices", r.vertices},
            {"vol", r.vol},
            {"vol_y", r.vol_y},
            {"R", r.R},
            {"diam", r.diam},
            {"diam_y", r.diam_y},
            {"lambda1", r.lambda1},
            {"lambda1_y", r.lambda1_y},
            {"lambda1_method", std::string(to_string(r.lambda1_method))},
            {"ratio_thm2", r.ratio_thm2},
            {"degree_max", r.degree_max},
            {"max_width", r.max_width},
            {"goodify_rounds", r.goodify_rounds},
            {"validator", to_json(r.validator)}};
}

json to_json(const Certificate& c) {
    json sides = json::array();
    for (const TentSide& s : c.sides) {
        sides.push_back({{"root", s.root},
                         {"j", s.j},
                         {"selection_ratio", s.selection_ratio},
                         {"quotient", s.quotient}});
    }
    return {{"k", c.k},
            {"diameter", c.diameter},
            {"volume_constant", c.volume_constant},
            {"exponent", c.exponent},
            {"shell_width", c.shell_width},
            {"sides", sides},
            {"bound", c.bound},
            {"max_quotient", c.max_quotient()},
            {"ratio_within_bound", c.ratio_within_bound},
            {"vertex_pair_bound", c.vertex_pair_bound}};
}

json to_json(const Theorem1Report& r) {
    json j = {{"lambda1", r.lambda1},
              {"diameter", r.diameter},
              {"volume", r.volume},
              {"branch", std::string(to_string(r.branch))},
              {"bound_value", r.bound_value},
              {"c_fit", r.c_fit},
              {"ratio", r.ratio}};
    j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    return j;
}

json to_json(const SandwichReport& r) {
    return {{"tau", r.tau},
            {"policy", std::string(to_string(r.policy))},
            {"lambda1", r.lambda1},
            {"vol", r.vol},
            {"log_vol", r.log_vol},
            {"lower", r.lower},
            {"upper", r.upper},
            {"c_fit", r.c_fit}};
}

json to_json(const NoBcReport& r) {
    return {{"labels", r.labels},
            {"diam", r.diam},
            {"statistic", r.statistic},
            {"c_fit", r.c_fit},
            {"spread", r.spread},
            {"trend", r.trend}};
}

json to_json(const MixingResult& r, bool with_curve) {
    json j = {{"tau", r.tau}, {"start_policy", std::string(to_string(r.start_policy))}, {"starts", r.starts}};
    if (with_curve) {
        j["tv_curve"] = r.tv_curve;
    }
    return j;
}

json to_json(const StepFunction& rho) {
    json bp = json::array();
    for (HalfInt b : rho.breakpoints()) bp.push_back(b.value());
    return {{"breakpoints", bp},
            {"values", rho.values()},
            {"support_end", rho.support_end().value()},
            {"integral", static_cast<double>(rho.integral_twice()) / 2.0}};
}

json to_json(const std::vector<CriticalValue>& cvs) {
    json out = json::array();
    for (const CriticalValue& c : cvs) {
        out.push_back({{"t", c.t.value()}, {"jump", c.jump}, {"good", c.good}});
    }
    return out;
}

}  // namespace spgap
