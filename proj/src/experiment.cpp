#include "spgap/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "spgap/errors.hpp"

namespace spgap {

void for_each_bounded(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    const auto workers = static_cast<std::size_t>(std::clamp<long long>(jobs, 1, std::max<long long>(1, count)));
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < count; i += workers) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::vector<XnArtifacts> generate_family(const FamilyConfig& config) {
    if (config.n_list.empty()) {
        throw InputError("generate_family: empty n list");
    }
    std::vector<XnArtifacts> out(config.n_list.size());
    for_each_bounded(out.size(), config.jobs, [&](std::size_t i) {
        out[i] = build_xn(config.n_list[i], config.alpha, config.eps, config.seed, config.solver);
    });
    return out;
}

FamilyMember member_of(const XnArtifacts& art) {
    return {"X_" + std::to_string(art.report.n), art.x, art.y.graph, art.y.root};
}

json artifact_sidecar(const XnArtifacts& art) {
    const std::string n = std::to_string(art.report.n);
    return {{"kind", "artifact"},
            {"files", {{"y", "Y_" + n + ".g"}, {"x", "X_" + n + ".tri"}}},
            {"provenance", to_json(art.y.provenance)},
            {"widths", art.profile.widths},
            {"pipeline", to_json(art.report)}};
}

bool VerifyOutcome::pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.status == "fail"; });
}

namespace {

struct MemberResult {
    std::string label;
    std::size_t vertices = 0;
    std::size_t vol = 0;
    int diam = 0;
    double lambda1 = 0.0;
    double lambda1_y = 0.0;
    double lambda1_cylinder = 0.0;
    double lambda1_sturm = 0.0;
    SigmaProfile sigma;
    bool invariant = false;
    double ratio_thm2 = 0.0;
    long long tau = 0;
    SandwichReport sandwich;
    std::optional<Theorem1Report> thm1;
    std::string thm1_skip;
    TriangulationReport validator;
};

struct ControlResult {
    std::string label;
    int k = 0;
    int diam = 0;
    double lambda1 = 0.0;
    double lambda1_closed_form = 0.0;
    SandwichReport sandwich;
    std::optional<Theorem1Report> thm1;
    std::string thm1_skip;
};

double thm2_ratio(double lambda1, int diam) {
    const double d = diam;
    return lambda1 * std::pow(d / std::log(d), 2);
}

void attempt_thm1(const Graph& g, int degree, int diam, const IterativeOptions& solver,
                  std::optional<Theorem1Report>& out, std::string& skip) {
    if (diam < kCertificateMinDiameter) {
        skip = "diameter below " + std::to_string(kCertificateMinDiameter);
        return;
    }
    try {
        out = verify_thm1(g, degree, solver);
    } catch (const InputError& e) {
        skip = e.what();
    }
}

long long cycle_tau(int k, double tv_eps) {
    MixingOptions mo;
    mo.eps = tv_eps;
    // Cycles are vertex transitive, every start is a worst start.
    mo.policy = StartPolicy::heuristic;
    return mixing_time(named::cycle(k), mo).tau;
}

json band_json(const std::vector<double>& values, double limit) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {{"min", *lo}, {"max", *hi}, {"ratio", *hi / *lo}, {"limit", limit}};
}

}  // namespace

VerifyOutcome run_verify(const std::vector<FamilyMember>& family, const VerifyOptions& options) {
    if (family.empty() && options.cycle_controls.empty()) {
        throw InputError("verify: no artifacts and no controls");
    }
    std::vector<MemberResult> members(family.size());
    for_each_bounded(family.size(), options.jobs, [&](std::size_t i) {
        const FamilyMember& f = family[i];
        MemberResult& m = members[i];
        const Graph& x = f.x.graph;
        m.label = f.label;
        m.vertices = static_cast<std::size_t>(x.vertex_count());
        m.vol = x.edge_count();
        m.diam = diameter(x);
        m.lambda1 = lambda1(x, options.solver).lambda1;
        m.lambda1_y = lambda1(f.y, options.solver).lambda1;
        const StepFunction rho = distance_density(f.y, f.root);
        const BumpyCylinder cyl = build_bumpy_cylinder(width_profile(rho));
        m.lambda1_cylinder = lambda1(cyl.graph, options.solver).lambda1;
        m.sigma = smooth_sigma(rho, kSturmGridStep);
        m.lambda1_sturm = neumann_lambda1(m.sigma);
        m.invariant = invariance_threshold_check(m.sigma, m.lambda1_sturm);
        m.ratio_thm2 = thm2_ratio(m.lambda1, m.diam);

        MixingOptions mo;
        mo.eps = options.tv_eps;
        mo.policy = StartPolicy::heuristic;
        // cone_off numbers the two apexes last.
        mo.extra_starts = {x.vertex_count() - 2, x.vertex_count() - 1};
        m.tau = mixing_time(x, mo).tau;
        m.sandwich = make_sandwich(m.tau, mo.policy, m.lambda1, m.vol);
        attempt_thm1(x, kDegreeCap, m.diam, options.solver, m.thm1, m.thm1_skip);
        m.validator = validate_sphere_triangulation(f.x, kDegreeCap);
    });

    std::vector<ControlResult> controls(options.cycle_controls.size());
    for_each_bounded(controls.size(), options.jobs, [&](std::size_t i) {
        const int k = options.cycle_controls[i];
        if (k < 6) {
            throw InputError("verify: cycle control length must be at least 6");
        }
        ControlResult& c = controls[i];
        const Graph g = named::cycle(k);
        c.label = "C_" + std::to_string(k);
        c.k = k;
        c.diam = k / 2;
        c.lambda1 = lambda1(g, options.solver).lambda1;
        c.lambda1_closed_form = 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / k));
        MixingOptions mo;
        mo.eps = options.tv_eps;
        if (static_cast<std::size_t>(k) > kWorstExactLimit) mo.policy = StartPolicy::heuristic;
        c.sandwich = make_sandwich(mixing_time(g, mo).tau, mo.policy, c.lambda1, g.edge_count());
        attempt_thm1(g, 2, c.diam, options.solver, c.thm1, c.thm1_skip);
    });

    VerifyOutcome out;
    auto add = [&](std::string name, std::string status, json detail) {
        out.checks.push_back({std::move(name), std::move(status), std::move(detail)});
    };
    json constants = json::object();

    // Structure.
    if (members.empty()) {
        add("structure", "skipped", {{"reason", "no family members"}});
    } else {
        bool ok = true;
        json per = json::object();
        for (const MemberResult& m : members) {
            ok = ok && m.validator.ok();
            per[m.label] = m.validator.ok();
        }
        add("structure", ok ? "pass" : "fail", {{"members", per}});
    }

    // Tent certificates: soundness wherever one applies.
    {
        int attempted = 0;
        bool ok = true;
        std::vector<double> ratios;
        auto check = [&](const std::optional<Theorem1Report>& r, double ratio) {
            ratios.push_back(ratio);
            if (!r || !r->certificate) return;
            ++attempted;
            const Certificate& c = *r->certificate;
            const double slack = 1.0 + 1e-9;
            ok = ok && c.max_quotient() <= c.bound * slack && r->lambda1 <= c.max_quotient() * slack &&
                 r->lambda1 <= c.vertex_pair_bound * slack;
        };
        for (const MemberResult& m : members) check(m.thm1, m.ratio_thm2);
        for (const ControlResult& c : controls) check(c.thm1, thm2_ratio(c.lambda1, c.diam));
        const double ratio_c = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
        constants["thm1_ratio_C"] = ratio_c;
        add("thm1", attempted == 0 ? "skipped" : (ok ? "pass" : "fail"),
            {{"certificates", attempted}, {"ratio_C", ratio_c}});
    }

    // lambda1 (diam / ln diam)^2 band and the X / Y comparison chain.
    if (members.empty()) {
        add("thm2_band", "skipped", {{"reason", "no family members"}});
        add("sturm_band", "skipped", {{"reason", "no family members"}});
    } else {
        std::vector<double> ratio, chain, sturm;
        for (const MemberResult& m : members) {
            ratio.push_back(m.ratio_thm2);
            chain.push_back(m.lambda1 / m.lambda1_y);
            sturm.push_back(m.lambda1_sturm / m.lambda1_cylinder);
        }
        const json rb = band_json(ratio, kThm2BandLimit);
        const json cb = band_json(chain, kChainBandLimit);
        const json sb = band_json(sturm, kSturmBandLimit);
        constants["thm2_c"] = rb["min"];
        constants["thm2_C"] = rb["max"];
        constants["chain_c1"] = cb["min"];
        constants["chain_c2"] = cb["max"];
        const bool thm2_ok = rb["ratio"].get<double>() <= kThm2BandLimit && cb["ratio"].get<double>() <= kChainBandLimit;
        add("thm2_band", thm2_ok ? "pass" : "fail", {{"ratio_band", rb}, {"chain_band", cb}});
        const bool invariant = std::all_of(members.begin(), members.end(), [](const MemberResult& m) { return m.invariant; });
        add("sturm_band", sb["ratio"].get<double>() <= kSturmBandLimit ? "pass" : "fail",
            {{"band", sb}, {"rotation_invariant", invariant}});
    }

    // One sandwich constant for everything measured.
    {
        double c = 0.0;
        for (const MemberResult& m : members) c = std::max(c, m.sandwich.c_fit);
        for (const ControlResult& k : controls) c = std::max(c, k.sandwich.c_fit);
        constants["sandwich_C"] = c;
        add("mixing_sandwich", c <= kSandwichLimit ? "pass" : "fail", {{"C_fit", c}, {"limit", kSandwichLimit}});
    }

    // noBC: the family statistic against cycles with the same diameters.
    if (members.size() < 3) {
        add("no_bc", "skipped", {{"reason", "needs at least 3 family members"}});
    } else {
        std::vector<NoBcMember> xs(members.size()), cs(members.size());
        for_each_bounded(members.size(), options.jobs, [&](std::size_t i) {
            const MemberResult& m = members[i];
            xs[i] = {m.label, m.tau, m.diam};
            cs[i] = {"C_" + std::to_string(2 * m.diam), cycle_tau(2 * m.diam, options.tv_eps), m.diam};
        });
        const NoBcReport xr = verify_no_bc(xs);
        const NoBcReport cr = verify_no_bc(cs);
        constants["nobc_C"] = xr.c_fit;
        add("no_bc", xr.trend < cr.trend ? "pass" : "fail",
            {{"family", to_json(xr)}, {"cycle_control", to_json(cr)}});
    }

    json member_json = json::array();
    for (const MemberResult& m : members) {
        json j = {{"label", m.label},
                  {"vertices", m.vertices},
                  {"vol", m.vol},
                  {"diam", m.diam},
                  {"lambda1", m.lambda1},
                  {"lambda1_y", m.lambda1_y},
                  {"lambda1_cylinder", m.lambda1_cylinder},
                  {"lambda1_sturm", m.lambda1_sturm},
                  {"sigma",
                   {{"R", m.sigma.R},
                    {"h", m.sigma.h},
                    {"band", m.sigma.band},
                    {"interior_band", m.sigma.interior_band},
                    {"max_curvature", m.sigma.max_curvature},
                    {"rotation_invariant", m.invariant}}},
                  {"ratio_thm2", m.ratio_thm2},
                  {"sandwich", to_json(m.sandwich)},
                  {"validator", to_json(m.validator)}};
        j["thm1"] = m.thm1 ? to_json(*m.thm1) : json{{"skipped", m.thm1_skip}};
        member_json.push_back(std::move(j));
    }
    json control_json = json::array();
    for (const ControlResult& c : controls) {
        json j = {{"label", c.label},
                  {"diam", c.diam},
                  {"lambda1", c.lambda1},
                  {"lambda1_closed_form", c.lambda1_closed_form},
                  {"ratio_thm2", thm2_ratio(c.lambda1, c.diam)},
                  {"sandwich", to_json(c.sandwich)}};
        j["thm1"] = c.thm1 ? to_json(*c.thm1) : json{{"skipped", c.thm1_skip}};
        control_json.push_back(std::move(j));
    }
    json checks = json::array();
    for (const CheckOutcome& c : out.checks) {
        checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    }
    out.report = {{"kind", "verify"},
                  {"pass", out.pass()},
                  {"checks", checks},
                  {"constants", constants},
                  {"members", member_json},
                  {"controls", control_json}};
    return out;
}

}  // namespace spgap
