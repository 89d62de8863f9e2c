#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spgap/errors.hpp"
#include "spgap/experiment.hpp"
#include "spgap/io.hpp"
#include "spgap/report.hpp"
#include "spgap/rng.hpp"

namespace fs = std::filesystem;
using namespace spgap;

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kCheck = 2, kIo = 3 };

struct Config {
    std::vector<int> n_list;
    int alpha = 1;
    double eps = kDefaultExpanderEps;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int max_iter = 0;
    std::string out;
    std::string in;
    std::string format = "json";
    std::optional<int> root;
    std::string policy = "worst_exact";
    double tv_eps = 0.25;
    std::vector<int> cycles;
    int jobs = 1;
};

IterativeOptions solver_options(const Config& c) {
    IterativeOptions o;
    o.tol = c.tol;
    o.max_iterations = c.max_iter;
    o.seed = substream(c.seed, "solver");
    return o;
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
    } else {
        io::save_text(c.out, text);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_gen(const Config& c) {
    if (c.n_list.empty()) {
        throw InputError("gen: --n is required");
    }
    const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
    FamilyConfig fc;
    fc.n_list = c.n_list;
    fc.alpha = c.alpha;
    fc.eps = c.eps;
    fc.seed = c.seed;
    fc.solver.tol = c.tol;
    fc.solver.max_iterations = c.max_iter;
    fc.jobs = c.jobs;
    const std::vector<XnArtifacts> family = generate_family(fc);
    int status = kOk;
    for (const XnArtifacts& art : family) {
        const std::string n = std::to_string(art.report.n);
        std::ostringstream y;
        io::write_rooted(y, art.y.graph, art.y.root);
        io::save_text(dir / ("Y_" + n + ".g"), y.str());
        io::save_text(dir / ("X_" + n + ".tri"), io::to_string(art.x));
        io::save_text(dir / ("X_" + n + ".json"), dump(artifact_sidecar(art)));
        std::printf("X_%s: %zu vertices, diam %d, lambda1 %.6g\n", n.c_str(), art.report.vertices, art.report.diam,
                    art.report.lambda1);
        if (!art.report.validator.ok()) {
            std::fprintf(stderr, "X_%s fails the triangulation validator\n", n.c_str());
            status = kCheck;
        }
    }
    return status;
}

int cmd_verify(const Config& c) {
    std::vector<FamilyMember> family;
    if (!c.n_list.empty()) {
        const fs::path dir = c.in.empty() ? fs::path(".") : fs::path(c.in);
        for (int n : c.n_list) {
            const std::string s = std::to_string(n);
            FamilyMember m;
            m.label = "X_" + s;
            m.x = io::load_triangulation(dir / ("X_" + s + ".tri"));
            std::tie(m.y, m.root) = io::load_rooted(dir / ("Y_" + s + ".g"));
            family.push_back(std::move(m));
        }
    }
    VerifyOptions vo;
    vo.solver = solver_options(c);
    vo.cycle_controls = c.cycles;
    vo.tv_eps = c.tv_eps;
    vo.jobs = c.jobs;
    const VerifyOutcome outcome = run_verify(family, vo);
    emit(c, dump(outcome.report));
    for (const CheckOutcome& check : outcome.checks) {
        std::fprintf(stderr, "%-16s %s\n", check.name.c_str(), check.status.c_str());
    }
    return outcome.pass() ? kOk : kCheck;
}

int cmd_spectrum(const Config& c) {
    const Graph g = io::load_graph(c.in);
    const SpectralResult r = lambda1(g, solver_options(c));
    const int diam = diameter(g);
    if (c.format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "vertices,edges,diam,lambda1,residual,method\n"
            << g.vertex_count() << ',' << g.edge_count() << ',' << diam << ',' << r.lambda1 << ',' << r.residual
            << ',' << to_string(r.method) << '\n';
        emit(c, out.str());
    } else {
        emit(c, dump({{"kind", "spectrum"},
                      {"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"diam", diam},
                      {"lambda1", r.lambda1},
                      {"residual", r.residual},
                      {"method", std::string(to_string(r.method))},
                      {"iterations", r.iterations}}));
    }
    return kOk;
}

int cmd_mixing(const Config& c) {
    const Graph g = io::load_graph(c.in);
    MixingOptions mo;
    mo.policy = parse_start_policy(c.policy);
    mo.eps = c.tv_eps;
    mo.keep_start_curves = c.format == "csv";
    const MixingResult r = mixing_time(g, mo);
    if (c.format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "start,t,tv\n";
        for (std::size_t k = 0; k < r.starts.size(); ++k) {
            for (std::size_t t = 0; t < r.start_curves[k].size(); ++t) {
                out << r.starts[k] << ',' << t << ',' << r.start_curves[k][t] << '\n';
            }
        }
        emit(c, out.str());
    } else {
        json j = to_json(r, true);
        j["kind"] = "mixing";
        j["eps"] = mo.eps;
        emit(c, dump(j));
    }
    return kOk;
}

int cmd_density(const Config& c) {
    Graph g;
    VertexId root = 0;
    if (c.root) {
        g = io::load_graph(c.in);
        if (*c.root < 0 || *c.root >= g.vertex_count()) {
            throw InputError("density: --root out of range");
        }
        root = *c.root;
    } else {
        std::tie(g, root) = io::load_rooted(c.in);
    }
    g.require_connected("density");
    const StepFunction rho = distance_density(g, root);
    if (c.format == "csv") {
        std::ostringstream out;
        out << "t_start,t_end,rho\n";
        const auto& bp = rho.breakpoints();
        for (std::size_t i = 0; i < rho.values().size(); ++i) {
            out << bp[i].value() << ',' << bp[i + 1].value() << ',' << rho.values()[i] << '\n';
        }
        emit(c, out.str());
    } else {
        emit(c, dump({{"kind", "density"},
                      {"root", root},
                      {"edges", g.edge_count()},
                      {"rho", to_json(rho)},
                      {"critical_values", to_json(critical_values(rho))}}));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral gaps, distance densities and mixing times of planar graph families"};
    app.require_subcommand(1);
    Config c;

    auto n_option = [&](CLI::App* sub) {
        return sub->add_option("--n", c.n_list, "comma separated base sizes (even, >= 4)")->delimiter(',');
    };
    auto tol_option = [&](CLI::App* sub) {
        sub->add_option("--tol", c.tol, "iterative solver tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--max-iter", c.max_iter, "iterative solver matrix-vector cap (default 50 sqrt V)")
            ->check(CLI::PositiveNumber);
    };
    auto seed_option = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--seed", c.seed, "master seed");
        if (required) o->required();
    };
    auto format_option = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* gen = app.add_subcommand("gen", "build Y_n and X_n artifacts");
    n_option(gen)->required();
    gen->add_option("--alpha", c.alpha, "subdivision exponent, m = n^alpha")->check(CLI::Range(0, 6));
    gen->add_option("--eps", c.eps, "expander certification threshold")->check(CLI::PositiveNumber);
    seed_option(gen, true);
    tol_option(gen);
    gen->add_option("--out", c.out, "output directory");
    gen->add_option("--jobs", c.jobs, "family members built concurrently")->check(CLI::Range(1, 64));

    auto* verify = app.add_subcommand("verify", "run the band and certificate checks over artifacts and controls");
    n_option(verify);
    verify->add_option("--in", c.in, "artifact directory");
    verify->add_option("--cycles", c.cycles, "cycle control lengths")->delimiter(',');
    seed_option(verify, false);
    tol_option(verify);
    verify->add_option("--tv-eps", c.tv_eps, "total variation threshold")->check(CLI::Range(0.0, 1.0));
    verify->add_option("--out", c.out, "report path (default stdout)");
    verify->add_option("--jobs", c.jobs, "family members processed concurrently")->check(CLI::Range(1, 64));

    auto* spectrum = app.add_subcommand("spectrum", "spectral gap of one graph");
    spectrum->add_option("--in", c.in, "graph file")->required();
    seed_option(spectrum, false);
    tol_option(spectrum);
    format_option(spectrum);
    spectrum->add_option("--out", c.out, "output path (default stdout)");

    auto* mixing = app.add_subcommand("mixing", "lazy walk mixing time of one graph");
    mixing->add_option("--in", c.in, "graph file")->required();
    mixing->add_option("--policy", c.policy, "worst_exact or heuristic")
        ->check(CLI::IsMember({"worst_exact", "heuristic"}));
    mixing->add_option("--tv-eps", c.tv_eps, "total variation threshold")->check(CLI::Range(0.0, 1.0));
    format_option(mixing);
    mixing->add_option("--out", c.out, "output path (default stdout)");

    auto* density = app.add_subcommand("density", "distance density of a rooted graph");
    density->add_option("--in", c.in, "graph file")->required();
    density->add_option("--root", c.root, "root vertex (default: the file's root line)");
    density->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    density->add_option("--out", c.out, "output path (default stdout)");
    density->preparse_callback([&](std::size_t) { c.format = "csv"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (gen->parsed()) return cmd_gen(c);
        if (verify->parsed()) return cmd_verify(c);
        if (spectrum->parsed()) return cmd_spectrum(c);
        if (mixing->parsed()) return cmd_mixing(c);
        if (density->parsed()) return cmd_density(c);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConfig;
    } catch (const CheckFailure& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return kCheck;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kIo;
    }
    return kOk;
}
