// ph: persistence diagrams of graphs under inclusions and contractions.
//
// Exit codes: 0 success, 1 failed check, 2 bad input.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gph/api.hpp"
#include "gph/io.hpp"
#include "gph/metrics.hpp"
#include "gph/random.hpp"
#include "gph/stability.hpp"
#include "gph/witness.hpp"

#ifndef GPH_FIXTURE_DIR
#define GPH_FIXTURE_DIR "fixtures"
#endif

namespace {

using gph::io::json;

struct ComputeArgs {
    std::string mode, graph, filtration, g, sigma, tau, schedule, time, out;
    bool drop_zero = false;
};

void add_compute_flags(CLI::App* cmd, ComputeArgs& a) {
    cmd->add_option("--mode", a.mode, "forward|backward|fb|fg|sigma-tau|extended|ff|hourglass")
        ->required()
        ->check(CLI::IsMember({"forward", "backward", "fb", "fg", "sigma-tau", "extended", "ff", "hourglass"}));
    cmd->add_option("--graph", a.graph, "graph JSON")->required();
    cmd->add_option("--filtration", a.filtration, "filtration JSON")->required();
    cmd->add_option("--g", a.g, "second filtration JSON (fg)");
    cmd->add_option("--sigma", a.sigma, "inclusion permutation JSON (sigma-tau)");
    cmd->add_option("--tau", a.tau, "contraction permutation JSON (sigma-tau)");
    cmd->add_option("--schedule", a.schedule, "schedule JSON (hourglass)");
    cmd->add_option("--time", a.time, "step|function")->check(CLI::IsMember({"step", "function"}));
    cmd->add_flag("--drop-zero", a.drop_zero, "drop zero-length pairs");
    cmd->add_option("--out", a.out, "write to file instead of stdout");
}

int run_compute(const ComputeArgs& a, bool use_oracle) {
    if (a.mode == "fg" && a.g.empty()) throw gph::InputError("UsageError", {"--mode fg needs --g"});
    if (a.mode == "sigma-tau" && (a.sigma.empty() || a.tau.empty()))
        throw gph::InputError("UsageError", {"--mode sigma-tau needs --sigma and --tau"});
    if (a.mode == "hourglass" && a.schedule.empty())
        throw gph::InputError("UsageError", {"--mode hourglass needs --schedule"});
    if (a.time == "function" && !gph::has_function_time(a.mode))
        throw gph::InputError("FunctionTimeUndefined", {"mode " + a.mode + " has combinatorial time only"});

    auto G = gph::io::graph_from_json(gph::io::read_json_file(a.graph));
    auto f = gph::io::filtration_from_json(G, gph::io::read_json_file(a.filtration));
    std::optional<gph::Filtration> g;
    std::optional<gph::Permutation> sigma, tau;
    std::optional<gph::HourglassSchedule> sched;
    gph::Inputs in;
    in.f = &f;
    if (!a.g.empty()) in.g = &g.emplace(gph::io::filtration_from_json(G, gph::io::read_json_file(a.g)));
    if (!a.sigma.empty())
        in.sigma = &sigma.emplace(gph::io::permutation_from_json(gph::io::read_json_file(a.sigma), f.num_levels()));
    if (!a.tau.empty())
        in.tau = &tau.emplace(gph::io::permutation_from_json(gph::io::read_json_file(a.tau), f.num_levels()));
    if (!a.schedule.empty()) in.schedule = &sched.emplace(gph::io::schedule_from_json(gph::io::read_json_file(a.schedule)));

    auto d = use_oracle ? gph::compute_oracle(G, a.mode, in) : gph::compute(G, a.mode, in);
    if (a.time == "step") d = gph::strip_values(d);
    if (a.drop_zero) d = gph::drop_zero_length(d);
    auto j = gph::io::to_json(d);
    if (a.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        gph::io::write_json_file(a.out, j);
    return 0;
}

int run_distance(int dim, bool exclude, const std::string& a, const std::string& b) {
    auto d1 = gph::io::diagram_from_json(gph::io::read_json_file(a));
    auto d2 = gph::io::diagram_from_json(gph::io::read_json_file(b));
    double x = exclude ? gph::bottleneck_excluding_essential(d1, d2, dim) : gph::bottleneck_distance(d1, d2, dim);
    std::cout << gph::io::number_or_inf(x).dump() << "\n";
    return 0;
}

int run_witness(const std::string& dir) {
    auto checks = gph::witness::run_all(dir);
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}

int stability_command(const gph::StabilityOptions& opt) {
    auto rep = gph::run_stability(opt);
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << "trials " << rep.trials << " violations " << rep.violations << " max_ratio " << rep.max_ratio
              << "\n";
    return rep.violations == 0 ? 0 : 1;
}

struct BenchArgs {
    std::string kind = "sparse";
    int edges = 100000;
    int cycles = 2000;
    int side = 300;
    int threshold = -1;
    std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& a) {
    using clock = std::chrono::steady_clock;
    auto secs = [](clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); };
    gph::rnd::Rng rng(a.seed);
    gph::Graph g;
    if (a.kind == "grid")
        g = gph::rnd::grid(a.side, a.side);
    else if (a.kind == "tree")
        g = gph::rnd::tree_plus_chords(rng, a.edges + 1, 0);
    else
        g = gph::rnd::tree_plus_chords(rng, a.edges - a.cycles + 1, a.cycles);
    std::vector<double> vv(g.n_vertices);
    for (auto& x : vv) x = gph::rnd::uniform_int(rng, 0, 1000);

    auto t0 = clock::now();
    auto f = gph::vertex_to_full(g, vv);
    auto fb = gph::backward_filtration(g, f);
    auto con = gph::slots_of_reordering(f, fb);
    double t_sort = secs(t0);

    t0 = clock::now();
    auto fw = gph::forward_inclusion(g, gph::levels_as_steps(f), gph::detail::first_contracted_vertex(con));
    double t_fwd = secs(t0);
    auto basis = fw.basis.columns.size();
    auto pd1 = fw.pd1.size();

    t0 = clock::now();
    auto full = gph::backward_contraction(g, std::move(fw), con);
    double t_bwd = secs(t0);

    json rep;
    rep["kind"] = a.kind;
    rep["vertices"] = g.n_vertices;
    rep["edges"] = g.num_edges();
    rep["sort_s"] = t_sort;
    rep["forward_s"] = t_fwd;
    rep["backward_s"] = t_bwd;
    rep["cycle_basis_size"] = basis;
    rep["forward_pd1"] = pd1;
    rep["pairs"] = full.pd0.size() + full.pd1.size();
    if (a.threshold >= 0) {
        auto ts = gph::threshold_schedule(g, f, a.threshold);
        rep["threshold"] = a.threshold;
        rep["schedule_events"] = ts.schedule.events.size();
        rep["peak_live"] = ts.peak_live;
    }
    std::cout << rep.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistence diagrams of graphs under inclusions and contractions"};
    app.require_subcommand(1);

    ComputeArgs ca, oa;
    add_compute_flags(app.add_subcommand("compute", "compute a diagram with the streaming engines"), ca);
    add_compute_flags(app.add_subcommand("oracle", "compute a diagram with the brute-force oracle"), oa);

    auto* dist = app.add_subcommand("distance", "bottleneck distance between two diagrams");
    int dim = 0;
    bool exclude = false;
    std::string da, db;
    dist->add_option("--dim", dim)->required()->check(CLI::IsMember({0, 1}));
    dist->add_flag("--exclude-essential", exclude);
    dist->add_option("a", da)->required();
    dist->add_option("b", db)->required();

    auto* wit = app.add_subcommand("witness", "check the separations on the bundled fixtures");
    std::string fixtures = GPH_FIXTURE_DIR;
    wit->add_option("--fixtures", fixtures, "fixture directory");

    auto* stab = app.add_subcommand("stability", "random perturbation check of the stability bound");
    gph::StabilityOptions so;
    stab->add_option("--trials", so.trials);
    stab->add_option("--max-n", so.max_n);
    stab->add_option("--eps", so.eps);
    stab->add_option("--seed", so.seed);

    auto* bench = app.add_subcommand("bench", "time the engines on a synthetic graph");
    BenchArgs ba;
    bench->add_option("--kind", ba.kind)->check(CLI::IsMember({"sparse", "grid", "tree"}));
    bench->add_option("--edges", ba.edges);
    bench->add_option("--cycles", ba.cycles);
    bench->add_option("--side", ba.side);
    bench->add_option("--threshold", ba.threshold, "also build a threshold-d hourglass schedule");
    bench->add_option("--seed", ba.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("compute")) return run_compute(ca, false);
        if (app.got_subcommand("oracle")) return run_compute(oa, true);
        if (app.got_subcommand("distance")) return run_distance(dim, exclude, da, db);
        if (app.got_subcommand("witness")) return run_witness(fixtures);
        if (app.got_subcommand("stability")) return stability_command(so);
        if (app.got_subcommand("bench")) return run_bench(ba);
    } catch (const gph::InputError& e) {
        json err{{"error", e.code()}, {"diagnostics", e.diagnostics()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << json{{"error", "ParseError"}, {"diagnostics", {e.what()}}}.dump() << "\n";
        return 2;
    }
    return 2;
}
