// Command-line front end: instance generation, zone discretization, solving,
// exact-oracle cross checks, and multi-seed benchmarking.
//
// Exit codes: 0 success, 1 infeasible input or validation failure, 2 usage or
// guard errors (bad flags, oracle size cap), 3 time-cap truncation (outputs
// are still written).

#include "CLI11.hpp"

#include "crasze/bench.hpp"
#include "crasze/generator.hpp"
#include "crasze/oracle.hpp"
#include "crasze/pipeline.hpp"
#include "crasze/svg.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

std::string algorithm_for_mode(const std::string& mode) {
    if (mode == "sop") return "rszd-acs";
    if (mode == "ceop") return "rszd-acs-arc";
    return "rszd-pso-iacs";
}

void apply_budget_level(crasze::Instance& inst, double level) {
    if (!inst.best_known_cost)
        throw crasze::ValidationError("--budget-level requires BESTKNOWN in the instance file");
    double budget = crasze::compute_budget(*inst.best_known_cost, level);
    if (inst.kind == crasze::ProblemKind::Tddp) budget /= inst.tddp->v_truck;
    inst.budget = budget;
}

struct GenerateCmd {
    crasze::GeneratorSpec spec;
    std::vector<double> prize_range{1.0, 12.0};
    std::string kind = "ceop";
    double overlap = 0.0;
    std::uint64_t seed = 1;
    std::string out = "-";
};

struct DiscretizeCmd {
    std::string instance;
    crasze::RszdParams params;
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string svg;
};

struct SolveCmd {
    std::string instance;
    std::string mode = "ceop";
    std::uint64_t seed = 1;
    std::string out = "solution.json";
    std::string svg;
    std::string layout_out;
    double budget_level = 0.0;
    int ants = 0;
    int iters = 0;
    int pso_particles = 0;
    int pso_iters = 0;
    double time_cap = 0.0;
    int refine_rounds = 5;
};

struct OracleCmd {
    std::string instance;
    std::uint64_t seed = 1;
    bool check_solver = false;
};

struct BenchCmd {
    std::vector<std::string> instances;
    std::string mode = "ceop";
    int n_seeds = 20;
    std::uint64_t base_seed = 1;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::string out = "-";
    int ants = 0;
    int iters = 0;
};

crasze::SolveOptions build_options(const std::string& mode, std::uint64_t seed, int ants, int iters,
                                   int pso_particles, int pso_iters, double time_cap,
                                   int refine_rounds) {
    crasze::SolveOptions opt;
    opt.algorithm = algorithm_for_mode(mode);
    opt.seed = seed;
    opt.refine_rounds = refine_rounds;
    if (ants > 0) {
        opt.acs.n_ants = ants;
        opt.iacs.n_ants = ants;
    }
    if (iters > 0) {
        opt.acs.n_iter = iters;
        opt.acs.max_no_impr = std::max(1, iters / 10);
    }
    if (pso_particles > 0) opt.pso.n_particles = pso_particles;
    if (pso_iters > 0) opt.pso.n_iter = pso_iters;
    if (time_cap > 0.0) opt.pso.time_cap_s = time_cap;
    return opt;
}

int run_generate(const GenerateCmd& cmd) {
    crasze::GeneratorSpec spec = cmd.spec;
    spec.kind = cmd.kind == "tddp" ? crasze::ProblemKind::Tddp : crasze::ProblemKind::Ceop;
    spec.prize_min = cmd.prize_range.at(0);
    spec.prize_max = cmd.prize_range.at(1);
    if (cmd.overlap > 0.0) spec.overlap = cmd.overlap;
    const crasze::Instance inst = crasze::generate_instance(spec, cmd.seed);
    write_output(cmd.out, crasze::serialize_instance(inst));
    return kExitOk;
}

int run_discretize(const DiscretizeCmd& cmd) {
    const crasze::Instance inst = crasze::parse_instance_file(cmd.instance);
    crasze::validate_instance(inst);
    const crasze::SzLayout layout = crasze::discretize_instance(inst, cmd.params, cmd.seed);
    write_output(cmd.out, crasze::serialize_layout(layout));
    if (!cmd.svg.empty()) write_output(cmd.svg, crasze::layout_svg(inst, layout));
    return kExitOk;
}

int run_solve(const SolveCmd& cmd) {
    crasze::Instance inst = crasze::parse_instance_file(cmd.instance);
    if (cmd.budget_level > 0.0) apply_budget_level(inst, cmd.budget_level);
    const crasze::SolveOptions opt =
        build_options(cmd.mode, cmd.seed, cmd.ants, cmd.iters, cmd.pso_particles, cmd.pso_iters,
                      cmd.time_cap, cmd.refine_rounds);
    const crasze::SolveArtifacts art = crasze::solve_instance(inst, opt);
    write_output(cmd.out, crasze::serialize_solution(art.solution));
    if (!cmd.layout_out.empty()) write_output(cmd.layout_out, crasze::serialize_layout(art.layout));
    if (!cmd.svg.empty()) write_output(cmd.svg, crasze::solution_svg(inst, art.layout, art.solution));
    std::cout << "prize=" << crasze::format_double(art.solution.prize)
              << " cost=" << crasze::format_double(art.solution.cost)
              << " runtime_s=" << crasze::format_double(art.solution.runtime_s) << "\n";
    return art.solution.truncated ? kExitTruncated : kExitOk;
}

int run_oracle(const OracleCmd& cmd) {
    const crasze::Instance inst = crasze::parse_instance_file(cmd.instance);
    crasze::validate_instance(inst);
    if (inst.kind != crasze::ProblemKind::Ceop)
        throw crasze::ValidationError("the exact oracle handles distance-budget instances only");
    const crasze::SzLayout layout =
        crasze::discretize_instance(inst, crasze::RszdParams{}, cmd.seed);
    const crasze::SopGraph graph = crasze::make_sop_graph(layout, inst);
    const crasze::OracleResult exact = crasze::brute_force_sop(graph);
    std::cout << "optimal prize=" << crasze::format_double(exact.prize)
              << " cost=" << crasze::format_double(exact.cost) << "\n";
    if (cmd.check_solver) {
        const crasze::Solution sol =
            crasze::solve_sop(graph, crasze::AcsParams{}, crasze::derive_seed(cmd.seed, 2));
        std::cout << "solver prize=" << crasze::format_double(sol.prize)
                  << " cost=" << crasze::format_double(sol.cost) << "\n";
        if (sol.prize > exact.prize + 1e-9) {
            std::cerr << "solver exceeded the exact optimum; oracle or solver is wrong\n";
            return kExitInvalid;
        }
    }
    return kExitOk;
}

int run_bench(const BenchCmd& cmd) {
    std::vector<crasze::Instance> instances;
    instances.reserve(cmd.instances.size());
    for (const std::string& path : cmd.instances)
        instances.push_back(crasze::parse_instance_file(path));
    const crasze::SolveOptions base =
        build_options(cmd.mode, cmd.base_seed, cmd.ants, cmd.iters, 0, 0, 0.0, 5);
    std::vector<std::uint64_t> seeds(cmd.n_seeds);
    for (int i = 0; i < cmd.n_seeds; ++i) seeds[i] = cmd.base_seed + static_cast<std::uint64_t>(i);
    const std::vector<crasze::RunRecord> records =
        crasze::run_batch(instances, base, seeds, std::max(1, cmd.jobs));
    for (const crasze::RunRecord& r : records)
        if (!r.ok)
            std::cerr << "run failed: " << r.instance << " seed " << r.seed << ": " << r.error
                      << "\n";
    write_output(cmd.out, crasze::summary_csv(records));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Close-enough orienteering solvers over overlapped circular neighborhoods"};
    app.require_subcommand(1);

    GenerateCmd gen;
    CLI::App* gen_app = app.add_subcommand("generate", "Write a random instance file");
    gen_app->add_option("--name", gen.spec.name, "Instance name");
    gen_app->add_option("--kind", gen.kind, "ceop or tddp")
        ->check(CLI::IsMember({"ceop", "tddp"}));
    gen_app->add_option("--n", gen.spec.n_circles, "Number of target circles")
        ->check(CLI::PositiveNumber);
    gen_app->add_option("--extent", gen.spec.extent, "Square side length");
    gen_app->add_option("--radius", gen.spec.radius, "Uniform circle radius");
    gen_app->add_option("--overlap-ratio", gen.overlap,
                        "Radius as a fraction of the extent (overrides --radius)");
    gen_app->add_option("--prize-range", gen.prize_range, "Prize bounds (two values)")
        ->expected(2);
    gen_app->add_option("--budget-level", gen.spec.budget_level, "Budget fraction of the tour");
    gen_app->add_option("--seed", gen.seed, "RNG seed")->envname("CRASZE_SEED");
    gen_app->add_option("--out", gen.out, "Output path ('-' for stdout)");

    DiscretizeCmd dis;
    CLI::App* dis_app = app.add_subcommand("discretize", "Build and export a zone layout");
    dis_app->add_option("--instance", dis.instance, "Instance file")
        ->required()
        ->check(CLI::ExistingFile);
    dis_app->add_option("--iters", dis.params.n_iter, "Shuffle iterations");
    dis_app->add_option("--max-degree", dis.params.max_degree, "Zone degree cap");
    dis_app->add_option("--seed", dis.seed, "RNG seed")->envname("CRASZE_SEED");
    dis_app->add_option("--out", dis.out, "Layout JSON path ('-' for stdout)");
    dis_app->add_option("--svg", dis.svg, "Optional layout SVG path");

    SolveCmd sol;
    CLI::App* sol_app = app.add_subcommand("solve", "Solve an instance end to end");
    sol_app->add_option("--instance", sol.instance, "Instance file")
        ->required()
        ->check(CLI::ExistingFile);
    sol_app->add_option("--mode", sol.mode, "sop, ceop, or tddp")
        ->check(CLI::IsMember({"sop", "ceop", "tddp"}));
    sol_app->add_option("--seed", sol.seed, "RNG seed")->envname("CRASZE_SEED");
    sol_app->add_option("--out", sol.out, "Solution JSON path");
    sol_app->add_option("--svg", sol.svg, "Optional solution SVG path");
    sol_app->add_option("--layout-out", sol.layout_out, "Optional layout JSON path");
    sol_app->add_option("--budget-level", sol.budget_level,
                        "Recompute the budget from BESTKNOWN times this level");
    sol_app->add_option("--ants", sol.ants, "Ant count override");
    sol_app->add_option("--iters", sol.iters, "Ant iteration override (stagnation = iters/10)");
    sol_app->add_option("--pso-particles", sol.pso_particles, "Swarm size override");
    sol_app->add_option("--pso-iters", sol.pso_iters, "Swarm iteration override");
    sol_app->add_option("--time-cap", sol.time_cap, "Swarm time cap in seconds");
    sol_app->add_option("--refine-rounds", sol.refine_rounds, "Waypoint refinement rounds");

    OracleCmd ora;
    CLI::App* ora_app = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
    ora_app->add_option("--instance", ora.instance, "Instance file")
        ->required()
        ->check(CLI::ExistingFile);
    ora_app->add_option("--seed", ora.seed, "RNG seed (layout construction)")
        ->envname("CRASZE_SEED");
    ora_app->add_flag("--check-solver", ora.check_solver,
                      "Also run the ant colony and verify it stays within the optimum");

    BenchCmd ben;
    CLI::App* ben_app = app.add_subcommand("bench", "Multi-seed batch with a CSV summary");
    ben_app->add_option("--instance", ben.instances, "Instance file(s)")
        ->required()
        ->check(CLI::ExistingFile);
    ben_app->add_option("--mode", ben.mode, "sop, ceop, or tddp")
        ->check(CLI::IsMember({"sop", "ceop", "tddp"}));
    ben_app->add_option("--seeds", ben.n_seeds, "Number of consecutive seeds")
        ->check(CLI::PositiveNumber);
    ben_app->add_option("--base-seed", ben.base_seed, "First seed")->envname("CRASZE_SEED");
    ben_app->add_option("--jobs", ben.jobs, "Worker threads");
    ben_app->add_option("--out", ben.out, "CSV path ('-' for stdout)");
    ben_app->add_option("--ants", ben.ants, "Ant count override");
    ben_app->add_option("--iters", ben.iters, "Ant iteration override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_app->parsed()) return run_generate(gen);
        if (dis_app->parsed()) return run_discretize(dis);
        if (sol_app->parsed()) return run_solve(sol);
        if (ora_app->parsed()) return run_oracle(ora);
        if (ben_app->parsed()) return run_bench(ben);
    } catch (const crasze::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
