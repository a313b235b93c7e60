#include "crasze/pipeline.hpp"

#include "crasze/arc_search.hpp"

#include <chrono>

namespace crasze {

AcsParams iacs_defaults() {
    AcsParams p;
    p.max_no_impr = 13;
    return p;
}

SzLayout discretize_instance(const Instance& inst, const RszdParams& params, std::uint64_t seed) {
    return rszd(inst, params, derive_seed(seed, 1));
}

SolveArtifacts solve_instance(const Instance& inst, const SolveOptions& opt) {
    validate_instance(inst);
    const auto t0 = std::chrono::steady_clock::now();

    SolveArtifacts out;
    if (opt.algorithm == "rszd-acs" || opt.algorithm == "rszd-acs-arc") {
        if (inst.kind != ProblemKind::Ceop)
            throw ValidationError("algorithm " + opt.algorithm + " requires a CEOP instance");
        out.layout = discretize_instance(inst, opt.rszd, opt.seed);
        const SopGraph graph = make_sop_graph(out.layout, inst);
        out.solution = solve_sop(graph, opt.acs, derive_seed(opt.seed, 2));
        if (opt.algorithm == "rszd-acs-arc")
            out.solution = refine_ceop(std::move(out.solution), out.layout, inst, opt.refine_rounds);
    } else if (opt.algorithm == "rszd-pso-iacs") {
        if (inst.kind != ProblemKind::Tddp || !inst.tddp)
            throw ValidationError("algorithm rszd-pso-iacs requires a TDDP instance");
        Instance scaled = normalize_prizes(inst, 0.1, 0.9);
        RszdParams rp = opt.rszd;
        rp.max_degree = scaled.tddp->n_drones;
        out.layout = rszd(scaled, rp, derive_seed(opt.seed, 1));
        out.solution = solve_tddp(scaled, out.layout, opt.pso, opt.iacs, derive_seed(opt.seed, 3));
    } else {
        throw ValidationError("unknown algorithm '" + opt.algorithm + "'");
    }

    out.solution.instance_name = inst.name;
    out.solution.algorithm = opt.algorithm;
    out.solution.seed = opt.seed;
    out.solution.budget = inst.budget;
    out.solution.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace crasze
