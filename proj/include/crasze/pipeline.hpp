#pragma once

#include "crasze/acs_sop.hpp"
#include "crasze/pso_iacs.hpp"
#include "crasze/rszd.hpp"

#include <cstdint>
#include <string>

namespace crasze {

/// Ant colony settings for the waypoint orienteering stage, which inherits a
/// good incumbent and therefore gets a shorter stagnation window.
AcsParams iacs_defaults();

struct SolveOptions {
    std::string algorithm = "rszd-acs-arc";  // rszd-acs | rszd-acs-arc | rszd-pso-iacs
    RszdParams rszd;
    AcsParams acs;
    AcsParams iacs = iacs_defaults();
    PsoParams pso;
    int refine_rounds = 5;
    std::uint64_t seed = 1;
};

struct SolveArtifacts {
    SzLayout layout;
    Solution solution;
};

/// Layout construction exactly as solve_instance performs it (same sub-seed
/// derivation from the user-facing seed).
SzLayout discretize_instance(const Instance& inst, const RszdParams& params, std::uint64_t seed);

/// End-to-end solve: validate, discretize, route, and refine according to the
/// algorithm name. rszd-acs keeps waypoints on the zone candidates,
/// rszd-acs-arc additionally runs waypoint refinement, rszd-pso-iacs is the
/// truck-and-drone solver (prizes normalized to [0.1, 0.9], zone degree
/// capped at the drone count). Throws ValidationError when the algorithm is
/// unknown or does not match the instance kind.
SolveArtifacts solve_instance(const Instance& inst, const SolveOptions& opt);

}  // namespace crasze
