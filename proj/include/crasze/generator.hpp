#pragma once

#include "crasze/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace crasze {

struct GeneratorSpec {
    std::string name = "generated";
    ProblemKind kind = ProblemKind::Ceop;
    int n_circles = 20;
    double extent = 100.0;
    double radius = 4.0;
    std::optional<double> overlap;  // radius = overlap * extent when set
    double prize_min = 1.0;
    double prize_max = 12.0;
    double budget_level = 0.9;
};

/// Random instance on the [0, extent]^2 square with depots at the midpoints
/// of the left and right edges. Prizes are integers drawn from
/// [prize_min, prize_max]. The budget is budget_level times a
/// nearest-neighbor tour through the circle centers (recorded as the
/// best-known cost), never below the direct depot leg; time-budget instances
/// store it divided by the truck speed and draw per-circle flight
/// efficiencies from the configured interval. Deterministic per seed.
Instance generate_instance(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace crasze
