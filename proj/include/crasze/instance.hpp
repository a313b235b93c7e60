#pragma once

#include "crasze/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crasze {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& reason)
        : std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateExtent : std::runtime_error {
    DegenerateExtent() : std::runtime_error("all instance points coincide") {}
};

enum class ProblemKind { Ceop, Tddp };

std::string to_string(ProblemKind kind);

/// A customer/target disk. lambda is the UAV flight-efficiency fraction and
/// is present exactly when the instance carries truck-and-drone data.
struct TargetCircle {
    int id = 0;
    CircleGeom geom;
    double prize = 0.0;
    std::optional<double> lambda;
};

struct TddpParams {
    double v_drone = 90.0;       // km/h
    double v_truck = 60.0;       // km/h
    double t_serv = 1.0 / 12.0;  // hours
    int n_drones = 5;
    double lambda_min = 0.8;
    double lambda_max = 1.0;
};

struct Instance {
    std::string name;
    ProblemKind kind = ProblemKind::Ceop;
    Point depot_start;
    Point depot_end;
    std::vector<TargetCircle> circles;
    std::optional<double> best_known_cost;
    double budget = 0.0;  // distance units for CEOP, hours for TDDP
    std::optional<TddpParams> tddp;
};

struct SolutionStop {
    int zone_id = 0;
    std::vector<int> circle_ids;
    Point waypoint;
};

struct Solution {
    std::string instance_name;
    std::string algorithm;
    std::uint64_t seed = 0;
    double prize = 0.0;
    double cost = 0.0;  // distance or hours, per instance kind
    double budget = 0.0;
    double runtime_s = 0.0;
    bool truncated = false;
    std::vector<SolutionStop> sequence;
};

/// Parses the plain-text instance format ('#' comments, whitespace separated).
/// Derives budget from BESTKNOWN x BUDGET_LEVEL when BUDGET is absent (for
/// time-budgeted instances the product is further divided by the truck speed).
/// Throws ParseError / ValidationError.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

/// Canonical text form; parse(serialize(x)) == x (budget written absolute).
std::string serialize_instance(const Instance& inst);

/// Structural checks: uniform radii, no contained circle, positive budget not
/// below the direct depot leg, lambda present and bounded for TDDP.
void validate_instance(const Instance& inst);

double compute_budget(double best_known, double level);

/// Uniform radius divided by the larger bounding-box side over all nodes
/// (circle centers and both depots). Throws DegenerateExtent.
double overlap_ratio(const Instance& inst);

/// Min-max affine remap of prizes onto [lo, hi]; a constant prize vector maps
/// to the interval midpoint.
Instance normalize_prizes(Instance inst, double lo, double hi);

std::string serialize_solution(const Solution& sol);
Solution parse_solution(const std::string& json_text);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace crasze
