#include "doctest.h"

#include "crasze/instance.hpp"

#include <sstream>

using namespace crasze;

namespace {

Instance parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

const char* kCeopText = R"(# demo instance
CEOPINST 1
NAME demo-3          # trailing comment
KIND CEOP
BESTKNOWN 349.13
BUDGET_LEVEL 0.9
DEPOT_START 0 50
DEPOT_END 100 50
NODES 3
1 20 40 4 5
2 55 60 4 9
3 80 45 4 2
)";

const char* kTddpText = R"(CEOPINST 1
NAME drone-demo
KIND TDDP
BESTKNOWN 349.13
BUDGET_LEVEL 1.2
DEPOT_START 0 50
DEPOT_END 100 50
TDDP 90 60 0.08333333333333333 5 0.8 1
NODES 2
1 30 50 4 5 0.85
2 70 50 4 7 0.9
)";

}  // namespace

TEST_CASE("parses a CEOP instance with comments") {
    const Instance inst = parse_text(kCeopText);
    CHECK(inst.name == "demo-3");
    CHECK(inst.kind == ProblemKind::Ceop);
    CHECK(inst.best_known_cost == doctest::Approx(349.13));
    CHECK(inst.budget == doctest::Approx(314.217));
    CHECK(inst.depot_start.x == 0);
    CHECK(inst.depot_end.x == 100);
    REQUIRE(inst.circles.size() == 3);
    CHECK(inst.circles[1].id == 2);
    CHECK(inst.circles[1].geom.center.x == 55);
    CHECK(inst.circles[1].prize == 9);
    CHECK(!inst.circles[1].lambda.has_value());
    CHECK(!inst.tddp.has_value());
}

TEST_CASE("budget levels derive from the best-known cost") {
    CHECK(compute_budget(349.13, 0.9) == doctest::Approx(314.217).epsilon(1e-12));
    CHECK(compute_budget(349.13, 0.6) == doctest::Approx(209.478).epsilon(1e-12));
}

TEST_CASE("time-budgeted instances convert distance budgets to hours") {
    const Instance inst = parse_text(kTddpText);
    CHECK(inst.kind == ProblemKind::Tddp);
    REQUIRE(inst.tddp.has_value());
    CHECK(inst.tddp->v_truck == 60);
    CHECK(inst.tddp->n_drones == 5);
    // 349.13 * 1.2 / 60
    CHECK(inst.budget == doctest::Approx(6.9826).epsilon(1e-12));
    REQUIRE(inst.circles.size() == 2);
    CHECK(inst.circles[0].lambda == doctest::Approx(0.85));
}

TEST_CASE("budget keys are mutually exclusive and one is required") {
    const std::string both = std::string(kCeopText) + "BUDGET 100\n";
    // Appending after NODES corrupts the count, so build variants explicitly.
    auto with_budget_lines = [](const std::string& lines) {
        return "CEOPINST 1\nNAME x\nKIND CEOP\n" + lines +
               "DEPOT_START 0 0\nDEPOT_END 10 0\nNODES 1\n1 5 3 1 2\n";
    };
    CHECK_THROWS_AS(parse_text(with_budget_lines("BUDGET 40\nBUDGET_LEVEL 0.9\nBESTKNOWN 50\n")),
                    ParseError);
    CHECK_THROWS_AS(parse_text(with_budget_lines("")), ParseError);
    CHECK_THROWS_AS(parse_text(with_budget_lines("BUDGET_LEVEL 0.9\n")), ParseError);
    CHECK_NOTHROW(parse_text(with_budget_lines("BUDGET 40\n")));
    (void)both;
}

TEST_CASE("parse errors carry the offending line number") {
    try {
        parse_text("CEOPINST 1\nKIND CEOP\nWHATEVER 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_text("CEOPINST 2\n"), ParseError);
    CHECK_THROWS_AS(parse_text(""), ParseError);
    CHECK_THROWS_AS(parse_text("CEOPINST 1\nKIND CEOP\nBUDGET 10\nDEPOT_START 0 0\n"
                               "DEPOT_END 5 0\nNODES 2\n1 1 1 1 1\n"),
                    ParseError);  // node count mismatch
}

TEST_CASE("validation rejects malformed instances") {
    Instance inst = parse_text(kCeopText);

    Instance bad = inst;
    bad.circles[2].geom.radius = 5;
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);

    bad = inst;
    bad.circles[1].geom.center = bad.circles[0].geom.center + Point{1, 0};
    bad.circles[1].geom.radius = 4;
    bad.circles[0].geom.radius = 4;  // d + r = 5 > 4: overlapping but not contained
    CHECK_NOTHROW(validate_instance(bad));
    bad.circles[1].geom.center = bad.circles[0].geom.center;  // concentric: contained
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);

    bad = inst;
    bad.budget = 50;  // below the 100-unit depot leg
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);

    bad = inst;
    bad.budget = -1;
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);

    Instance tddp = parse_text(kTddpText);
    bad = tddp;
    bad.circles[0].lambda.reset();
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);
    bad = tddp;
    bad.circles[0].lambda = 0.5;  // below lambda_min
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);
    bad = tddp;
    bad.tddp->v_truck = 0;
    CHECK_THROWS_AS(validate_instance(bad), ValidationError);
}

TEST_CASE("prize normalization is an affine min-max remap") {
    Instance inst = parse_text(kCeopText);
    inst.circles[0].prize = 1;
    inst.circles[1].prize = 6.5;
    inst.circles[2].prize = 12;
    const Instance out = normalize_prizes(inst, 0.1, 0.9);
    CHECK(out.circles[0].prize == doctest::Approx(0.1));
    CHECK(out.circles[1].prize == doctest::Approx(0.5));
    CHECK(out.circles[2].prize == doctest::Approx(0.9));

    for (TargetCircle& c : inst.circles) c.prize = 7;
    const Instance flat = normalize_prizes(inst, 0.1, 0.9);
    for (const TargetCircle& c : flat.circles) CHECK(c.prize == doctest::Approx(0.5));
}

TEST_CASE("overlap ratio uses the larger bounding-box side") {
    Instance inst = parse_text(kCeopText);
    // Extent spans x in [0, 100], y in [40, 60]; radius 4.
    CHECK(overlap_ratio(inst) == doctest::Approx(0.04).epsilon(1e-12));

    inst.depot_start = inst.depot_end = {5, 5};
    for (TargetCircle& c : inst.circles) c.geom.center = {5, 5};
    CHECK_THROWS_AS(overlap_ratio(inst), DegenerateExtent);
}

TEST_CASE("instance serialization round-trips byte for byte") {
    for (const char* text : {kCeopText, kTddpText}) {
        const Instance inst = parse_text(text);
        const std::string once = serialize_instance(inst);
        std::istringstream in(once);
        const std::string twice = serialize_instance(parse_instance(in));
        CHECK(once == twice);
    }
}

TEST_CASE("solution JSON round-trips") {
    Solution sol;
    sol.instance_name = "demo-3";
    sol.algorithm = "rszd-acs-arc";
    sol.seed = 42;
    sol.prize = 14.25;
    sol.cost = 301.5;
    sol.budget = 314.217;
    sol.runtime_s = 0.75;
    sol.sequence.push_back({3, {1, 2}, {20.5, 41.25}});
    sol.sequence.push_back({1, {3}, {80, 45}});

    const Solution back = parse_solution(serialize_solution(sol));
    CHECK(back.instance_name == sol.instance_name);
    CHECK(back.algorithm == sol.algorithm);
    CHECK(back.seed == sol.seed);
    CHECK(back.prize == sol.prize);
    CHECK(back.cost == sol.cost);
    CHECK(back.budget == sol.budget);
    CHECK(back.truncated == false);
    REQUIRE(back.sequence.size() == 2);
    CHECK(back.sequence[0].zone_id == 3);
    CHECK(back.sequence[0].circle_ids == std::vector<int>{1, 2});
    CHECK(back.sequence[0].waypoint.x == 20.5);
    CHECK(back.sequence[1].circle_ids == std::vector<int>{3});

    // truncated is optional on input, defaulting to false.
    Solution trunc = sol;
    trunc.truncated = true;
    CHECK(parse_solution(serialize_solution(trunc)).truncated == true);
}
