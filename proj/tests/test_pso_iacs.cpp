#include "doctest.h"

#include "crasze/pipeline.hpp"
#include "crasze/pso_iacs.hpp"
#include "crasze/rng.hpp"

#include <cmath>

using namespace crasze;

namespace {

TargetCircle circle(int id, double x, double y, double r, double prize = 1.0,
                    double lambda = 0.9) {
    TargetCircle c;
    c.id = id;
    c.geom = {{x, y}, r};
    c.prize = prize;
    c.lambda = lambda;
    return c;
}

SteinerZone singleton(const TargetCircle& c) {
    SteinerZone z;
    z.member_ids = {c.id};
    z.members = {c};
    z.center = c.geom.center;
    z.prize = c.prize;
    return z;
}

Instance drone_instance(std::uint64_t seed, int n, double radius, double budget_factor) {
    Rng rng(seed);
    Instance inst;
    inst.name = "drone";
    inst.kind = ProblemKind::Tddp;
    inst.tddp = TddpParams{};
    inst.depot_start = {0, 10};
    inst.depot_end = {20, 10};
    for (int i = 0; i < n; ++i)
        inst.circles.push_back(circle(i + 1, rng.uniform(0, 20), rng.uniform(5, 15), radius,
                                      std::floor(rng.uniform(1, 10)),
                                      rng.uniform(0.8, 1.0)));
    inst.budget =
        budget_factor * dist(inst.depot_start, inst.depot_end) / inst.tddp->v_truck;
    return inst;
}

}  // namespace

TEST_CASE("collection time charges the slowest member drone") {
    TddpParams tddp;  // v_drone 90, t_serv 1/12
    TargetCircle c = circle(1, 3, 0, 5, 1.0, 0.8);
    const SteinerZone z = singleton(c);
    // Distance 3 at lambda 0.8: 3/72 + 1/12 + 3/90 hours.
    CHECK(collection_cost(z, {0, 0}, tddp) == doctest::Approx(0.15833333333333333).epsilon(1e-9));
    // At the target center the drone only pays the service time.
    CHECK(collection_cost(z, {3, 0}, tddp) == doctest::Approx(1.0 / 12.0));

    // Two members: the farther one dominates.
    SteinerZone pair = singleton(circle(1, 3, 0, 5, 1, 0.8));
    pair.member_ids.push_back(2);
    pair.members.push_back(circle(2, 0.5, 0, 5, 1, 1.0));
    const double near_only = 0.5 / 90.0 + 1.0 / 12.0 + 0.5 / 90.0;
    CHECK(collection_cost(pair, {0, 0}, tddp) > near_only);
    CHECK(collection_cost(pair, {0, 0}, tddp) == doctest::Approx(0.15833333333333333));
}

TEST_CASE("truck travel time") {
    TddpParams tddp;  // v_truck 60
    CHECK(travel_cost({0, 0}, {60, 0}, tddp) == doctest::Approx(1.0));
    CHECK(travel_cost({0, 0}, {0, 0}, tddp) == 0.0);
}

TEST_CASE("inertia weight decreases linearly from 0.9 to 0.4") {
    PsoParams p;  // n_iter 100
    CHECK(ldiw(0, p) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(ldiw(50, p) == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(ldiw(100, p) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("zone velocity cap is the inscribed-disk radius at the center") {
    CHECK(zone_vmax(singleton(circle(1, 4, 4, 2.5))) == doctest::Approx(2.5));

    const auto lens = try_add_circle(singleton(circle(1, 0, 0, 1)), circle(2, 1, 0, 1));
    REQUIRE(lens.has_value());
    CHECK(zone_vmax(*lens) == doctest::Approx(0.5).epsilon(1e-9));

    // Reuleaux-style triple: unit circles on an equilateral triangle of side 1.
    auto triple = try_add_circle(*lens, circle(3, 0.5, std::sqrt(3.0) / 2.0, 1));
    REQUIRE(triple.has_value());
    REQUIRE(triple->vertices.size() == 3);
    CHECK(zone_vmax(*triple) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-9));
}

TEST_CASE("projection stops a move at the zone boundary") {
    const auto lens = try_add_circle(singleton(circle(1, 0, 0, 1)), circle(2, 1, 0, 1));
    REQUIRE(lens.has_value());
    const Point inside{0.5, 0.1};

    CHECK(dist(project_into_zone(*lens, {0.5, 0}, inside), inside) < 1e-12);

    const Point out = project_into_zone(*lens, {0.5, 0}, {0.5, 5});
    CHECK(point_in_zone(*lens, out, 1e-9));
    CHECK(out.x == doctest::Approx(0.5));
    CHECK(out.y == doctest::Approx(std::sqrt(3.0) / 2.0));  // exits at the top vertex

    CHECK_THROWS_AS(project_into_zone(*lens, {5, 5}, {6, 6}), ProjectionFailure);
}

TEST_CASE("waypoint graph uses the time metric") {
    const Instance inst = drone_instance(3, 6, 2, 4.0);
    RszdParams rp;
    rp.max_degree = inst.tddp->n_drones;
    const SzLayout layout = rszd(inst, rp, 3);

    std::vector<Point> waypoints;
    for (const SteinerZone& z : layout.zones) waypoints.push_back(z.center);
    const SopGraph g = make_op_graph(layout, inst, waypoints);

    CHECK(g.nodes.size() == layout.zones.size());
    CHECK(g.travel_scale == doctest::Approx(1.0 / 60.0));
    CHECK(g.budget == doctest::Approx(inst.budget));
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        CHECK(g.nodes[i].zone_id == layout.zones[i].id);
        CHECK(g.nodes[i].visit_cost ==
              doctest::Approx(collection_cost(layout.zones[i], waypoints[i], *inst.tddp)));
        CHECK(g.nodes[i].visit_cost > 0.0);
    }
    const int s = g.start_index();
    CHECK(g.edge(s, 0) == doctest::Approx(dist(inst.depot_start, g.nodes[0].pos) / 60.0));
}

TEST_CASE("inherited pheromone is the incumbent prize-cost ratio") {
    CHECK(inherited_pheromone(19.8, 6.78) ==
          doctest::Approx(2.9203539823008847).epsilon(1e-9));
    CHECK(inherited_pheromone(5.0, 0.0) == doctest::Approx(5.0 / 1e-12));
}

TEST_CASE("truck-and-drone solver is deterministic and within budget") {
    const Instance inst = drone_instance(7, 10, 2, 6.0);
    RszdParams rp;
    rp.max_degree = inst.tddp->n_drones;
    const SzLayout layout = rszd(inst, rp, 7);

    PsoParams pso;
    pso.n_particles = 12;
    pso.n_iter = 15;
    AcsParams iacs = iacs_defaults();
    iacs.n_ants = 10;
    iacs.n_iter = 25;

    const Solution a = solve_tddp(inst, layout, pso, iacs, 99);
    const Solution b = solve_tddp(inst, layout, pso, iacs, 99);
    CHECK(a.prize == b.prize);
    CHECK(a.cost == b.cost);
    REQUIRE(a.sequence.size() == b.sequence.size());
    for (std::size_t i = 0; i < a.sequence.size(); ++i) {
        CHECK(a.sequence[i].zone_id == b.sequence[i].zone_id);
        CHECK(a.sequence[i].waypoint.x == b.sequence[i].waypoint.x);
        CHECK(a.sequence[i].waypoint.y == b.sequence[i].waypoint.y);
    }
    CHECK(a.cost <= inst.budget + 1e-9);
    CHECK(a.prize > 0);
    CHECK(!a.truncated);
}

TEST_CASE("the reported cost replays from the reported sequence") {
    const Instance inst = drone_instance(11, 9, 2.5, 5.0);
    RszdParams rp;
    rp.max_degree = inst.tddp->n_drones;
    const SzLayout layout = rszd(inst, rp, 11);

    PsoParams pso;
    pso.n_particles = 10;
    pso.n_iter = 10;
    AcsParams iacs = iacs_defaults();
    iacs.n_ants = 10;
    iacs.n_iter = 20;
    const Solution sol = solve_tddp(inst, layout, pso, iacs, 4);
    REQUIRE(!sol.sequence.empty());

    double replay = 0;
    Point at = inst.depot_start;
    for (const SolutionStop& stop : sol.sequence) {
        replay += travel_cost(at, stop.waypoint, *inst.tddp);
        replay += collection_cost(layout.zone_by_id(stop.zone_id), stop.waypoint, *inst.tddp);
        at = stop.waypoint;
    }
    replay += travel_cost(at, inst.depot_end, *inst.tddp);
    CHECK(replay == doctest::Approx(sol.cost).epsilon(1e-6));
}

TEST_CASE("swarm trace stays inside zones and cools its inertia") {
    const Instance inst = drone_instance(23, 8, 2, 5.0);
    RszdParams rp;
    rp.max_degree = inst.tddp->n_drones;
    const SzLayout layout = rszd(inst, rp, 23);

    PsoParams pso;
    pso.n_particles = 8;
    pso.n_iter = 12;
    pso.max_no_impr = 12;  // let it run the full schedule
    AcsParams iacs = iacs_defaults();
    iacs.n_ants = 8;
    iacs.n_iter = 15;

    PsoTrace trace;
    solve_tddp(inst, layout, pso, iacs, 23, &trace);
    CHECK(trace.position_violations == 0);
    CHECK(trace.velocity_violations == 0);
    CHECK(trace.evals > 0);
    CHECK(!trace.truncated);
    REQUIRE(!trace.iters.empty());
    CHECK(trace.iters.front().omega == doctest::Approx(0.9));
    double prev_omega = 1.0;
    double prev_prize = -1.0;
    for (const PsoIterRecord& r : trace.iters) {
        CHECK(r.omega < prev_omega);
        prev_omega = r.omega;
        CHECK(r.best_prize >= prev_prize);  // incumbent prize is monotone
        prev_prize = r.best_prize;
        CHECK(r.best_cost <= inst.budget + 1e-9);
    }
}

TEST_CASE("a zero time cap truncates the run") {
    const Instance inst = drone_instance(29, 8, 2, 5.0);
    RszdParams rp;
    rp.max_degree = inst.tddp->n_drones;
    const SzLayout layout = rszd(inst, rp, 29);

    PsoParams pso;
    pso.n_particles = 6;
    pso.n_iter = 10;
    pso.time_cap_s = 0.0;
    PsoTrace trace;
    const Solution sol = solve_tddp(inst, layout, pso, iacs_defaults(), 1, &trace);
    CHECK(sol.truncated);
    CHECK(trace.truncated);
    CHECK(sol.cost <= inst.budget + 1e-9);  // still returns the best-so-far
}
