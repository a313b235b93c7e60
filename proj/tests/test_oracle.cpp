#include "doctest.h"

#include "crasze/oracle.hpp"
#include "crasze/rng.hpp"

#include <cmath>

using namespace crasze;

namespace {

TargetCircle circle(int id, double x, double y, double r, double prize = 1.0) {
    TargetCircle c;
    c.id = id;
    c.geom = {{x, y}, r};
    c.prize = prize;
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

SopGraph line_graph(const std::vector<std::pair<Point, double>>& nodes, double budget) {
    SopGraph g;
    g.depot_start = {0, 0};
    g.depot_end = {10, 0};
    g.budget = budget;
    int id = 0;
    for (const auto& [pos, prize] : nodes) {
        SopNode n;
        n.id = id;
        n.pos = pos;
        n.zone_id = 100 + id;
        g.zone_prize[n.zone_id] = prize;
        g.zone_circles[n.zone_id] = {id + 1};
        g.nodes.push_back(n);
        ++id;
    }
    g.build_cost_matrix();
    return g;
}

Instance sparse_instance(std::uint64_t seed, int n) {
    Rng rng(seed);
    Instance inst;
    inst.name = "sparse";
    inst.kind = ProblemKind::Ceop;
    inst.depot_start = {0, 20};
    inst.depot_end = {40, 20};
    for (int i = 0; i < n; ++i)
        inst.circles.push_back(circle(i + 1, rng.uniform(2, 38), rng.uniform(5, 35), 2.0,
                                      std::floor(rng.uniform(1, 10))));
    inst.budget = 1.4 * dist(inst.depot_start, inst.depot_end);
    return inst;
}

}  // namespace

TEST_CASE("exhaustive search finds known optima") {
    // Everything on the depot line: all prizes collectible at zero detour.
    const SopGraph all = line_graph({{{2, 0}, 3}, {{5, 0}, 5}, {{8, 0}, 7}}, 10.0);
    const OracleResult r = brute_force_sop(all);
    CHECK(r.prize == doctest::Approx(15));
    CHECK(r.cost == doctest::Approx(10));
    CHECK(r.zone_sequence == std::vector<int>{100, 101, 102});

    // Budget 10.5 cannot reach the rich node at (5,4); budget 13 can,
    // but then nothing else fits.
    const SopGraph tight = line_graph({{{2, 0}, 1}, {{5, 4}, 10}}, 10.5);
    const OracleResult rt = brute_force_sop(tight);
    CHECK(rt.prize == doctest::Approx(1));
    CHECK(rt.cost == doctest::Approx(10));

    const SopGraph loose = line_graph({{{2, 0}, 1}, {{5, 4}, 10}}, 13.0);
    const OracleResult rl = brute_force_sop(loose);
    CHECK(rl.prize == doctest::Approx(10));
    CHECK(rl.cost == doctest::Approx(2 * std::sqrt(41.0)));
    CHECK(rl.zone_sequence == std::vector<int>{101});
}

TEST_CASE("among equal-prize tours the cheapest wins") {
    // One zone, two candidate waypoints; the on-line candidate is cheaper.
    SopGraph g;
    g.depot_start = {0, 0};
    g.depot_end = {10, 0};
    g.budget = 20;
    for (int i = 0; i < 2; ++i) {
        SopNode n;
        n.id = i;
        n.pos = i == 0 ? Point{5, 3} : Point{5, 0};
        n.zone_id = 100;
        g.nodes.push_back(n);
    }
    g.zone_prize[100] = 4;
    g.zone_circles[100] = {1};
    g.build_cost_matrix();

    const OracleResult r = brute_force_sop(g);
    CHECK(r.prize == doctest::Approx(4));
    CHECK(r.cost == doctest::Approx(10));  // picks the zero-detour candidate
}

TEST_CASE("pruning never changes the exhaustive result") {
    for (std::uint64_t seed : {4ull, 5ull, 6ull, 7ull}) {
        const Instance inst = sparse_instance(seed, 6);
        const SzLayout layout = rszd(inst, RszdParams{}, seed);
        const SopGraph g = make_sop_graph(layout, inst);
        const OracleResult pruned = brute_force_sop(g, true);
        const OracleResult full = brute_force_sop(g, false);
        CHECK(pruned.prize == full.prize);
        CHECK(pruned.cost == doctest::Approx(full.cost));
    }
}

TEST_CASE("the heuristic solver never beats the oracle") {
    for (std::uint64_t seed : {10ull, 11ull, 12ull}) {
        const Instance inst = sparse_instance(seed, 6);
        const SzLayout layout = rszd(inst, RszdParams{}, seed);
        const SopGraph g = make_sop_graph(layout, inst);
        const OracleResult opt = brute_force_sop(g);
        AcsParams p;
        p.n_iter = 40;
        const Solution sol = solve_sop(g, p, seed);
        CHECK(sol.prize <= opt.prize + 1e-9);
        if (sol.prize == doctest::Approx(opt.prize)) CHECK(sol.cost >= opt.cost - 1e-6);
    }
}

TEST_CASE("oversized inputs are refused") {
    std::vector<std::pair<Point, double>> nine;
    for (int i = 0; i < 9; ++i) nine.push_back({{1.0 + i, 1.0}, 1.0});
    CHECK_THROWS_AS(brute_force_sop(line_graph(nine, 50)), TooLarge);

    // Few zones but too many candidate nodes.
    SopGraph g;
    g.depot_start = {0, 0};
    g.depot_end = {10, 0};
    g.budget = 50;
    for (int i = 0; i < 19; ++i) {
        SopNode n;
        n.id = i;
        n.pos = {5.0, 0.1 * i};
        n.zone_id = 100 + i % 4;
        g.nodes.push_back(n);
    }
    for (int z = 0; z < 4; ++z) {
        g.zone_prize[100 + z] = 1;
        g.zone_circles[100 + z] = {z + 1};
    }
    g.build_cost_matrix();
    CHECK_THROWS_AS(brute_force_sop(g), TooLarge);
}

TEST_CASE("zone membership cross-check accepts valid zones") {
    const auto lens = try_add_circle(singleton(circle(1, 0, 0, 1)), circle(2, 1, 0, 1));
    REQUIRE(lens.has_value());
    const ZoneCheckResult r = monte_carlo_zone_check(*lens, 10'000, 99);
    CHECK(r.reconstructed);
    CHECK(r.samples == 10'000);
    CHECK(r.checked > 0);
    CHECK(r.violations == 0);

    const ZoneCheckResult solo = monte_carlo_zone_check(singleton(circle(1, 2, 2, 1.5)), 10'000, 7);
    CHECK(solo.reconstructed);
    CHECK(solo.violations == 0);

    auto triple = try_add_circle(*lens, circle(3, 0.5, 0.9, 1));
    REQUIRE(triple.has_value());
    const ZoneCheckResult r3 = monte_carlo_zone_check(*triple, 10'000, 15);
    CHECK(r3.reconstructed);
    CHECK(r3.violations == 0);
}

TEST_CASE("zone membership cross-check catches corrupted vertices") {
    auto lens = try_add_circle(singleton(circle(1, 0, 0, 1)), circle(2, 1, 0, 1));
    REQUIRE(lens.has_value());
    SteinerZone bad = *lens;
    bad.vertices[0] = bad.vertices[0] + Point{0.1, 0.0};  // off both boundaries
    const ZoneCheckResult r = monte_carlo_zone_check(bad, 10'000, 99);
    CHECK(!r.reconstructed);
    CHECK(r.violations > 0);
}

TEST_CASE("dense waypoint reference matches a closed form") {
    // Unit circle, horizontal segment passing below: the optimum boundary
    // point is (0,-1) with detour 2*sqrt(5) - 4.
    const SteinerZone z = singleton(circle(1, 0, 0, 1));
    const SampledWaypoint w = sampled_best_waypoint(z, {-2, -2}, {2, -2});
    CHECK(w.detour == doctest::Approx(2 * std::sqrt(5.0) - 4).epsilon(1e-6));
    CHECK(w.waypoint.x == doctest::Approx(0.0).epsilon(1e-3));
    CHECK(w.waypoint.y == doctest::Approx(-1.0).epsilon(1e-3));

    // A segment through the zone gives zero detour.
    const SampledWaypoint thru = sampled_best_waypoint(z, {-3, 0}, {3, 0});
    CHECK(thru.detour == doctest::Approx(0.0).epsilon(1e-9));
}
