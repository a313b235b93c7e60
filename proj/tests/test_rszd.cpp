#include "doctest.h"

#include "crasze/rng.hpp"
#include "crasze/rszd.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

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

Instance random_instance(std::uint64_t seed, int n, double radius, double extent) {
    Rng rng(seed);
    Instance inst;
    inst.name = "rand";
    inst.depot_start = {0, extent / 2};
    inst.depot_end = {extent, extent / 2};
    inst.budget = 10 * extent;
    for (int i = 0; i < n; ++i)
        inst.circles.push_back(
            circle(i + 1, rng.uniform(0, extent), rng.uniform(0, extent), radius,
                   std::floor(rng.uniform(1, 13))));
    return inst;
}

}  // namespace

TEST_CASE("zone growth accepts mutually overlapping circles") {
    SteinerZone z = singleton(circle(1, 0, 0, 1, 2));
    const auto lens = try_add_circle(z, circle(2, 1, 0, 1, 3));
    REQUIRE(lens.has_value());
    CHECK(lens->degree() == 2);
    CHECK(lens->prize == 5);
    REQUIRE(lens->vertices.size() == 2);
    const double h = std::sqrt(3.0) / 2.0;
    // Lens of unit circles at distance 1: vertices (0.5, +-sqrt(3)/2).
    for (const Point& v : lens->vertices) {
        CHECK(v.x == doctest::Approx(0.5));
        CHECK(std::abs(v.y) == doctest::Approx(h));
    }
    CHECK(lens->center.x == doctest::Approx(0.5));
    CHECK(lens->center.y == doctest::Approx(0.0));

    // Third circle covering the lens: all three pairwise regions share points.
    const auto triple = try_add_circle(*lens, circle(3, 0.5, 0.5, 1, 1));
    REQUIRE(triple.has_value());
    CHECK(triple->degree() == 3);
    CHECK(triple->prize == 6);
    CHECK(point_in_zone(*triple, triple->center));
}

TEST_CASE("zone growth rejects disjoint and pairwise-empty configurations") {
    SteinerZone z = singleton(circle(1, 0, 0, 1));
    CHECK(!try_add_circle(z, circle(2, 3, 0, 1)).has_value());

    // Chain: 1 and 2 overlap, 3 overlaps 2 but misses 1 entirely.
    const auto lens = try_add_circle(z, circle(2, 1.5, 0, 1));
    REQUIRE(lens.has_value());
    CHECK(!try_add_circle(*lens, circle(3, 3.0, 0, 1)).has_value());

    // All three pairwise intersections exist, but no pairwise intersection
    // point of 1-2 lies inside 3 (and symmetrically): an empty triple overlap.
    SteinerZone a = singleton(circle(1, 0, 0, 1.05));
    const auto ab = try_add_circle(a, circle(2, 2, 0, 1.05));
    REQUIRE(ab.has_value());
    CHECK(!try_add_circle(*ab, circle(3, 1, 1.8, 1.05)).has_value());
}

TEST_CASE("zone center and candidate points") {
    const SteinerZone solo = singleton(circle(7, 3, 4, 2));
    CHECK(zone_center(solo).x == 3);
    CHECK(zone_center(solo).y == 4);
    CHECK(zone_candidate_points(solo).size() == 1);
    CHECK(zone_candidate_points(solo)[0].x == 3);

    SteinerZone z = singleton(circle(1, 0, 0, 1));
    const auto lens = try_add_circle(z, circle(2, 1, 0, 1));
    REQUIRE(lens.has_value());
    const auto pts = zone_candidate_points(*lens);
    CHECK(pts.size() == 2);
    for (const Point& p : pts) CHECK(point_in_zone(*lens, p, 1e-7));
}

TEST_CASE("vertices are counterclockwise around the center") {
    SteinerZone z = singleton(circle(1, 0, 0, 1));
    auto grown = try_add_circle(z, circle(2, 1, 0, 1));
    REQUIRE(grown.has_value());
    grown = try_add_circle(*grown, circle(3, 0.5, std::sqrt(3.0) / 2.0, 1));
    REQUIRE(grown.has_value());
    REQUIRE(grown->vertices.size() >= 3);
    double prev = -10;
    for (const Point& v : grown->vertices) {
        const double ang = std::atan2(v.y - grown->center.y, v.x - grown->center.x);
        CHECK(ang > prev);
        prev = ang;
    }
}

TEST_CASE("degree cap of one yields a singleton partition") {
    const Instance inst = random_instance(3, 12, 6, 40);
    const SzLayout layout = build_layout_once(inst.circles, 1);
    CHECK(layout.zones.size() == inst.circles.size());
    for (const SteinerZone& zn : layout.zones) CHECK(zn.degree() == 1);
}

TEST_CASE("discretization partitions the circles exactly once") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Instance inst = random_instance(seed, 40, 5, 60);
        RszdParams params;
        params.max_degree = 5;
        const SzLayout layout = rszd(inst, params, seed);

        std::set<int> seen;
        double prize_sum = 0;
        for (const SteinerZone& zn : layout.zones) {
            CHECK(zn.degree() >= 1);
            CHECK(zn.degree() <= params.max_degree);
            CHECK(zn.member_ids.size() == zn.members.size());
            double zp = 0;
            for (std::size_t i = 0; i < zn.members.size(); ++i) {
                CHECK(zn.members[i].id == zn.member_ids[i]);
                CHECK(seen.insert(zn.member_ids[i]).second);
                zp += zn.members[i].prize;
            }
            CHECK(zn.prize == doctest::Approx(zp));
            prize_sum += zn.prize;
            if (zn.degree() >= 2) {
                CHECK(zn.vertices.size() >= 1);
                for (const Point& v : zn.vertices) CHECK(point_in_zone(zn, v, 1e-7));
            }
            CHECK(point_in_zone(zn, zn.center, 1e-7));
        }
        CHECK(seen.size() == inst.circles.size());
        double inst_prize = 0;
        for (const TargetCircle& c : inst.circles) inst_prize += c.prize;
        CHECK(prize_sum == doctest::Approx(inst_prize));
    }
}

TEST_CASE("discretization is deterministic and never beats its best pass") {
    const Instance inst = random_instance(9, 30, 7, 50);
    RszdParams params;
    const SzLayout a = rszd(inst, params, 123);
    const SzLayout b = rszd(inst, params, 123);
    CHECK(a.zones.size() == b.zones.size());
    CHECK(a.iterations_used == b.iterations_used);
    for (std::size_t i = 0; i < a.zones.size(); ++i)
        CHECK(a.zones[i].member_ids == b.zones[i].member_ids);

    // The multi-pass result can only tie or improve on the single first pass.
    const SzLayout first = build_layout_once(inst.circles, params.max_degree);
    CHECK(a.zones.size() <= first.zones.size());
}

TEST_CASE("layout serialization exposes zones, members, and geometry") {
    const Instance inst = random_instance(4, 8, 6, 30);
    const SzLayout layout = rszd(inst, RszdParams{}, 77);
    const auto j = nlohmann::json::parse(serialize_layout(layout));
    CHECK(j.at("seed").get<std::uint64_t>() == 77);
    CHECK(j.at("zones").size() == layout.zones.size());
    const auto& z0 = j.at("zones").at(0);
    CHECK(z0.contains("id"));
    CHECK(z0.contains("circle_ids"));
    CHECK(z0.contains("center"));
    CHECK(z0.contains("prize"));
    CHECK(z0.contains("vertices"));
    CHECK(z0.at("center").size() == 2);
    CHECK(j.at("iterations").get<int>() == layout.iterations_used);
}

TEST_CASE("zone lookup by id") {
    const Instance inst = random_instance(5, 10, 5, 30);
    const SzLayout layout = rszd(inst, RszdParams{}, 5);
    for (const SteinerZone& zn : layout.zones) CHECK(layout.zone_by_id(zn.id).id == zn.id);
    CHECK_THROWS(layout.zone_by_id(10'000));
}
