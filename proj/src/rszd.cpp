// Randomized Steiner Zone discretization: greedy zone growth over shuffled
// circle orders, keeping the layout with the fewest zones.

#include "crasze/rszd.hpp"

#include "crasze/rng.hpp"
#include "json.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace crasze {

const SteinerZone& SzLayout::zone_by_id(int id) const {
    for (const SteinerZone& z : zones)
        if (z.id == id) return z;
    throw std::out_of_range("no zone with id " + std::to_string(id));
}

namespace {

SteinerZone singleton_zone(const TargetCircle& c) {
    SteinerZone z;
    z.member_ids = {c.id};
    z.members = {c};
    z.center = c.geom.center;
    z.prize = c.prize;
    return z;
}

void sort_ccw(std::vector<Point>& pts) {
    if (pts.size() < 3) return;
    Point mean{0, 0};
    for (Point p : pts) mean = mean + p;
    mean = (1.0 / static_cast<double>(pts.size())) * mean;
    std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
        return std::atan2(a.y - mean.y, a.x - mean.x) < std::atan2(b.y - mean.y, b.x - mean.x);
    });
}

}  // namespace

std::optional<SteinerZone> try_add_circle(const SteinerZone& zone, const TargetCircle& c,
                                          double eps) {
    std::vector<TargetCircle> members = zone.members;
    members.push_back(c);
    const std::size_t m = members.size();

    // Every pair in the enlarged set must intersect and contribute at least
    // one intersection point inside all other circles of the set; otherwise
    // the common region is empty. The surviving points are the new vertices.
    std::vector<Point> vertices;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            std::vector<Point> pts;
            try {
                pts = circle_intersections(members[i].geom, members[j].geom, eps);
            } catch (const DegenerateCircles&) {
                return std::nullopt;
            }
            bool witness = false;
            for (Point p : pts) {
                bool inside_rest = true;
                for (std::size_t k = 0; k < m && inside_rest; ++k)
                    if (k != i && k != j) inside_rest = point_in_circle(p, members[k].geom, eps);
                if (!inside_rest) continue;
                witness = true;
                bool dup = false;
                for (Point q : vertices)
                    if (dist(p, q) <= 10 * eps) {
                        dup = true;
                        break;
                    }
                if (!dup) vertices.push_back(p);
            }
            if (!witness) return std::nullopt;
        }
    }

    SteinerZone out;
    out.id = zone.id;
    out.member_ids = zone.member_ids;
    out.member_ids.push_back(c.id);
    out.members = std::move(members);
    sort_ccw(vertices);
    out.vertices = std::move(vertices);
    out.center = zone_center(out);
    out.prize = zone.prize + c.prize;
    return out;
}

Point zone_center(const SteinerZone& zone) {
    if (zone.degree() == 1) return zone.members.front().geom.center;
    assert(!zone.vertices.empty());
    Point sum{0, 0};
    for (Point v : zone.vertices) sum = sum + v;
    return (1.0 / static_cast<double>(zone.vertices.size())) * sum;
}

bool point_in_zone(const SteinerZone& zone, Point p, double eps) {
    for (const TargetCircle& m : zone.members)
        if (!point_in_circle(p, m.geom, eps)) return false;
    return true;
}

std::vector<Point> zone_candidate_points(const SteinerZone& zone) {
    if (zone.degree() == 1) return {zone.members.front().geom.center};
    return zone.vertices;
}

SzLayout build_layout_once(const std::vector<TargetCircle>& circles, int max_degree, double eps) {
    assert(max_degree >= 1);
    SzLayout layout;
    std::vector<bool> consumed(circles.size(), false);
    for (std::size_t i = 0; i < circles.size(); ++i) {
        if (consumed[i]) continue;
        consumed[i] = true;
        SteinerZone zone = singleton_zone(circles[i]);
        for (std::size_t j = i + 1; j < circles.size() && zone.degree() < max_degree; ++j) {
            if (consumed[j]) continue;
            if (auto grown = try_add_circle(zone, circles[j], eps)) {
                zone = std::move(*grown);
                consumed[j] = true;
            }
        }
        zone.id = static_cast<int>(layout.zones.size()) + 1;
        layout.zones.push_back(std::move(zone));
    }
    return layout;
}

SzLayout rszd(const Instance& inst, const RszdParams& params, std::uint64_t seed) {
    assert(params.n_iter >= 1);
    std::optional<SzLayout> best;
    std::vector<TargetCircle> order = inst.circles;
    for (int it = 1; it <= params.n_iter; ++it) {
        if (it > 1) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(it)));
            order = inst.circles;
            rng.shuffle(order);
        }
        SzLayout layout = build_layout_once(order, params.max_degree, params.eps);
        if (!best || layout.zones.size() < best->zones.size()) best = std::move(layout);
    }
    best->source_instance = inst.name;
    best->seed = seed;
    best->iterations_used = params.n_iter;
    return std::move(*best);
}

std::string serialize_layout(const SzLayout& layout) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json zones = nlohmann::ordered_json::array();
    for (const SteinerZone& z : layout.zones) {
        nlohmann::ordered_json zj;
        zj["id"] = z.id;
        zj["circle_ids"] = z.member_ids;
        nlohmann::ordered_json verts = nlohmann::ordered_json::array();
        for (Point v : z.vertices) verts.push_back({v.x, v.y});
        zj["vertices"] = std::move(verts);
        zj["center"] = {z.center.x, z.center.y};
        zj["prize"] = z.prize;
        zones.push_back(std::move(zj));
    }
    j["zones"] = std::move(zones);
    j["seed"] = layout.seed;
    j["iterations"] = layout.iterations_used;
    return j.dump(2) + "\n";
}

}  // namespace crasze
