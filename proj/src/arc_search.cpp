// Waypoint refinement over a fixed zone sequence. Each zone's waypoint may
// move anywhere in the zone; between two fixed neighbors the detour objective
// d(prev, w) + d(w, next) is minimized either on the segment (when it crosses
// the zone) or on the feasible boundary.

#include "crasze/arc_search.hpp"

#include "crasze/acs_sop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace crasze {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

bool inside_other_members(const SteinerZone& zone, Point p, std::size_t skip) {
    for (std::size_t k = 0; k < zone.members.size(); ++k) {
        if (k == skip) continue;
        if (!point_in_circle(p, zone.members[k].geom, kGeomEps)) return false;
    }
    return true;
}

template <typename Fn>
double golden_min(Fn&& f, double a, double b) {
    constexpr double kRatio = 0.6180339887498949;
    double c = b - kRatio * (b - a);
    double d = a + kRatio * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > 1e-10) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kRatio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kRatio * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<FeasibleArc> feasible_arcs(const SteinerZone& zone) {
    std::vector<FeasibleArc> arcs;
    for (std::size_t i = 0; i < zone.members.size(); ++i) {
        const CircleGeom& ci = zone.members[i].geom;
        const int id = zone.members[i].id;
        if (zone.members.size() == 1) {
            arcs.push_back({id, 0.0, kTwoPi});
            continue;
        }

        std::vector<double> cuts;
        for (std::size_t j = 0; j < zone.members.size(); ++j) {
            if (j == i) continue;
            for (Point p : circle_intersections(ci, zone.members[j].geom))
                cuts.push_back(wrap_angle(std::atan2(p.y - ci.center.y, p.x - ci.center.x)));
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                   cuts.end());

        auto boundary_point = [&](double theta) {
            return Point{ci.center.x + ci.radius * std::cos(theta),
                         ci.center.y + ci.radius * std::sin(theta)};
        };
        if (cuts.empty()) {
            if (inside_other_members(zone, boundary_point(0.0), i)) arcs.push_back({id, 0.0, kTwoPi});
            continue;
        }

        const std::size_t m = cuts.size();
        std::vector<char> keep(m);
        for (std::size_t k = 0; k < m; ++k) {
            const double lo = cuts[k];
            const double hi = k + 1 < m ? cuts[k + 1] : cuts[0] + kTwoPi;
            keep[k] = inside_other_members(zone, boundary_point(0.5 * (lo + hi)), i) ? 1 : 0;
        }
        if (std::all_of(keep.begin(), keep.end(), [](char k) { return k; })) {
            arcs.push_back({id, cuts[0], cuts[0] + kTwoPi});
            continue;
        }

        std::size_t first_gap = 0;
        while (keep[first_gap]) ++first_gap;
        for (std::size_t step = 0; step < m;) {
            const std::size_t k = (first_gap + step) % m;
            if (!keep[k]) {
                ++step;
                continue;
            }
            std::size_t run = 0;
            while (run + step < m && keep[(first_gap + step + run) % m]) ++run;
            const double start = cuts[k];
            double end = cuts[(k + run) % m];
            while (end < start) end += kTwoPi;
            arcs.push_back({id, start, end});
            step += run;
        }
    }
    return arcs;
}

Point best_waypoint_in_zone(const SteinerZone& zone, Point prev, Point next) {
    // A segment portion inside every member gives a zero-detour waypoint.
    double lo = 0.0;
    double hi = 1.0;
    bool crosses = true;
    for (const TargetCircle& m : zone.members) {
        const auto iv = segment_disk_interval(prev, next, m.geom);
        if (!iv) {
            crosses = false;
            break;
        }
        lo = std::max(lo, iv->first);
        hi = std::min(hi, iv->second);
        if (lo > hi) {
            crosses = false;
            break;
        }
    }
    if (crosses) {
        const double t = 0.5 * (lo + hi);
        return prev + t * (next - prev);
    }

    const auto detour = [&](Point w) { return dist(prev, w) + dist(w, next); };

    std::vector<Point> cands;
    for (std::size_t i = 0; i < zone.members.size(); ++i) {
        const Point close = closest_point_on_circle_to_segment(zone.members[i].geom, prev, next);
        if (inside_other_members(zone, close, i)) cands.push_back(close);
    }
    cands.insert(cands.end(), zone.vertices.begin(), zone.vertices.end());

    constexpr int kSweep = 256;
    for (std::size_t i = 0; i < zone.members.size(); ++i) {
        const CircleGeom& c = zone.members[i].geom;
        const auto at = [&](double theta) {
            return Point{c.center.x + c.radius * std::cos(theta),
                         c.center.y + c.radius * std::sin(theta)};
        };
        const auto f = [&](double theta) { return detour(at(theta)); };
        std::array<double, kSweep> fs;
        for (int k = 0; k < kSweep; ++k) fs[k] = f(kTwoPi * k / kSweep);
        for (int k = 0; k < kSweep; ++k) {
            const double fk = fs[k];
            if (fk > fs[(k + kSweep - 1) % kSweep] || fk > fs[(k + 1) % kSweep]) continue;
            const double theta0 = kTwoPi * k / kSweep;
            const double h = kTwoPi / kSweep;
            const Point p = at(golden_min(f, theta0 - h, theta0 + h));
            if (inside_other_members(zone, p, i)) cands.push_back(p);
        }
    }

    if (cands.empty()) return zone.center;
    Point best = cands.front();
    for (Point p : cands)
        if (detour(p) < detour(best)) best = p;
    return best;
}

int arc_search(std::vector<SolutionStop>& stops, const SzLayout& layout, Point depot_start,
               Point depot_end, const ArcSearchParams& params) {
    if (stops.empty()) return 0;
    int sweeps = 0;
    while (sweeps < params.max_sweeps) {
        ++sweeps;
        bool moved = false;
        for (std::size_t i = 0; i < stops.size(); ++i) {
            const Point prev = i == 0 ? depot_start : stops[i - 1].waypoint;
            const Point next = i + 1 == stops.size() ? depot_end : stops[i + 1].waypoint;
            const SteinerZone& zone = layout.zone_by_id(stops[i].zone_id);
            const Point cand = best_waypoint_in_zone(zone, prev, next);
            const double before = dist(prev, stops[i].waypoint) + dist(stops[i].waypoint, next);
            const double after = dist(prev, cand) + dist(cand, next);
            if (after < before - 1e-12) {
                stops[i].waypoint = cand;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return sweeps;
}

double route_length(const std::vector<SolutionStop>& stops, Point depot_start, Point depot_end) {
    if (stops.empty()) return dist(depot_start, depot_end);
    double len = dist(depot_start, stops.front().waypoint);
    for (std::size_t i = 0; i + 1 < stops.size(); ++i)
        len += dist(stops[i].waypoint, stops[i + 1].waypoint);
    len += dist(stops.back().waypoint, depot_end);
    return len;
}

namespace {

void insert_unvisited_zones(Solution& sol, const SzLayout& layout, const Instance& inst) {
    std::set<int> visited;
    for (const SolutionStop& s : sol.sequence) visited.insert(s.zone_id);
    double cost = route_length(sol.sequence, inst.depot_start, inst.depot_end);

    while (true) {
        std::vector<Point> route;
        route.reserve(sol.sequence.size() + 2);
        route.push_back(inst.depot_start);
        for (const SolutionStop& s : sol.sequence) route.push_back(s.waypoint);
        route.push_back(inst.depot_end);

        const SteinerZone* best_zone = nullptr;
        Point best_point;
        int best_slot = -1;
        double best_detour = 0.0;
        double best_value = -1.0;
        for (const SteinerZone& z : layout.zones) {
            if (visited.count(z.id)) continue;
            Point zone_point;
            int zone_slot = -1;
            double zone_detour = std::numeric_limits<double>::infinity();
            for (Point cand : zone_candidate_points(z)) {
                const auto [slot, detour] = best_insertion(route, cand, 0.0, 1.0);
                if (detour < zone_detour) {
                    zone_detour = detour;
                    zone_slot = slot;
                    zone_point = cand;
                }
            }
            if (cost + zone_detour > inst.budget + kGeomEps) continue;
            const double value = zone_detour <= kGeomEps
                                     ? std::numeric_limits<double>::infinity()
                                     : z.prize / zone_detour;
            if (value > best_value) {
                best_value = value;
                best_zone = &z;
                best_point = zone_point;
                best_slot = zone_slot;
                best_detour = zone_detour;
            }
        }
        if (!best_zone) break;
        sol.sequence.insert(sol.sequence.begin() + best_slot,
                            {best_zone->id, best_zone->member_ids, best_point});
        visited.insert(best_zone->id);
        cost += best_detour;
    }
}

}  // namespace

Solution refine_ceop(Solution sol, const SzLayout& layout, const Instance& inst, int rounds) {
    for (int r = 0; r < rounds; ++r) {
        arc_search(sol.sequence, layout, inst.depot_start, inst.depot_end);
        insert_unvisited_zones(sol, layout, inst);
    }

    std::set<int> zones;
    for (const SolutionStop& s : sol.sequence) zones.insert(s.zone_id);
    sol.prize = 0.0;
    for (int z : zones) sol.prize += layout.zone_by_id(z).prize;
    sol.cost = route_length(sol.sequence, inst.depot_start, inst.depot_end);
    return sol;
}

}  // namespace crasze
