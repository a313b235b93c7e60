// Independent checkers used by the test suite: an exhaustive tour search, a
// Monte Carlo comparison of two zone membership definitions, and a sampling
// reference for the waypoint subproblem. None of them share search logic with
// the solvers they vet.

#include "crasze/oracle.hpp"

#include "crasze/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace crasze {

namespace {

constexpr double kTieEps = 1e-9;

struct BruteState {
    const SopGraph& g;
    bool prune;
    std::vector<int> zone_ids;
    std::map<int, std::vector<int>> zone_nodes;
    std::map<int, double> zone_prize;

    double best_prize = 0.0;
    double best_cost = 0.0;
    std::vector<int> best_zone_seq;

    std::vector<int> seq;

    void dfs(int current, unsigned visited_mask, double cost, double prize, double remaining) {
        const double closed = cost + g.edge(current, g.end_index());
        if (prize > best_prize + kTieEps ||
            (std::abs(prize - best_prize) <= kTieEps && closed < best_cost - kTieEps)) {
            best_prize = prize;
            best_cost = closed;
            best_zone_seq = seq;
        }
        if (prune && prize + remaining < best_prize - kTieEps) return;

        for (std::size_t zi = 0; zi < zone_ids.size(); ++zi) {
            if (visited_mask & (1u << zi)) continue;
            const int zone = zone_ids[zi];
            const double zp = zone_prize.at(zone);
            for (int v : zone_nodes.at(zone)) {
                const double c2 = cost + g.edge(current, v) + g.nodes[v].visit_cost;
                if (c2 + g.edge(v, g.end_index()) > g.budget + kGeomEps) continue;
                seq.push_back(zone);
                dfs(v, visited_mask | (1u << zi), c2, prize + zp, remaining - zp);
                seq.pop_back();
            }
        }
    }
};

}  // namespace

OracleResult brute_force_sop(const SopGraph& g, bool prune) {
    if (g.zone_prize.size() > 8)
        throw TooLarge("exhaustive search limited to 8 zones, got " +
                       std::to_string(g.zone_prize.size()));
    if (g.nodes.size() > 18)
        throw TooLarge("exhaustive search limited to 18 candidate nodes, got " +
                       std::to_string(g.nodes.size()));

    BruteState st{g, prune, {}, {}, {}, 0.0, 0.0, {}, {}};
    for (const auto& [zone, prize] : g.zone_prize) {
        st.zone_ids.push_back(zone);
        st.zone_prize[zone] = prize;
    }
    for (const SopNode& v : g.nodes) st.zone_nodes[v.zone_id].push_back(v.id);

    double total = 0.0;
    for (const auto& [zone, prize] : st.zone_prize) total += prize;

    st.best_cost = g.edge(g.start_index(), g.end_index());
    st.dfs(g.start_index(), 0u, 0.0, 0.0, total);

    return {st.best_prize, st.best_cost, st.best_zone_seq};
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

/// Circle whose boundary arc joins two consecutive zone vertices; identified
/// by requiring both vertices on the circle and the arc midpoint (taken
/// within the counterclockwise wedge the pair spans around the zone center)
/// inside every other member.
std::optional<CircleGeom> binding_circle(const SteinerZone& zone, Point a, Point b) {
    constexpr double kOnTol = 1e-6;
    const double theta_a = std::atan2(a.y - zone.center.y, a.x - zone.center.x);
    const double theta_b = std::atan2(b.y - zone.center.y, b.x - zone.center.x);
    const double span = wrap_angle(theta_b - theta_a);

    for (std::size_t i = 0; i < zone.members.size(); ++i) {
        const CircleGeom& c = zone.members[i].geom;
        if (std::abs(dist(a, c.center) - c.radius) > kOnTol) continue;
        if (std::abs(dist(b, c.center) - c.radius) > kOnTol) continue;

        const Point chord_mid = 0.5 * (a + b);
        Point u = chord_mid - c.center;
        if (norm(u) <= kGeomEps) {
            const Point ab = b - a;
            u = Point{-ab.y, ab.x};
        }
        u = (1.0 / norm(u)) * u;

        for (Point m : {c.center + c.radius * u, c.center + (-c.radius) * u}) {
            const double theta_m =
                std::atan2(m.y - zone.center.y, m.x - zone.center.x);
            if (wrap_angle(theta_m - theta_a) > span + 1e-9) continue;
            bool inside = true;
            for (std::size_t k = 0; k < zone.members.size() && inside; ++k) {
                if (k == i) continue;
                inside = point_in_circle(m, zone.members[k].geom, 1e-7);
            }
            if (inside) return c;
        }
    }
    return std::nullopt;
}

}  // namespace

ZoneCheckResult monte_carlo_zone_check(const SteinerZone& zone, int n_samples, std::uint64_t seed,
                                       double band) {
    ZoneCheckResult res;

    std::vector<CircleGeom> boundary;
    if (zone.degree() == 1) {
        boundary.push_back(zone.members.front().geom);
    } else if (zone.vertices.size() >= 2) {
        for (std::size_t k = 0; k < zone.vertices.size() && res.reconstructed; ++k) {
            const Point a = zone.vertices[k];
            const Point b = zone.vertices[(k + 1) % zone.vertices.size()];
            const auto c = binding_circle(zone, a, b);
            if (!c) {
                res.reconstructed = false;
                break;
            }
            boundary.push_back(*c);
        }
    }
    // Degree >= 2 with fewer than two vertices is a touching point; no sample
    // outside the ambiguity band can sit inside it, so boundary stays empty
    // and membership below is simply "false".
    const bool point_zone = zone.degree() >= 2 && zone.vertices.size() < 2;

    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const TargetCircle& m : zone.members) {
        min_x = std::min(min_x, m.geom.center.x - m.geom.radius);
        max_x = std::max(max_x, m.geom.center.x + m.geom.radius);
        min_y = std::min(min_y, m.geom.center.y - m.geom.radius);
        max_y = std::max(max_y, m.geom.center.y + m.geom.radius);
    }

    Rng rng(seed);
    for (int s = 0; s < n_samples; ++s) {
        const Point p{rng.uniform(min_x, max_x), rng.uniform(min_y, max_y)};
        ++res.samples;

        bool ambiguous = false;
        bool raw = true;
        for (const TargetCircle& m : zone.members) {
            const double d = dist(p, m.geom.center);
            if (std::abs(d - m.geom.radius) < band) {
                ambiguous = true;
                break;
            }
            if (d > m.geom.radius) raw = false;
        }
        if (ambiguous) continue;
        ++res.checked;

        bool rebuilt;
        if (!res.reconstructed) {
            rebuilt = !raw;  // forces every raw-inside point to count
        } else if (point_zone) {
            rebuilt = false;
        } else {
            rebuilt = true;
            for (const CircleGeom& c : boundary) {
                if (dist(p, c.center) > c.radius) {
                    rebuilt = false;
                    break;
                }
            }
        }
        if (raw != rebuilt) ++res.violations;
    }
    return res;
}

SampledWaypoint sampled_best_waypoint(const SteinerZone& zone, Point prev, Point next,
                                      int n_samples) {
    const auto feasible = [&](Point p) { return point_in_zone(zone, p, kGeomEps); };
    const auto detour = [&](Point p) { return dist(prev, p) + dist(p, next); };

    SampledWaypoint best{zone.center, std::numeric_limits<double>::infinity()};
    const auto consider = [&](Point p) {
        const double d = detour(p);
        if (d < best.detour) best = {p, d};
    };
    consider(zone.center);

    for (const TargetCircle& m : zone.members) {
        for (int k = 0; k < n_samples; ++k) {
            const double theta = kTwoPi * k / n_samples;
            const Point p{m.geom.center.x + m.geom.radius * std::cos(theta),
                          m.geom.center.y + m.geom.radius * std::sin(theta)};
            if (feasible(p)) consider(p);
        }
    }
    for (int k = 0; k <= n_samples; ++k) {
        const double t = static_cast<double>(k) / n_samples;
        const Point p = prev + t * (next - prev);
        if (feasible(p)) consider(p);
    }

    best.detour -= dist(prev, next);
    if (best.detour < 0.0) best.detour = 0.0;
    return best;
}

}  // namespace crasze
