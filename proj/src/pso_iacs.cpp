// Truck-and-drone solver: a particle swarm moves one waypoint per zone inside
// its zone, and each placement is scored by an ant colony solving the induced
// orienteering problem under the time budget. The colony inherits the swarm
// incumbent's pheromone level so later evaluations start near the best known
// route.

#include "crasze/pso_iacs.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace crasze {

double collection_cost(const SteinerZone& zone, Point waypoint, const TddpParams& tddp) {
    double worst = 0.0;
    for (const TargetCircle& m : zone.members) {
        const double d = dist(waypoint, m.geom.center);
        const double lambda = m.lambda.value_or(1.0);
        worst = std::max(worst, d / (lambda * tddp.v_drone) + tddp.t_serv + d / tddp.v_drone);
    }
    return worst;
}

double travel_cost(Point a, Point b, const TddpParams& tddp) { return dist(a, b) / tddp.v_truck; }

double ldiw(int n, const PsoParams& p) {
    return p.omega_max - (p.omega_max - p.omega_min) * static_cast<double>(n) / p.n_iter;
}

namespace {

double point_segment_distance(Point p, Point a, Point b) {
    return dist(p, project_point_to_segment(p, a, b));
}

}  // namespace

double zone_vmax(const SteinerZone& zone) {
    if (zone.degree() == 1) return zone.members.front().geom.radius;
    if (zone.vertices.size() <= 2) {
        double r = std::numeric_limits<double>::infinity();
        for (const TargetCircle& m : zone.members)
            r = std::min(r, m.geom.radius - dist(zone.center, m.geom.center));
        return std::max(r, 0.0);
    }
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zone.vertices.size(); ++i) {
        const Point a = zone.vertices[i];
        const Point b = zone.vertices[(i + 1) % zone.vertices.size()];
        r = std::min(r, point_segment_distance(zone.center, a, b));
    }
    return r;
}

Point project_into_zone(const SteinerZone& zone, Point from, Point to) {
    if (point_in_zone(zone, to)) return to;
    double t_exit = 1.0;
    for (const TargetCircle& m : zone.members) {
        const auto iv = segment_disk_interval(from, to, m.geom);
        if (!iv) throw ProjectionFailure("particle position left its zone");
        t_exit = std::min(t_exit, iv->second);
    }
    return from + t_exit * (to - from);
}

SopGraph make_op_graph(const SzLayout& layout, const Instance& inst,
                       const std::vector<Point>& waypoints) {
    assert(waypoints.size() == layout.zones.size());
    assert(inst.tddp.has_value());
    SopGraph g;
    g.depot_start = inst.depot_start;
    g.depot_end = inst.depot_end;
    g.budget = inst.budget;
    g.travel_scale = 1.0 / inst.tddp->v_truck;
    for (std::size_t k = 0; k < layout.zones.size(); ++k) {
        const SteinerZone& z = layout.zones[k];
        g.zone_prize[z.id] = z.prize;
        g.zone_circles[z.id] = z.member_ids;
        g.nodes.push_back({static_cast<int>(k), waypoints[k], z.id,
                           collection_cost(z, waypoints[k], *inst.tddp)});
    }
    g.build_cost_matrix();
    return g;
}

Solution iacs_solve_op(const SopGraph& g, const AcsParams& p, std::uint64_t seed,
                       const std::optional<AcsSeedInfo>& inherit) {
    return solve_sop_seeded(g, p, seed, inherit);
}

double inherited_pheromone(double prize, double cost) { return prize / std::max(cost, 1e-12); }

namespace {

bool strictly_better(double prize, double cost, double ref_prize, double ref_cost, double eps) {
    if (prize >= ref_prize + eps) return true;
    return std::abs(prize - ref_prize) <= eps && cost <= ref_cost - eps;
}

}  // namespace

Solution solve_tddp(const Instance& inst, const SzLayout& layout, const PsoParams& pso,
                    const AcsParams& iacs, std::uint64_t seed, PsoTrace* trace) {
    assert(inst.tddp.has_value());
    const auto t0 = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const std::size_t n_zones = layout.zones.size();
    std::vector<double> vmax(n_zones);
    for (std::size_t k = 0; k < n_zones; ++k) vmax[k] = zone_vmax(layout.zones[k]);
    std::map<int, int> zone_index;
    for (std::size_t k = 0; k < n_zones; ++k) zone_index[layout.zones[k].id] = static_cast<int>(k);

    Rng rng(seed);
    std::uint64_t eval_counter = 0;

    std::vector<Point> gbest_pos;
    Solution gbest;
    gbest.prize = -1.0;  // replaced by the first evaluation
    bool truncated = false;

    const auto evaluate = [&](const std::vector<Point>& pos) {
        const SopGraph g = make_op_graph(layout, inst, pos);
        std::optional<AcsSeedInfo> inherit;
        if (gbest.prize > 0.0) {
            AcsSeedInfo info;
            info.tau0 = inherited_pheromone(gbest.prize, gbest.cost);
            info.deposit_value = info.tau0;
            for (const SolutionStop& s : gbest.sequence)
                info.deposit_seq.push_back(zone_index.at(s.zone_id));
            inherit = std::move(info);
        }
        ++eval_counter;
        return iacs_solve_op(g, iacs, derive_seed(seed, eval_counter), inherit);
    };

    std::vector<Particle> swarm(pso.n_particles);
    for (Particle& part : swarm) {
        part.position.resize(n_zones);
        part.velocity.assign(n_zones, Point{0.0, 0.0});
        for (std::size_t k = 0; k < n_zones; ++k) {
            const double r = vmax[k] * std::sqrt(rng.uniform01());
            const double theta = 2.0 * std::numbers::pi * rng.uniform01();
            part.position[k] = layout.zones[k].center + Point{r * std::cos(theta), r * std::sin(theta)};
        }
        part.best_position = part.position;
        part.best_eval = evaluate(part.position);
        if (strictly_better(part.best_eval.prize, part.best_eval.cost, gbest.prize, gbest.cost,
                            pso.eps_impr)) {
            gbest = part.best_eval;
            gbest_pos = part.position;
        }
    }

    int no_impr = 0;
    for (int iter = 1; iter <= pso.n_iter && !truncated; ++iter) {
        const double omega = ldiw(iter - 1, pso);
        const std::vector<Point> inherited_pos = gbest_pos;

        Solution iter_best;
        iter_best.prize = -1.0;
        std::vector<Point> iter_best_pos;
        for (Particle& part : swarm) {
            if (elapsed() > pso.time_cap_s) {
                truncated = true;
                break;
            }
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            for (std::size_t k = 0; k < n_zones; ++k) {
                Point v = omega * part.velocity[k] +
                          pso.c1 * r1 * (part.best_position[k] - part.position[k]) +
                          pso.c2 * r2 * (inherited_pos[k] - part.position[k]);
                v.x = std::clamp(v.x, -vmax[k], vmax[k]);
                v.y = std::clamp(v.y, -vmax[k], vmax[k]);
                part.velocity[k] = v;
                part.position[k] =
                    project_into_zone(layout.zones[k], part.position[k], part.position[k] + v);
                if (trace) {
                    if (std::abs(v.x) > vmax[k] || std::abs(v.y) > vmax[k])
                        ++trace->velocity_violations;
                    if (!point_in_zone(layout.zones[k], part.position[k], 10.0 * kGeomEps))
                        ++trace->position_violations;
                }
            }
            const Solution eval = evaluate(part.position);
            if (strictly_better(eval.prize, eval.cost, part.best_eval.prize, part.best_eval.cost,
                                pso.eps_impr)) {
                part.best_eval = eval;
                part.best_position = part.position;
            }
            if (strictly_better(eval.prize, eval.cost, iter_best.prize, iter_best.cost,
                                pso.eps_impr)) {
                iter_best = eval;
                iter_best_pos = part.position;
            }
        }

        if (iter_best.prize >= 0.0 && strictly_better(iter_best.prize, iter_best.cost, gbest.prize,
                                                      gbest.cost, pso.eps_impr)) {
            gbest = iter_best;
            gbest_pos = iter_best_pos;
            no_impr = 0;
        } else {
            ++no_impr;
        }
        if (trace) trace->iters.push_back({iter, omega, gbest.prize, gbest.cost});
        if (no_impr >= pso.max_no_impr) break;
    }

    if (trace) {
        trace->evals = static_cast<int>(eval_counter);
        trace->truncated = truncated;
    }

    Solution sol = gbest;
    sol.seed = seed;
    sol.budget = inst.budget;
    sol.truncated = truncated;
    sol.runtime_s = elapsed();
    return sol;
}

}  // namespace crasze
