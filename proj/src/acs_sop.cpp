// Ant colony system for the set orienteering problem induced by a zone
// layout. One node per candidate waypoint, one prize per zone; a tour may
// collect each zone at most once and must return to the end depot within
// budget.

#include "crasze/acs_sop.hpp"

#include "crasze/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>

namespace crasze {

namespace {

constexpr double kTiny = 1e-12;

double guarded(double denom) { return std::max(denom, kTiny); }

}  // namespace

Point SopGraph::position(int idx) const {
    if (idx == start_index()) return depot_start;
    if (idx == end_index()) return depot_end;
    return nodes[idx].pos;
}

void SopGraph::build_cost_matrix() {
    const std::size_t n = nodes.size() + 2;
    cost_matrix.assign(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const double c =
                dist(position(static_cast<int>(a)), position(static_cast<int>(b))) * travel_scale;
            cost_matrix[a * n + b] = c;
            cost_matrix[b * n + a] = c;
        }
    }
}

SopGraph make_sop_graph(const SzLayout& layout, const Instance& inst) {
    SopGraph g;
    g.depot_start = inst.depot_start;
    g.depot_end = inst.depot_end;
    g.budget = inst.budget;
    for (const SteinerZone& z : layout.zones) {
        g.zone_prize[z.id] = z.prize;
        g.zone_circles[z.id] = z.member_ids;
        for (const Point& v : zone_candidate_points(z))
            g.nodes.push_back({static_cast<int>(g.nodes.size()), v, z.id, 0.0});
    }
    g.build_cost_matrix();
    return g;
}

double path_cost(const SopGraph& g, const std::vector<int>& seq) {
    if (seq.empty()) return g.edge(g.start_index(), g.end_index());
    double c = g.edge(g.start_index(), seq.front());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) c += g.edge(seq[i], seq[i + 1]);
    c += g.edge(seq.back(), g.end_index());
    for (int v : seq) c += g.nodes[v].visit_cost;
    return c;
}

double path_prize(const SopGraph& g, const std::vector<int>& seq) {
    std::set<int> zones;
    for (int v : seq) zones.insert(g.nodes[v].zone_id);
    double p = 0.0;
    for (int z : zones) p += g.zone_prize.at(z);
    return p;
}

namespace {

void finalize(Path& path, const SopGraph& g) {
    path.visited_zones.clear();
    for (int v : path.seq) path.visited_zones.insert(g.nodes[v].zone_id);
    path.prize = path_prize(g, path.seq);
    path.cost = path_cost(g, path.seq);
    path.feasible = path.cost <= g.budget + kGeomEps;
}

std::vector<int> feasible_candidates(const SopGraph& g, int current, double cost_so_far,
                                     const std::set<int>& visited_zones) {
    std::vector<int> out;
    const int end = g.end_index();
    for (const SopNode& v : g.nodes) {
        if (visited_zones.count(v.zone_id)) continue;
        const double reach = cost_so_far + g.edge(current, v.id) + v.visit_cost + g.edge(v.id, end);
        if (reach <= g.budget + kGeomEps) out.push_back(v.id);
    }
    return out;
}

}  // namespace

Path nearest_neighbor_path(const SopGraph& g) {
    Path path;
    int current = g.start_index();
    double cost_so_far = 0.0;
    while (true) {
        const std::vector<int> feasible =
            feasible_candidates(g, current, cost_so_far, path.visited_zones);
        if (feasible.empty()) break;
        int pick = feasible.front();
        for (int v : feasible)
            if (g.edge(current, v) < g.edge(current, pick)) pick = v;
        cost_so_far += g.edge(current, pick) + g.nodes[pick].visit_cost;
        path.seq.push_back(pick);
        path.visited_zones.insert(g.nodes[pick].zone_id);
        current = pick;
    }
    finalize(path, g);
    return path;
}

double initial_pheromone(const Path& seed_path, int n_wp) {
    if (seed_path.cost <= kTiny) return 1.0;
    const double denom = n_wp * seed_path.cost;
    if (seed_path.prize <= 0.0) return 1.0 / denom;
    return seed_path.prize / denom;
}

std::vector<double> transition_scores(const SopGraph& g, const PheromoneMatrix& tau, int current,
                                      const std::vector<int>& feasible, double beta) {
    std::vector<double> scores;
    scores.reserve(feasible.size());
    for (int v : feasible) {
        const double travel = g.edge(current, v) + g.nodes[v].visit_cost;
        const double eta = g.zone_prize.at(g.nodes[v].zone_id) / guarded(travel);
        scores.push_back(tau.get(current, v) * std::pow(eta, beta));
    }
    return scores;
}

int select_next(const SopGraph& g, const PheromoneMatrix& tau, int current,
                const std::vector<int>& feasible, const AcsParams& p, Rng& rng) {
    assert(!feasible.empty());
    const std::vector<double> scores = transition_scores(g, tau, current, feasible, p.beta);
    const double q = rng.uniform01();
    if (q <= p.q0) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < scores.size(); ++i)
            if (scores[i] > scores[best]) best = i;
        return feasible[best];
    }
    double total = 0.0;
    for (double s : scores) total += s;
    if (total <= kTiny) return feasible[rng.below(feasible.size())];
    double r = rng.uniform01() * total;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        r -= scores[i];
        if (r <= 0.0) return feasible[i];
    }
    return feasible.back();
}

void local_update(PheromoneMatrix& tau, int a, int b, double rho) {
    tau.set(a, b, (1.0 - rho) * tau.get(a, b) + rho * tau.tau0);
}

namespace {

template <typename Fn>
void for_each_edge(const SopGraph& g, const std::vector<int>& seq, Fn&& fn) {
    const int start = g.start_index();
    const int end = g.end_index();
    if (seq.empty()) {
        fn(start, end);
        return;
    }
    fn(start, seq.front());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) fn(seq[i], seq[i + 1]);
    fn(seq.back(), end);
}

}  // namespace

void global_update(PheromoneMatrix& tau, const SopGraph& g, double alpha, const Path& best) {
    const double deposit = best.prize / guarded(best.cost);
    for_each_edge(g, best.seq, [&](int a, int b) {
        tau.set(a, b, (1.0 - alpha) * tau.get(a, b) + alpha * deposit);
    });
}

void two_opt(Path& path, const SopGraph& g, double eps_impr) {
    std::vector<int>& seq = path.seq;
    if (seq.size() < 2) return;
    const int start = g.start_index();
    const int end = g.end_index();
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            const int before = i == 0 ? start : seq[i - 1];
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                const int after = j + 1 == seq.size() ? end : seq[j + 1];
                const double current = g.edge(before, seq[i]) + g.edge(seq[j], after);
                const double swapped = g.edge(before, seq[j]) + g.edge(seq[i], after);
                if (swapped < current - eps_impr) {
                    std::reverse(seq.begin() + i, seq.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }
    finalize(path, g);
}

namespace {

void release_zone(const SopGraph& g, std::vector<char>& pool, int zone_id, char value) {
    for (const SopNode& v : g.nodes)
        if (v.zone_id == zone_id) pool[v.id] = value;
}

}  // namespace

void drop_operator(Path& path, std::vector<char>& pool, const SopGraph& g) {
    const int start = g.start_index();
    const int end = g.end_index();
    while (path.cost > g.budget + kGeomEps && !path.seq.empty()) {
        std::size_t worst = 0;
        double worst_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < path.seq.size(); ++k) {
            const int before = k == 0 ? start : path.seq[k - 1];
            const int after = k + 1 == path.seq.size() ? end : path.seq[k + 1];
            const int v = path.seq[k];
            const double saved = g.edge(before, v) + g.edge(v, after) + g.nodes[v].visit_cost -
                                 g.edge(before, after);
            const double prize = g.zone_prize.at(g.nodes[v].zone_id);
            const double ratio =
                saved <= kGeomEps ? std::numeric_limits<double>::infinity() : prize / saved;
            if (ratio < worst_ratio ||
                (ratio == worst_ratio && v < path.seq[worst])) {
                worst_ratio = ratio;
                worst = k;
            }
        }
        const int removed = path.seq[worst];
        path.seq.erase(path.seq.begin() + worst);
        release_zone(g, pool, g.nodes[removed].zone_id, 1);
        finalize(path, g);
    }
}

std::pair<int, double> best_insertion(const std::vector<Point>& route, Point cand,
                                      double visit_cost, double travel_scale) {
    assert(route.size() >= 2);
    std::vector<std::size_t> order(route.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dist(route[a], cand) < dist(route[b], cand);
    });
    const std::size_t n_near = std::min<std::size_t>(3, order.size());

    std::vector<int> slots;
    const int max_slot = static_cast<int>(route.size()) - 2;
    for (std::size_t k = 0; k < n_near; ++k) {
        const int i = static_cast<int>(order[k]);
        for (int s : {i - 1, i}) {
            if (s < 0 || s > max_slot) continue;
            if (std::find(slots.begin(), slots.end(), s) == slots.end()) slots.push_back(s);
        }
    }
    std::sort(slots.begin(), slots.end());

    int best_slot = slots.front();
    double best_detour = std::numeric_limits<double>::infinity();
    for (int s : slots) {
        const double detour = (dist(route[s], cand) + dist(cand, route[s + 1]) -
                               dist(route[s], route[s + 1])) *
                                  travel_scale +
                              visit_cost;
        if (detour < best_detour) {
            best_detour = detour;
            best_slot = s;
        }
    }
    return {best_slot, best_detour};
}

void add_operator(Path& path, std::vector<char>& pool, const SopGraph& g) {
    while (true) {
        std::vector<Point> route;
        route.reserve(path.seq.size() + 2);
        route.push_back(g.depot_start);
        for (int v : path.seq) route.push_back(g.nodes[v].pos);
        route.push_back(g.depot_end);

        int best_node = -1;
        int best_slot = -1;
        double best_value = -1.0;
        for (const SopNode& v : g.nodes) {
            if (!pool[v.id]) continue;
            const auto [slot, detour] = best_insertion(route, v.pos, v.visit_cost, g.travel_scale);
            if (path.cost + detour > g.budget + kGeomEps) continue;
            const double prize = g.zone_prize.at(v.zone_id);
            const double value = detour <= kGeomEps ? std::numeric_limits<double>::infinity()
                                                    : prize / detour;
            if (value > best_value) {
                best_value = value;
                best_node = v.id;
                best_slot = slot;
            }
        }
        if (best_node < 0) break;
        path.seq.insert(path.seq.begin() + best_slot, best_node);
        release_zone(g, pool, g.nodes[best_node].zone_id, 0);
        finalize(path, g);
    }
}

namespace {

bool compound_improves(const Path& cand, const Path& best, double eps) {
    if (cand.prize >= best.prize + eps) return true;
    return std::abs(cand.prize - best.prize) <= eps && cand.cost <= best.cost - eps;
}

Path construct_ant(const SopGraph& g, const PheromoneMatrix& tau, const AcsParams& p, Rng& rng) {
    Path path;
    int current = g.start_index();
    double cost_so_far = 0.0;
    while (true) {
        const std::vector<int> feasible =
            feasible_candidates(g, current, cost_so_far, path.visited_zones);
        if (feasible.empty()) break;
        const int pick = select_next(g, tau, current, feasible, p, rng);
        cost_so_far += g.edge(current, pick) + g.nodes[pick].visit_cost;
        path.seq.push_back(pick);
        path.visited_zones.insert(g.nodes[pick].zone_id);
        current = pick;
    }
    finalize(path, g);
    return path;
}

std::vector<SolutionStop> assemble_stops(const SopGraph& g, const Path& path) {
    std::vector<SolutionStop> stops;
    stops.reserve(path.seq.size());
    for (int v : path.seq) {
        const int zone = g.nodes[v].zone_id;
        stops.push_back({zone, g.zone_circles.at(zone), g.nodes[v].pos});
    }
    return stops;
}

}  // namespace

Solution solve_sop_seeded(const SopGraph& g, const AcsParams& p, std::uint64_t seed,
                          const std::optional<AcsSeedInfo>& inherit) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);

    PheromoneMatrix tau;
    const int n = static_cast<int>(g.nodes.size()) + 2;
    Path best;  // starts as the empty depot-to-depot tour
    finalize(best, g);
    if (inherit) {
        tau.init(n, inherit->tau0);
        Path seeded;
        seeded.seq = inherit->deposit_seq;
        finalize(seeded, g);
        global_update(tau, g, p.alpha, seeded);
        if (seeded.feasible) best = seeded;
    } else {
        const Path seed_path = nearest_neighbor_path(g);
        tau.init(n, initial_pheromone(seed_path, static_cast<int>(seed_path.seq.size()) + 2));
    }

    int no_impr = 0;
    for (int iter = 0; iter < p.n_iter; ++iter) {
        Path iter_best;
        bool have_iter_best = false;
        for (int ant = 0; ant < p.n_ants; ++ant) {
            Path path = construct_ant(g, tau, p, rng);
            two_opt(path, g, p.eps_impr);
            std::vector<char> pool(g.nodes.size(), 1);
            for (int z : path.visited_zones) release_zone(g, pool, z, 0);
            drop_operator(path, pool, g);
            add_operator(path, pool, g);
            for_each_edge(g, path.seq, [&](int a, int b) { local_update(tau, a, b, p.rho); });
            if (!have_iter_best || path.prize > iter_best.prize ||
                (path.prize == iter_best.prize && path.cost < iter_best.cost)) {
                iter_best = path;
                have_iter_best = true;
            }
        }
        if (have_iter_best && compound_improves(iter_best, best, p.eps_impr)) {
            best = iter_best;
            global_update(tau, g, p.alpha, best);
            no_impr = 0;
        } else {
            ++no_impr;
            if (no_impr >= p.max_no_impr) break;
        }
    }

    Solution sol;
    sol.seed = seed;
    sol.prize = best.prize;
    sol.cost = best.cost;
    sol.budget = g.budget;
    sol.sequence = assemble_stops(g, best);
    sol.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
}

Solution solve_sop(const SopGraph& g, const AcsParams& p, std::uint64_t seed) {
    return solve_sop_seeded(g, p, seed, std::nullopt);
}

}  // namespace crasze
