#include "crasze/generator.hpp"

#include "crasze/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace crasze {

namespace {

double nn_tour_length(Point start, Point end, const std::vector<Point>& centers) {
    std::vector<char> used(centers.size(), 0);
    Point at = start;
    double len = 0.0;
    for (std::size_t step = 0; step < centers.size(); ++step) {
        std::size_t pick = centers.size();
        double best = 0.0;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (used[i]) continue;
            const double d = dist(at, centers[i]);
            if (pick == centers.size() || d < best) {
                pick = i;
                best = d;
            }
        }
        used[pick] = 1;
        len += best;
        at = centers[pick];
    }
    return len + dist(at, end);
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
    if (spec.n_circles < 1) throw std::invalid_argument("need at least one circle");
    if (spec.extent <= 0.0) throw std::invalid_argument("extent must be positive");
    if (spec.prize_min > spec.prize_max) throw std::invalid_argument("empty prize range");
    const double radius = spec.overlap ? *spec.overlap * spec.extent : spec.radius;
    if (radius <= 0.0) throw std::invalid_argument("radius must be positive");

    Rng rng(seed);
    Instance inst;
    inst.name = spec.name;
    inst.kind = spec.kind;
    inst.depot_start = {0.0, spec.extent / 2.0};
    inst.depot_end = {spec.extent, spec.extent / 2.0};
    if (spec.kind == ProblemKind::Tddp) inst.tddp = TddpParams{};

    std::vector<Point> centers;
    for (int i = 0; i < spec.n_circles; ++i) {
        Point c;
        do {
            c = {rng.uniform(0.0, spec.extent), rng.uniform(0.0, spec.extent)};
        } while (std::any_of(centers.begin(), centers.end(),
                             [&](Point o) { return dist(c, o) < 1e-6; }));
        centers.push_back(c);

        TargetCircle circle;
        circle.id = i + 1;
        circle.geom = {c, radius};
        circle.prize = std::min(std::floor(rng.uniform(spec.prize_min, spec.prize_max + 1.0)),
                                spec.prize_max);
        if (inst.tddp) circle.lambda = rng.uniform(inst.tddp->lambda_min, inst.tddp->lambda_max);
        inst.circles.push_back(circle);
    }

    const double tour = nn_tour_length(inst.depot_start, inst.depot_end, centers);
    inst.best_known_cost = tour;
    const double leg = dist(inst.depot_start, inst.depot_end);
    double budget = std::max(spec.budget_level * tour, leg);
    if (inst.tddp) budget /= inst.tddp->v_truck;
    inst.budget = budget;

    validate_instance(inst);
    return inst;
}

}  // namespace crasze
