#include "crasze/instance.hpp"

#include "json.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace crasze {

using ordered_json = nlohmann::ordered_json;

std::string to_string(ProblemKind kind) {
    return kind == ProblemKind::Ceop ? "CEOP" : "TDDP";
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    assert(ec == std::errc());
    return std::string(buf, ptr);
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + tok + "'");
    }
}

long parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

struct Line {
    int no;
    std::vector<std::string> tokens;
    std::string raw;  // after comment stripping, trimmed
};

std::vector<Line> meaningful_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        raw = trim(raw);
        if (raw.empty()) continue;
        std::istringstream iss(raw);
        std::vector<std::string> toks;
        for (std::string t; iss >> t;) toks.push_back(t);
        out.push_back({no, std::move(toks), raw});
    }
    return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    const auto lines = meaningful_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "CEOPINST" ||
        lines[0].tokens[1] != "1")
        throw ParseError(lines[0].no, "expected header 'CEOPINST 1'");

    Instance inst;
    std::optional<double> budget_abs;
    std::optional<double> budget_level;
    bool have_kind = false, have_ds = false, have_de = false;
    std::size_t li = 1;

    auto need = [](const Line& l, std::size_t n) {
        if (l.tokens.size() != n)
            throw ParseError(l.no, "expected " + std::to_string(n - 1) + " value(s) after " +
                                       l.tokens[0]);
    };

    for (; li < lines.size(); ++li) {
        const Line& l = lines[li];
        const std::string& key = l.tokens[0];
        if (key == "NAME") {
            inst.name = trim(l.raw.substr(4));
        } else if (key == "KIND") {
            need(l, 2);
            if (l.tokens[1] == "CEOP")
                inst.kind = ProblemKind::Ceop;
            else if (l.tokens[1] == "TDDP")
                inst.kind = ProblemKind::Tddp;
            else
                throw ParseError(l.no, "KIND must be CEOP or TDDP");
            have_kind = true;
        } else if (key == "BESTKNOWN") {
            need(l, 2);
            inst.best_known_cost = parse_real(l.tokens[1], l.no);
        } else if (key == "BUDGET") {
            need(l, 2);
            budget_abs = parse_real(l.tokens[1], l.no);
        } else if (key == "BUDGET_LEVEL") {
            need(l, 2);
            budget_level = parse_real(l.tokens[1], l.no);
        } else if (key == "DEPOT_START") {
            need(l, 3);
            inst.depot_start = {parse_real(l.tokens[1], l.no), parse_real(l.tokens[2], l.no)};
            have_ds = true;
        } else if (key == "DEPOT_END") {
            need(l, 3);
            inst.depot_end = {parse_real(l.tokens[1], l.no), parse_real(l.tokens[2], l.no)};
            have_de = true;
        } else if (key == "TDDP") {
            need(l, 7);
            TddpParams tp;
            tp.v_drone = parse_real(l.tokens[1], l.no);
            tp.v_truck = parse_real(l.tokens[2], l.no);
            tp.t_serv = parse_real(l.tokens[3], l.no);
            tp.n_drones = static_cast<int>(parse_int(l.tokens[4], l.no));
            tp.lambda_min = parse_real(l.tokens[5], l.no);
            tp.lambda_max = parse_real(l.tokens[6], l.no);
            inst.tddp = tp;
        } else if (key == "NODES") {
            need(l, 2);
            break;
        } else {
            throw ParseError(l.no, "unknown key '" + key + "'");
        }
    }
    if (li >= lines.size()) throw ParseError(lines.back().no, "missing NODES section");
    if (!have_kind) throw ParseError(lines[li].no, "missing KIND");
    if (!have_ds || !have_de) throw ParseError(lines[li].no, "missing depot line(s)");

    const long n = parse_int(lines[li].tokens[1], lines[li].no);
    if (n < 1) throw ParseError(lines[li].no, "NODES must be >= 1");
    if (lines.size() - li - 1 != static_cast<std::size_t>(n))
        throw ParseError(lines[li].no, "NODES says " + std::to_string(n) + " but " +
                                           std::to_string(lines.size() - li - 1) +
                                           " node line(s) follow");
    for (std::size_t k = li + 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 5 && l.tokens.size() != 6)
            throw ParseError(l.no, "node line needs: id x y r prize [lambda]");
        TargetCircle c;
        c.id = static_cast<int>(parse_int(l.tokens[0], l.no));
        c.geom.center = {parse_real(l.tokens[1], l.no), parse_real(l.tokens[2], l.no)};
        c.geom.radius = parse_real(l.tokens[3], l.no);
        c.prize = parse_real(l.tokens[4], l.no);
        if (l.tokens.size() == 6) c.lambda = parse_real(l.tokens[5], l.no);
        inst.circles.push_back(std::move(c));
    }

    if (budget_abs && budget_level)
        throw ParseError(lines[li].no, "BUDGET and BUDGET_LEVEL are mutually exclusive");
    if (budget_abs) {
        inst.budget = *budget_abs;
    } else if (budget_level) {
        if (!inst.best_known_cost)
            throw ParseError(lines[li].no, "BUDGET_LEVEL requires BESTKNOWN");
        inst.budget = compute_budget(*inst.best_known_cost, *budget_level);
        if (inst.kind == ProblemKind::Tddp) {
            if (!inst.tddp) throw ParseError(lines[li].no, "KIND TDDP requires a TDDP line");
            inst.budget /= inst.tddp->v_truck;  // distance budget -> hours
        }
    } else {
        throw ParseError(lines[li].no, "one of BUDGET or BUDGET_LEVEL is required");
    }

    validate_instance(inst);
    return inst;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "CEOPINST 1\n";
    out << "NAME " << inst.name << "\n";
    out << "KIND " << to_string(inst.kind) << "\n";
    if (inst.best_known_cost) out << "BESTKNOWN " << format_double(*inst.best_known_cost) << "\n";
    out << "BUDGET " << format_double(inst.budget) << "\n";
    out << "DEPOT_START " << format_double(inst.depot_start.x) << " " << format_double(inst.depot_start.y)
        << "\n";
    out << "DEPOT_END " << format_double(inst.depot_end.x) << " " << format_double(inst.depot_end.y)
        << "\n";
    if (inst.tddp) {
        const TddpParams& t = *inst.tddp;
        out << "TDDP " << format_double(t.v_drone) << " " << format_double(t.v_truck) << " "
            << format_double(t.t_serv) << " " << t.n_drones << " " << format_double(t.lambda_min) << " "
            << format_double(t.lambda_max) << "\n";
    }
    out << "NODES " << inst.circles.size() << "\n";
    for (const TargetCircle& c : inst.circles) {
        out << c.id << " " << format_double(c.geom.center.x) << " " << format_double(c.geom.center.y)
            << " " << format_double(c.geom.radius) << " " << format_double(c.prize);
        if (c.lambda) out << " " << format_double(*c.lambda);
        out << "\n";
    }
    return out.str();
}

void validate_instance(const Instance& inst) {
    if (inst.circles.empty()) throw ValidationError("instance has no target circles");
    for (const TargetCircle& c : inst.circles) {
        if (!(c.geom.radius > 0.0) || !std::isfinite(c.geom.radius))
            throw ValidationError("circle " + std::to_string(c.id) + ": radius must be positive");
        if (c.prize < 0.0) throw ValidationError("circle " + std::to_string(c.id) + ": negative prize");
        if (!std::isfinite(c.geom.center.x) || !std::isfinite(c.geom.center.y))
            throw ValidationError("circle " + std::to_string(c.id) + ": non-finite center");
    }
    const double r0 = inst.circles.front().geom.radius;
    for (const TargetCircle& c : inst.circles)
        if (std::abs(c.geom.radius - r0) > kGeomEps)
            throw ValidationError("non-uniform radii: circle " + std::to_string(c.id));
    for (const TargetCircle& a : inst.circles)
        for (const TargetCircle& b : inst.circles) {
            if (a.id == b.id) continue;
            if (dist(a.geom.center, b.geom.center) + b.geom.radius <= a.geom.radius + kGeomEps)
                throw ValidationError("circle " + std::to_string(a.id) + " contains circle " +
                                      std::to_string(b.id));
        }
    if (!(inst.budget > 0.0)) throw ValidationError("budget must be positive");

    double depot_leg = dist(inst.depot_start, inst.depot_end);
    if (inst.kind == ProblemKind::Tddp) {
        if (!inst.tddp) throw ValidationError("KIND TDDP requires TDDP parameters");
        const TddpParams& t = *inst.tddp;
        if (!(t.v_drone > 0.0) || !(t.v_truck > 0.0) || t.t_serv < 0.0 || t.n_drones < 1 ||
            t.lambda_min > t.lambda_max)
            throw ValidationError("invalid TDDP parameters");
        for (const TargetCircle& c : inst.circles) {
            if (!c.lambda)
                throw ValidationError("circle " + std::to_string(c.id) +
                                      ": missing lambda for TDDP");
            if (!(*c.lambda > 0.0) || *c.lambda > 1.0 || *c.lambda < t.lambda_min - kGeomEps ||
                *c.lambda > t.lambda_max + kGeomEps)
                throw ValidationError("circle " + std::to_string(c.id) + ": lambda out of bounds");
        }
        depot_leg /= t.v_truck;
    }
    if (inst.budget + kGeomEps < depot_leg)
        throw ValidationError("budget below the direct depot leg (infeasible instance)");
}

double compute_budget(double best_known, double level) {
    assert(best_known > 0.0 && level > 0.0);
    return best_known * level;
}

double overlap_ratio(const Instance& inst) {
    double xmin = inst.depot_start.x, xmax = inst.depot_start.x;
    double ymin = inst.depot_start.y, ymax = inst.depot_start.y;
    auto take = [&](Point p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    take(inst.depot_end);
    for (const TargetCircle& c : inst.circles) take(c.geom.center);
    const double side = std::max(xmax - xmin, ymax - ymin);
    if (side <= kGeomEps) throw DegenerateExtent{};
    return inst.circles.front().geom.radius / side;
}

Instance normalize_prizes(Instance inst, double lo, double hi) {
    assert(lo < hi && !inst.circles.empty());
    double pmin = inst.circles.front().prize, pmax = pmin;
    for (const TargetCircle& c : inst.circles) {
        pmin = std::min(pmin, c.prize);
        pmax = std::max(pmax, c.prize);
    }
    for (TargetCircle& c : inst.circles)
        c.prize = (pmax == pmin) ? 0.5 * (lo + hi)
                                 : lo + (hi - lo) * (c.prize - pmin) / (pmax - pmin);
    return inst;
}

std::string serialize_solution(const Solution& sol) {
    ordered_json j;
    j["instance_name"] = sol.instance_name;
    j["algorithm"] = sol.algorithm;
    j["seed"] = sol.seed;
    j["prize"] = sol.prize;
    j["cost"] = sol.cost;
    j["budget"] = sol.budget;
    j["runtime_s"] = sol.runtime_s;
    j["truncated"] = sol.truncated;
    ordered_json seq = ordered_json::array();
    for (const SolutionStop& s : sol.sequence) {
        ordered_json stop;
        stop["zone_id"] = s.zone_id;
        stop["circle_ids"] = s.circle_ids;
        stop["x"] = s.waypoint.x;
        stop["y"] = s.waypoint.y;
        seq.push_back(std::move(stop));
    }
    j["sequence"] = std::move(seq);
    return j.dump(2) + "\n";
}

Solution parse_solution(const std::string& json_text) {
    const ordered_json j = ordered_json::parse(json_text);
    Solution sol;
    sol.instance_name = j.at("instance_name").get<std::string>();
    sol.algorithm = j.at("algorithm").get<std::string>();
    sol.seed = j.at("seed").get<std::uint64_t>();
    sol.prize = j.at("prize").get<double>();
    sol.cost = j.at("cost").get<double>();
    sol.budget = j.at("budget").get<double>();
    sol.runtime_s = j.at("runtime_s").get<double>();
    sol.truncated = j.value("truncated", false);
    for (const auto& stop : j.at("sequence")) {
        SolutionStop s;
        s.zone_id = stop.at("zone_id").get<int>();
        s.circle_ids = stop.at("circle_ids").get<std::vector<int>>();
        s.waypoint = {stop.at("x").get<double>(), stop.at("y").get<double>()};
        sol.sequence.push_back(std::move(s));
    }
    return sol;
}

}  // namespace crasze
