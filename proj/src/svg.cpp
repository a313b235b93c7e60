#include "crasze/svg.hpp"

#include "crasze/arc_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace crasze {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Bounds {
    double min_x, min_y, max_x, max_y;
};

Bounds instance_bounds(const Instance& inst) {
    Bounds b{inst.depot_start.x, inst.depot_start.y, inst.depot_start.x, inst.depot_start.y};
    const auto take = [&](double x, double y) {
        b.min_x = std::min(b.min_x, x);
        b.min_y = std::min(b.min_y, y);
        b.max_x = std::max(b.max_x, x);
        b.max_y = std::max(b.max_y, y);
    };
    take(inst.depot_end.x, inst.depot_end.y);
    for (const TargetCircle& c : inst.circles) {
        take(c.geom.center.x - c.geom.radius, c.geom.center.y - c.geom.radius);
        take(c.geom.center.x + c.geom.radius, c.geom.center.y + c.geom.radius);
    }
    return b;
}

std::string num(double v) { return format_double(v); }

void emit_arc(std::ostringstream& out, const CircleGeom& c, const FeasibleArc& arc,
              const std::string& style) {
    if (arc.end_angle - arc.start_angle >= kTwoPi - 1e-9) {
        out << "  <circle cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y) << "\" r=\""
            << num(c.radius) << "\" " << style << "/>\n";
        return;
    }
    const Point a{c.center.x + c.radius * std::cos(arc.start_angle),
                  c.center.y + c.radius * std::sin(arc.start_angle)};
    const Point b{c.center.x + c.radius * std::cos(arc.end_angle),
                  c.center.y + c.radius * std::sin(arc.end_angle)};
    const int large = arc.end_angle - arc.start_angle > std::numbers::pi ? 1 : 0;
    out << "  <path d=\"M " << num(a.x) << " " << num(a.y) << " A " << num(c.radius) << " "
        << num(c.radius) << " 0 " << large << " 1 " << num(b.x) << " " << num(b.y) << "\" " << style
        << "/>\n";
}

std::string render(const Instance& inst, const SzLayout& layout, const Solution* sol) {
    const Bounds b = instance_bounds(inst);
    const double span = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    const double margin = std::max(span * 0.04, 1e-6);
    const double w = b.max_x - b.min_x + 2 * margin;
    const double h = b.max_y - b.min_y + 2 * margin;
    const double thin = span / 400.0;
    const double thick = span / 180.0;
    const double dot = span / 150.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << num(b.min_x - margin) << " " << num(b.min_y - margin) << " " << num(w) << " " << num(h)
        << "\" width=\"800\" height=\"" << num(800.0 * h / w) << "\">\n";
    // Instance coordinates have y growing upward; flip about the vertical
    // midline of the view box.
    out << "<g transform=\"translate(0 " << num(b.min_y + b.max_y) << ") scale(1 -1)\">\n";

    for (const TargetCircle& c : inst.circles)
        out << "  <circle cx=\"" << num(c.geom.center.x) << "\" cy=\"" << num(c.geom.center.y)
            << "\" r=\"" << num(c.geom.radius) << "\" fill=\"#e8f0fe\" fill-opacity=\"0.55\""
            << " stroke=\"#9db3d8\" stroke-width=\"" << num(thin) << "\"/>\n";

    for (const SteinerZone& z : layout.zones) {
        const std::string arc_style = "fill=\"none\" stroke=\"#d9480f\" stroke-width=\"" +
                                      num(thick) + "\" stroke-linecap=\"round\"";
        for (const FeasibleArc& arc : feasible_arcs(z)) {
            const auto member = std::find_if(z.members.begin(), z.members.end(),
                                             [&](const TargetCircle& m) { return m.id == arc.circle_id; });
            emit_arc(out, member->geom, arc, arc_style);
        }
        for (const Point& v : z.vertices)
            out << "  <circle cx=\"" << num(v.x) << "\" cy=\"" << num(v.y) << "\" r=\"" << num(dot)
                << "\" fill=\"#862e9c\"/>\n";
        out << "  <circle cx=\"" << num(z.center.x) << "\" cy=\"" << num(z.center.y) << "\" r=\""
            << num(dot * 0.8) << "\" fill=\"#2b8a3e\"/>\n";
    }

    if (sol) {
        out << "  <polyline fill=\"none\" stroke=\"#1864ab\" stroke-width=\"" << num(thick)
            << "\" points=\"" << num(inst.depot_start.x) << "," << num(inst.depot_start.y);
        for (const SolutionStop& s : sol->sequence)
            out << " " << num(s.waypoint.x) << "," << num(s.waypoint.y);
        out << " " << num(inst.depot_end.x) << "," << num(inst.depot_end.y) << "\"/>\n";
        for (const SolutionStop& s : sol->sequence)
            out << "  <circle cx=\"" << num(s.waypoint.x) << "\" cy=\"" << num(s.waypoint.y)
                << "\" r=\"" << num(dot) << "\" fill=\"#1864ab\"/>\n";
    }

    for (Point d : {inst.depot_start, inst.depot_end})
        out << "  <rect x=\"" << num(d.x - 1.2 * dot) << "\" y=\"" << num(d.y - 1.2 * dot)
            << "\" width=\"" << num(2.4 * dot) << "\" height=\"" << num(2.4 * dot)
            << "\" fill=\"#e03131\"/>\n";

    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace

std::string layout_svg(const Instance& inst, const SzLayout& layout) {
    return render(inst, layout, nullptr);
}

std::string solution_svg(const Instance& inst, const SzLayout& layout, const Solution& sol) {
    return render(inst, layout, &sol);
}

}  // namespace crasze
