#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "veech/farey/farey.hpp"
#include "veech/surface/trace.hpp"
#include "veech/teich/teich.hpp"

namespace veech::render {

/// Minimal SVG 1.1 document in user coordinates with y pointing up.
class Svg {
public:
    Svg(double x0, double y0, double x1, double y1, double px = 600) : x0_(x0), y1_(y1) {
        scale_ = px / std::max(x1 - x0, y1 - y0);
        w_ = (x1 - x0) * scale_;
        h_ = (y1 - y0) * scale_;
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill, const std::string& stroke) {
        body_ << "<polygon points=\"" << points(pts) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke, double width = 1) {
        if (pts.size() < 2) return;
        body_ << "<polyline points=\"" << points(pts) << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
    }
    void circle(double x, double y, double r, const std::string& stroke) {
        body_ << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"" << r * scale_ << "\" fill=\"none\" stroke=\"" << stroke << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 12) {
        body_ << "<text x=\"" << X(x) << "\" y=\"" << Y(y) << "\" font-size=\"" << size
              << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << s << "</text>\n";
    }

    std::string str() const {
        std::ostringstream o;
        o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w_ << "\" height=\"" << h_ << "\">\n"
          << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
          << body_.str() << "</svg>\n";
        return o.str();
    }

private:
    double X(double x) const { return round3((x - x0_) * scale_); }
    double Y(double y) const { return round3((y1_ - y) * scale_); }
    static double round3(double v) { return std::round(v * 1000) / 1000; }
    std::string points(const std::vector<std::pair<double, double>>& pts) const {
        std::ostringstream o;
        for (std::size_t i = 0; i < pts.size(); ++i) o << (i ? " " : "") << X(pts[i].first) << "," << Y(pts[i].second);
        return o.str();
    }

    double x0_, y1_, scale_, w_, h_;
    std::ostringstream body_;
};

inline std::string label_text(char c) {
    if (c >= 'a' && c <= 'z') return std::string(1, static_cast<char>(c - 'a' + 'A')) + "'";
    return std::string(1, c);
}

/// Polygons with their side labels, and optionally the first n segments of a trajectory.
inline std::string surface_svg(const Surface& s, const Trajectory* t = nullptr, int n = 0) {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const auto& P : s.polygons)
        for (const auto& v : P.vertices) {
            x0 = std::min(x0, v.x.to_double());
            x1 = std::max(x1, v.x.to_double());
            y0 = std::min(y0, v.y.to_double());
            y1 = std::max(y1, v.y.to_double());
        }
    double pad = 0.08 * std::max(x1 - x0, y1 - y0);
    Svg svg(x0 - pad, y0 - pad, x1 + pad, y1 + pad);
    for (const auto& P : s.polygons) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& v : P.vertices) pts.emplace_back(v.x.to_double(), v.y.to_double());
        svg.polygon(pts, "#eef2f7", "#333");
    }
    for (const auto& P : s.polygons)
        for (std::size_t k = 0; k < P.size(); ++k) {
            const Side& sd = s.sides[static_cast<std::size_t>(P.sides[k])];
            if (sd.label == kSilent) continue;
            const Vec2& a = P.vertex(k);
            const Vec2& b = P.vertex(k + 1);
            double mx = (a.x + b.x).to_double() / 2, my = (a.y + b.y).to_double() / 2;
            // nudge the label inward
            double nx = -(b.y - a.y).to_double(), ny = (b.x - a.x).to_double(), len = std::hypot(nx, ny);
            svg.text(mx + 0.4 * pad * nx / len, my + 0.4 * pad * ny / len, label_text(sd.label));
        }
    if (t && n > 0) {
        auto r = trace_detailed(s, *t, n, true);
        for (std::size_t i = 0; i + 1 < r.path.size(); i += 2) svg.polyline({r.path[i], r.path[i + 1]}, "#c0392b", 1.5);
    }
    return svg.str();
}

/// Graph of the Farey map on [0, π], sampled at m directions, broken where the branch changes.
inline std::string farey_svg(const FareyScheme& f = FareyScheme::hexagon(), int m = 2000) {
    Svg svg(-0.1, -0.1, M_PI + 0.1, M_PI + 0.1);
    svg.polyline({{0, 0}, {M_PI, 0}, {M_PI, M_PI}, {0, M_PI}, {0, 0}}, "#999");
    std::vector<std::pair<double, double>> run;
    int branch = -1;
    for (int i = 1; i < m; ++i) {
        double th = M_PI * i / m;
        Direction d(Field(Rational(std::lround(std::cos(th) * 1e6), 1000000)), Field(Rational(std::lround(std::sin(th) * 1e6), 1000000)));
        auto sec = sector_of(d, f.scheme());
        if (sec.boundary) continue;
        if (sec.index() != branch) {
            svg.polyline(run, "#1f4e79", 1.2);
            run.clear();
            branch = sec.index();
        }
        double a = f.map(d).angle();
        if (a <= 0) a += M_PI;
        run.emplace_back(d.angle(), a);
    }
    svg.polyline(run, "#1f4e79", 1.2);
    return svg.str();
}

namespace detail {

inline std::pair<double, double> disk_xy(const teich::BoundaryPoint& b) {
    auto z = b.disk();
    return {z.real(), z.imag()};
}

/// Polyline of the hyperbolic geodesic between two boundary points of the unit disk.
inline std::vector<std::pair<double, double>> disk_geodesic(const teich::Geodesic& g, int steps = 48) {
    auto [ax, ay] = disk_xy(g.p());
    auto [bx, by] = disk_xy(g.q());
    std::complex<double> a(ax, ay), b(bx, by);
    double delta = std::abs(std::arg(b / a));
    if (std::abs(delta - M_PI) < 1e-9) return {{ax, ay}, {bx, by}};
    std::complex<double> mid = (a + b) / std::abs(a + b);
    std::complex<double> c = mid / std::cos(delta / 2);
    double r = std::tan(delta / 2);
    double t0 = std::arg(a - c), t1 = std::arg(b - c);
    double span = std::remainder(t1 - t0, 2 * M_PI);
    std::vector<std::pair<double, double>> out;
    for (int k = 0; k <= steps; ++k) {
        auto z = c + std::polar(r, t0 + span * k / steps);
        out.emplace_back(z.real(), z.imag());
    }
    return out;
}

}  // namespace detail

/// Ideal hexagon tessellation (or the triangle tessellation) in the disk, words up to the given length.
inline std::string tessellation_svg(int depth, bool triangles = false, const Direction* ray = nullptr) {
    Svg svg(-1.05, -1.05, 1.05, 1.05);
    svg.circle(0, 0, 1, "#333");
    std::vector<teich::Geodesic> base;
    std::vector<Mat2> gens;
    if (triangles) {
        Field r3 = Field::sqrt3();
        teich::BoundaryPoint zero{Field(0)}, inf{Field(0), true}, m{-(r3.inverse())}, p{r3};
        base = {teich::Geodesic(zero, inf), teich::Geodesic(m, p), teich::Geodesic(zero, m)};
        gens = {hexagon::alpha(), hexagon::beta(), hexagon::gamma()};
    } else {
        for (int i = 0; i < hexagon::kSectors; ++i) {
            base.push_back(teich::base_side(i));
            gens.push_back(teich::generator(i));
        }
    }
    std::vector<std::pair<Mat2, int>> level{{Mat2::identity(), -1}};
    std::vector<teich::Geodesic> drawn;
    for (int d = 0; d <= depth; ++d) {
        std::vector<std::pair<Mat2, int>> next;
        for (const auto& [g, last] : level) {
            for (const auto& e : base) {
                teich::Geodesic img = act(g, e);
                bool seen = false;
                for (const auto& x : drawn) seen = seen || x == img;
                if (seen) continue;
                drawn.push_back(img);
                svg.polyline(detail::disk_geodesic(img), d == 0 ? "#1f4e79" : "#7f8c8d", d == 0 ? 1.5 : 0.8);
            }
            if (d == depth) continue;
            for (int j = 0; j < static_cast<int>(gens.size()); ++j)
                if (j != last) next.push_back({g * gens[static_cast<std::size_t>(j)], j});
        }
        level = std::move(next);
    }
    if (ray) {
        auto z = teich::ray_endpoint(*ray).disk;
        svg.polyline({{0, 0}, {z.real(), z.imag()}}, "#c0392b", 1.5);
    }
    return svg.str();
}

}  // namespace veech::render
