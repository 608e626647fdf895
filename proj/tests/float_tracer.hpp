#pragma once

// Straight-line walk in double precision, written against the raw polygon data only.

#include <cmath>
#include <optional>
#include <string>

#include "veech/surface/presentation.hpp"

namespace oracle {

struct Pt {
    double x, y;
};

inline Pt to_pt(const veech::Vec2& v) { return {v.x.to_double(), v.y.to_double()}; }

/// Letters crossed by the line from p in direction d, or nothing when the walk passes within
/// `margin` of a vertex.
inline std::optional<std::string> trace(const veech::Surface& s, Pt p, Pt d, int poly, int n, double margin = 1e-7) {
    std::string out;
    int guard = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++guard > 50 * n + 100) return std::nullopt;
        const auto& P = s.polygons[static_cast<std::size_t>(poly)];
        double best = INFINITY;
        int edge = -1;
        double along = 0;
        for (std::size_t k = 0; k < P.size(); ++k) {
            Pt a = to_pt(P.vertex(k)), b = to_pt(P.vertex(k + 1));
            double ex = b.x - a.x, ey = b.y - a.y;
            double den = d.x * ey - d.y * ex;
            if (std::abs(den) < 1e-15) continue;
            double t = ((a.x - p.x) * ey - (a.y - p.y) * ex) / den;
            double u = ((a.x - p.x) * d.y - (a.y - p.y) * d.x) / den;
            if (t > 1e-12 && t < best && u > -1e-9 && u < 1 + 1e-9) {
                best = t;
                edge = static_cast<int>(k);
                along = u;
            }
        }
        if (edge < 0) return std::nullopt;
        double len = std::hypot(to_pt(P.vertex(static_cast<std::size_t>(edge) + 1)).x - to_pt(P.vertex(static_cast<std::size_t>(edge))).x,
                                to_pt(P.vertex(static_cast<std::size_t>(edge) + 1)).y - to_pt(P.vertex(static_cast<std::size_t>(edge))).y);
        if (along * len < margin || (1 - along) * len < margin) return std::nullopt;
        const auto& side = s.side(poly, edge);
        if (side.label != veech::kSilent) out += side.label;
        Pt t = to_pt(side.translation);
        p = {p.x + best * d.x + t.x, p.y + best * d.y + t.y};
        poly = s.sides[static_cast<std::size_t>(side.partner)].polygon;
    }
    return out;
}

}  // namespace oracle
