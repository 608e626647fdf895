#pragma once

#include <string>
#include <vector>

#include "veech/surface/presentation.hpp"

namespace veech {

/// Piecewise translation between two presentations of one surface.
struct CutAndPaste {
    struct Piece {
        std::vector<Vec2> region;  // convex, counterclockwise, in source coordinates
        Vec2 translation;
    };

    std::vector<Piece> pieces;
    Surface source, target;

    /// First piece (closed) containing p decides the translation.
    Vec2 apply(const Vec2& p) const {
        for (const auto& pc : pieces)
            if (inside_closed(pc.region, p)) return p + pc.translation;
        throw DomainError("point " + p.to_string() + " lies outside the source");
    }

    /// Inverse map, pieces looked up by their images.
    Vec2 apply_inverse(const Vec2& p) const {
        for (const auto& pc : pieces) {
            std::vector<Vec2> img;
            for (const auto& v : pc.region) img.push_back(v + pc.translation);
            if (inside_closed(img, p)) return p - pc.translation;
        }
        throw DomainError("point " + p.to_string() + " lies outside the target");
    }
};

namespace detail {

// Interiors of two convex polygons are disjoint iff some edge separates them.
inline bool interiors_disjoint(const std::vector<Vec2>& P, const std::vector<Vec2>& Q) {
    auto separated_by = [](const std::vector<Vec2>& A, const std::vector<Vec2>& B) {
        for (std::size_t k = 0; k < A.size(); ++k) {
            const Vec2& a = A[k];
            const Vec2& b = A[(k + 1) % A.size()];
            bool all_out = true;
            for (const auto& q : B)
                if (cross(b - a, q - a).sign() > 0) {
                    all_out = false;
                    break;
                }
            if (all_out) return true;
        }
        return false;
    };
    return separated_by(P, Q) || separated_by(Q, P);
}

/// Part of a convex polygon on the left of the directed line ab.
inline std::vector<Vec2> clip_left(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
    std::vector<Vec2> out;
    Vec2 e = b - a;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Vec2& p = poly[k];
        const Vec2& q = poly[(k + 1) % poly.size()];
        Field fp = cross(e, p - a), fq = cross(e, q - a);
        if (fp.sign() >= 0) out.push_back(p);
        if ((fp.sign() > 0 && fq.sign() < 0) || (fp.sign() < 0 && fq.sign() > 0)) out.push_back(p + (fp / (fp - fq)) * (q - p));
    }
    return out;
}

/// Convex intersection of two convex counterclockwise polygons.
inline std::vector<Vec2> intersect_convex(std::vector<Vec2> P, const std::vector<Vec2>& Q) {
    for (std::size_t k = 0; k < Q.size() && P.size() >= 3; ++k) P = clip_left(P, Q[k], Q[(k + 1) % Q.size()]);
    return P.size() >= 3 ? P : std::vector<Vec2>{};
}

inline std::string tiles(const std::vector<std::vector<Vec2>>& regions, const Surface& s) {
    Field total;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const auto& r = regions[i];
        if (!is_strictly_convex_ccw(r)) return "piece " + std::to_string(i) + " is not convex counterclockwise";
        Field area = polygon_area(r), covered;
        for (const auto& P : s.polygons) covered += polygon_area(intersect_convex(r, P.vertices));
        if (covered != area) return "piece " + std::to_string(i) + " is not covered by the polygons of " + s.name;
        for (std::size_t j = 0; j < i; ++j)
            if (!interiors_disjoint(r, regions[j]))
                return "pieces " + std::to_string(j) + " and " + std::to_string(i) + " overlap";
        total += area;
    }
    if (total != s.area()) return "pieces cover area " + total.to_string() + " of " + s.area().to_string();
    return {};
}

}  // namespace detail

/// Empty string when the pieces tile the source and their images tile the target.
inline std::string validate_cut_and_paste(const CutAndPaste& m) {
    std::vector<std::vector<Vec2>> src, dst;
    for (const auto& pc : m.pieces) {
        src.push_back(pc.region);
        std::vector<Vec2> img;
        for (const auto& v : pc.region) img.push_back(v + pc.translation);
        dst.push_back(std::move(img));
    }
    if (auto e = detail::tiles(src, m.source); !e.empty()) return "source: " + e;
    if (auto e = detail::tiles(dst, m.target); !e.empty()) return "target: " + e;
    return {};
}

}  // namespace veech
