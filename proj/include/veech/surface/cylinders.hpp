#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "veech/surface/presentation.hpp"

namespace veech {

struct Cylinder {
    Field width, height, mu, area;
    std::vector<std::pair<int, int>> strips;  // (polygon, strip index)
};

struct CylinderDecomposition {
    Direction direction;
    Field scale_sq = 1;  // |d|² when widths and heights are measured in the rotated frame
    std::vector<Cylinder> cylinders;
};

namespace detail {

struct FieldLess {
    bool operator()(const Field& a, const Field& b) const { return a < b; }
};

// x-extent of a convex polygon at height y, as (left, right).
inline std::pair<Field, Field> span_at(const std::vector<Vec2>& verts, const Field& y) {
    std::vector<Field> xs;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Vec2& a = verts[k];
        const Vec2& b = verts[(k + 1) % verts.size()];
        int sa = (a.y - y).sign(), sb = (b.y - y).sign();
        if (sa == 0) xs.push_back(a.x);
        if (sa * sb < 0) xs.push_back(a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x));
    }
    auto [lo, hi] = std::minmax_element(xs.begin(), xs.end(), FieldLess{});
    return {*lo, *hi};
}

inline CylinderDecomposition horizontal_cylinders(const Surface& s, int max_rounds) {
    const std::size_t np = s.polygons.size();
    std::vector<std::set<Field, FieldLess>> cuts(np);
    std::vector<std::pair<Field, Field>> range(np);
    for (std::size_t p = 0; p < np; ++p) {
        const auto& vs = s.polygons[p].vertices;
        for (const auto& v : vs) cuts[p].insert(v.y);
        range[p] = {*cuts[p].begin(), *cuts[p].rbegin()};
    }
    // Carry every cut height across the non-horizontal sides until nothing changes.
    bool changed = true;
    int rounds = 0;
    while (changed) {
        if (++rounds > max_rounds) throw DomainError(s.name + ": horizontal separatrices do not close within the step bound");
        changed = false;
        for (const auto& sd : s.sides) {
            const auto& P = s.polygons[static_cast<std::size_t>(sd.polygon)];
            const Vec2& a = P.vertex(static_cast<std::size_t>(sd.index));
            const Vec2& b = P.vertex(static_cast<std::size_t>(sd.index) + 1);
            if (a.y == b.y) continue;
            Field lo = std::min(a.y, b.y, FieldLess{}), hi = std::max(a.y, b.y, FieldLess{});
            std::size_t q = static_cast<std::size_t>(s.sides[static_cast<std::size_t>(sd.partner)].polygon);
            std::vector<Field> add;
            for (const auto& h : cuts[static_cast<std::size_t>(sd.polygon)])
                if (h > lo && h < hi) add.push_back(h + sd.translation.y);
            for (auto& h : add)
                if (cuts[q].insert(h).second) changed = true;
        }
    }
    // Strip k of polygon p lies between its k-th and (k+1)-th cut heights.
    std::vector<std::vector<Field>> levels(np);
    for (std::size_t p = 0; p < np; ++p) levels[p].assign(cuts[p].begin(), cuts[p].end());
    auto strip_index = [&](std::size_t p, const Field& bottom) -> int {
        auto& L = levels[p];
        for (std::size_t k = 0; k + 1 < L.size(); ++k)
            if (L[k] == bottom) return static_cast<int>(k);
        throw DomainError(s.name + ": strips do not match across a side");
    };
    std::map<std::pair<int, int>, std::pair<int, int>> right;
    for (std::size_t p = 0; p < np; ++p) {
        const auto& P = s.polygons[p];
        for (std::size_t k = 0; k + 1 < levels[p].size(); ++k) {
            const Field& y0 = levels[p][k];
            const Field& y1 = levels[p][k + 1];
            // right chain: the side going upward that spans [y0, y1]
            bool found = false;
            for (std::size_t e = 0; e < P.size() && !found; ++e) {
                const Vec2& a = P.vertex(e);
                const Vec2& b = P.vertex(e + 1);
                if (a.y <= y0 && b.y >= y1 && a.y < b.y) {
                    const Side& sd = s.sides[static_cast<std::size_t>(P.sides[e])];
                    std::size_t q = static_cast<std::size_t>(s.sides[static_cast<std::size_t>(sd.partner)].polygon);
                    right[{static_cast<int>(p), static_cast<int>(k)}] = {static_cast<int>(q), strip_index(q, y0 + sd.translation.y)};
                    found = true;
                }
            }
            if (!found) throw DomainError(s.name + ": strip without a right side");
        }
    }
    CylinderDecomposition out;
    out.direction = Direction(1, 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& [start, next] : right) {
        if (seen.count(start)) continue;
        Cylinder c;
        auto cur = start;
        std::size_t p0 = static_cast<std::size_t>(start.first);
        std::size_t k0 = static_cast<std::size_t>(start.second);
        c.height = levels[p0][k0 + 1] - levels[p0][k0];
        while (!seen.count(cur)) {
            seen.insert(cur);
            c.strips.push_back(cur);
            std::size_t p = static_cast<std::size_t>(cur.first), k = static_cast<std::size_t>(cur.second);
            Field mid = (levels[p][k] + levels[p][k + 1]) / 2;
            auto [l, r] = span_at(s.polygons[p].vertices, mid);
            c.width += r - l;
            cur = right.at(cur);
        }
        if (cur != start) throw DomainError(s.name + ": strip chain is not a cycle");
        c.area = c.width * c.height;
        c.mu = c.width / c.height;
        out.cylinders.push_back(std::move(c));
    }
    return out;
}

}  // namespace detail

/// Cylinders of a periodic direction. Directions other than horizontal are rotated onto the x-axis by
/// [[x, y], [-y, x]]; widths and heights are then those of the rotated copy (scale_sq = |d|²).
inline CylinderDecomposition cylinder_decomposition(const Surface& s, const Direction& d, int max_rounds = 64) {
    const Vec2& v = d.vec();
    Mat2 rot{v.x, v.y, -v.y, v.x};
    CylinderDecomposition out;
    if (v.y.is_zero() && v.x.sign() > 0) {
        out = detail::horizontal_cylinders(s, max_rounds);
    } else {
        out = detail::horizontal_cylinders(transform_surface(rot, s), max_rounds);
        out.scale_sq = dot(v, v);
    }
    out.direction = d;
    return out;
}

}  // namespace veech
