#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veech/core/error.hpp"
#include "veech/exact/direction.hpp"

namespace veech {

/// Label of an internal edge that is crossed silently by the tracer.
inline constexpr char kSilent = '\0';

struct Side {
    int polygon = 0;
    int index = 0;  // edge from vertex index to index + 1
    char label = kSilent;
    int partner = -1;
    Vec2 translation;  // carries this side onto its partner
};

struct Polygon {
    std::vector<Vec2> vertices;  // counterclockwise
    std::vector<int> sides;      // global side id of each edge

    std::size_t size() const { return vertices.size(); }
    const Vec2& vertex(std::size_t k) const { return vertices[k % vertices.size()]; }
};

/// Convex polygons with sides identified by translations.
class Surface {
public:
    std::string name;
    std::vector<Polygon> polygons;
    std::vector<Side> sides;

    const Field& area() const { return area_; }
    const std::string& alphabet() const { return alphabet_; }

    const Side& side(int polygon, int index) const {
        const Polygon& p = polygons[static_cast<std::size_t>(polygon)];
        return sides[static_cast<std::size_t>(p.sides[static_cast<std::size_t>(index) % p.size()])];
    }

    /// Side ids carrying `label`.
    std::vector<int> sides_labeled(char label) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < sides.size(); ++i)
            if (sides[i].label == label) out.push_back(static_cast<int>(i));
        return out;
    }

private:
    friend class SurfaceBuilder;
    Field area_;
    std::string alphabet_;
};

inline Field polygon_area(const std::vector<Vec2>& verts) {
    Field twice;
    for (std::size_t k = 0; k < verts.size(); ++k) twice += cross(verts[k], verts[(k + 1) % verts.size()]);
    return twice / 2;
}

/// Strict interior test for a counterclockwise convex polygon.
inline bool strictly_inside(const std::vector<Vec2>& verts, const Vec2& p) {
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Vec2& a = verts[k];
        const Vec2& b = verts[(k + 1) % verts.size()];
        if (cross(b - a, p - a).sign() <= 0) return false;
    }
    return true;
}

inline bool inside_closed(const std::vector<Vec2>& verts, const Vec2& p) {
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Vec2& a = verts[k];
        const Vec2& b = verts[(k + 1) % verts.size()];
        if (cross(b - a, p - a).sign() < 0) return false;
    }
    return true;
}

inline bool is_strictly_convex_ccw(const std::vector<Vec2>& verts) {
    if (verts.size() < 3) return false;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Vec2& a = verts[k];
        const Vec2& b = verts[(k + 1) % verts.size()];
        const Vec2& c = verts[(k + 2) % verts.size()];
        if (cross(b - a, c - b).sign() <= 0) return false;
    }
    return true;
}

class SurfaceBuilder {
public:
    explicit SurfaceBuilder(std::string name) { s_.name = std::move(name); }

    int add_polygon(std::vector<Vec2> verts) {
        Polygon p;
        p.vertices = std::move(verts);
        int pid = static_cast<int>(s_.polygons.size());
        for (std::size_t k = 0; k < p.vertices.size(); ++k) {
            Side side;
            side.polygon = pid;
            side.index = static_cast<int>(k);
            p.sides.push_back(static_cast<int>(s_.sides.size()));
            s_.sides.push_back(side);
        }
        s_.polygons.push_back(std::move(p));
        return pid;
    }

    /// Identifies edge i of polygon p with edge j of polygon q (opposite orientation).
    SurfaceBuilder& glue(int p, int i, int q, int j, char label) {
        int a = id(p, i), b = id(q, j);
        const auto& pa = s_.polygons[static_cast<std::size_t>(p)];
        const auto& qb = s_.polygons[static_cast<std::size_t>(q)];
        Vec2 t = qb.vertex(static_cast<std::size_t>(j) + 1) - pa.vertex(static_cast<std::size_t>(i));
        auto& sa = s_.sides[static_cast<std::size_t>(a)];
        auto& sb = s_.sides[static_cast<std::size_t>(b)];
        if (sa.partner != -1 || sb.partner != -1) throw InvalidSurface("side glued twice");
        sa.partner = b;
        sb.partner = a;
        sa.translation = t;
        sb.translation = -t;
        sa.label = sb.label = label;
        return *this;
    }

    Surface build() {
        validate();
        Field area;
        std::set<char> letters;
        for (const auto& p : s_.polygons) area += polygon_area(p.vertices);
        for (const auto& side : s_.sides)
            if (side.label != kSilent) letters.insert(side.label);
        s_.area_ = area;
        s_.alphabet_.assign(letters.begin(), letters.end());
        return s_;
    }

private:
    int id(int p, int i) const {
        const auto& poly = s_.polygons.at(static_cast<std::size_t>(p));
        return poly.sides.at(static_cast<std::size_t>(i));
    }

    void validate() const {
        for (std::size_t pi = 0; pi < s_.polygons.size(); ++pi)
            if (!is_strictly_convex_ccw(s_.polygons[pi].vertices))
                throw InvalidSurface(s_.name + ": polygon " + std::to_string(pi) + " is not convex counterclockwise");
        for (std::size_t k = 0; k < s_.sides.size(); ++k) {
            const Side& sd = s_.sides[k];
            if (sd.partner < 0) throw InvalidSurface(s_.name + ": unpaired side " + describe(sd));
            const Side& pt = s_.sides[static_cast<std::size_t>(sd.partner)];
            if (pt.partner != static_cast<int>(k)) throw InvalidSurface(s_.name + ": pairing is not an involution");
            const auto& P = s_.polygons[static_cast<std::size_t>(sd.polygon)];
            const auto& Q = s_.polygons[static_cast<std::size_t>(pt.polygon)];
            Vec2 a = P.vertex(static_cast<std::size_t>(sd.index)), b = P.vertex(static_cast<std::size_t>(sd.index) + 1);
            Vec2 c = Q.vertex(static_cast<std::size_t>(pt.index)), d = Q.vertex(static_cast<std::size_t>(pt.index) + 1);
            if (a + sd.translation != d || b + sd.translation != c)
                throw InvalidSurface(s_.name + ": translation does not carry " + describe(sd) + " onto its partner");
            if (sd.label != pt.label) throw InvalidSurface(s_.name + ": label differs across a pair");
        }
    }

    static std::string describe(const Side& sd) {
        return "(polygon " + std::to_string(sd.polygon) + ", edge " + std::to_string(sd.index) + ")";
    }

    Surface s_;
};

/// Pairing invariants: parallel, equal length, opposite orientation, consistent labels.
inline bool pairings_valid(const Surface& s) {
    for (std::size_t k = 0; k < s.sides.size(); ++k) {
        const Side& sd = s.sides[k];
        if (sd.partner < 0) return false;
        const Side& pt = s.sides[static_cast<std::size_t>(sd.partner)];
        const auto& P = s.polygons[static_cast<std::size_t>(sd.polygon)];
        const auto& Q = s.polygons[static_cast<std::size_t>(pt.polygon)];
        Vec2 e1 = P.vertex(static_cast<std::size_t>(sd.index) + 1) - P.vertex(static_cast<std::size_t>(sd.index));
        Vec2 e2 = Q.vertex(static_cast<std::size_t>(pt.index) + 1) - Q.vertex(static_cast<std::size_t>(pt.index));
        if (e1 + e2 != Vec2{0, 0}) return false;
        if (P.vertex(static_cast<std::size_t>(sd.index)) + sd.translation != Q.vertex(static_cast<std::size_t>(pt.index) + 1))
            return false;
        if (sd.label != pt.label) return false;
    }
    return true;
}

/// Index of the polygon containing p in its interior.
inline int locate(const Surface& s, const Vec2& p) {
    for (std::size_t i = 0; i < s.polygons.size(); ++i)
        if (strictly_inside(s.polygons[i].vertices, p)) return static_cast<int>(i);
    throw DomainError(s.name + ": point " + p.to_string() + " is not interior to any polygon");
}

struct Trajectory {
    Vec2 start;
    Direction direction;
    int polygon = -1;  // located on demand when negative
};

/// Applies a linear map to every polygon and translation; labels are kept.
inline Surface transform_surface(const Mat2& m, const Surface& s) {
    if (m.det().is_zero()) throw SingularMatrix();
    bool flip = m.det().sign() < 0;
    SurfaceBuilder b(s.name);
    for (const auto& p : s.polygons) {
        std::vector<Vec2> v;
        for (const auto& x : p.vertices) v.push_back(m * x);
        if (flip) {
            std::reverse(v.begin(), v.end());
            std::rotate(v.begin(), v.end() - 1, v.end());
        }
        b.add_polygon(std::move(v));
    }
    // After the reversal above, edge k (v_k -> v_{k+1}) becomes edge n-1-k.
    auto edge = [&](const Side& sd) {
        int n = static_cast<int>(s.polygons[static_cast<std::size_t>(sd.polygon)].size());
        return flip ? n - 1 - sd.index : sd.index;
    };
    std::vector<bool> done(s.sides.size(), false);
    for (std::size_t k = 0; k < s.sides.size(); ++k) {
        if (done[k]) continue;
        const Side& sd = s.sides[k];
        const Side& pt = s.sides[static_cast<std::size_t>(sd.partner)];
        b.glue(sd.polygon, edge(sd), pt.polygon, edge(pt), sd.label);
        done[k] = done[static_cast<std::size_t>(sd.partner)] = true;
    }
    return b.build();
}

inline Surface transform_surface(const ScaledMatrix& m, const Surface& s) { return transform_surface(m.shape, s); }

}  // namespace veech
