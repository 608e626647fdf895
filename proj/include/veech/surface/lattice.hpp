#pragma once

#include <optional>

#include "veech/surface/presentation.hpp"

namespace veech {

struct LatticeBasis {
    Vec2 u, v;
};

/// Basis of the translation lattice of a one-polygon torus presentation.
inline LatticeBasis torus_lattice(const Surface& s) {
    if (s.polygons.size() != 1) throw DomainError(s.name + ": not a single-polygon torus");
    const Field& area = s.area();
    for (std::size_t i = 0; i < s.sides.size(); ++i)
        for (std::size_t j = i + 1; j < s.sides.size(); ++j) {
            const Vec2& a = s.sides[i].translation;
            const Vec2& b = s.sides[j].translation;
            Field det = cross(a, b);
            if (det == area) return {a, b};
            if (det == -area) return {b, a};
        }
    throw DomainError(s.name + ": pairing translations do not span a lattice of covolume equal to the area");
}

/// Representative of p modulo the lattice lying strictly inside the polygon.
inline Vec2 torus_reduce(const Surface& s, const Vec2& p) {
    LatticeBasis L = torus_lattice(s);
    const auto& verts = s.polygons.front().vertices;
    const Vec2& o = verts.front();
    Field det = cross(L.u, L.v);
    Vec2 q = p - o;
    // q = α u + β v
    Field alpha = cross(q, L.v) / det;
    Field beta = cross(L.u, q) / det;
    Field fa(Rational(alpha.floor())), fb(Rational(beta.floor()));
    Vec2 base = p - fa * L.u - fb * L.v;
    for (int r = 0; r <= 2; ++r)
        for (int i = -r; i <= r; ++i)
            for (int j = -r; j <= r; ++j) {
                if (std::max(std::abs(i), std::abs(j)) != r) continue;
                Vec2 c = base + Field(i) * L.u + Field(j) * L.v;
                if (strictly_inside(verts, c)) return c;
            }
    throw DomainError(s.name + ": point " + p.to_string() + " reduces onto a side");
}

}  // namespace veech
