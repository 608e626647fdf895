#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "veech/core/error.hpp"
#include "veech/exact/linalg.hpp"

namespace veech {

/// A nonzero direction vector. Scaling by a positive factor gives the same oriented direction.
class Direction {
public:
    Direction() : v_{1, 0} {}
    Direction(Vec2 v) : v_(std::move(v)) {
        if (v_.is_zero()) throw DomainError("zero direction vector");
    }
    Direction(Field x, Field y) : Direction(Vec2{std::move(x), std::move(y)}) {}

    const Vec2& vec() const { return v_; }
    const Field& x() const { return v_.x; }
    const Field& y() const { return v_.y; }

    /// cot θ = x / y, absent for horizontal directions.
    std::optional<Field> cot() const {
        if (v_.y.is_zero()) return std::nullopt;
        return v_.x / v_.y;
    }

    bool same_oriented(const Direction& o) const { return cross(v_, o.v_).is_zero() && dot(v_, o.v_).sign() > 0; }
    bool same_line(const Direction& o) const { return cross(v_, o.v_).is_zero(); }

    /// Representative with θ in [0, π).
    Direction projective() const {
        int sy = v_.y.sign();
        if (sy < 0 || (sy == 0 && v_.x.sign() < 0)) return Direction(-v_);
        return *this;
    }

    /// Float shadow of the angle in (-π, π].
    double angle() const { return std::atan2(v_.y.to_double(), v_.x.to_double()); }

    Direction transformed(const Mat2& m) const { return Direction(m * v_); }

private:
    Vec2 v_;
};

inline Direction operator*(const Mat2& m, const Direction& d) { return d.transformed(m); }

enum class SectorScheme { Hexagon, Square, BouwMoller };

struct SectorResult {
    std::vector<int> sectors;
    bool boundary = false;

    /// The unique sector; throws on a boundary direction.
    int index() const {
        if (boundary) throw BoundaryDirection(sectors);
        return sectors.front();
    }
};

namespace detail {

// Boundary rays b_0, ..., b_n in counterclockwise order.
inline const std::vector<Vec2>& sector_rays(SectorScheme s) {
    static const std::vector<Vec2> hex = [] {
        Field r3 = Field::sqrt3();
        return std::vector<Vec2>{{1, 0}, {r3, 1}, {1, r3}, {0, 1}, {-1, r3}, {-r3, 1}, {-1, 0}};
    }();
    static const std::vector<Vec2> sq = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}};
    static const std::vector<Vec2> bm = [] {
        Field t1 = Field::sqrt2() - 1, t3 = Field::sqrt2() + 1;
        std::vector<Vec2> half{{1, 0}, {1, t1}, {1, 1}, {1, t3}, {0, 1}, {-1, t3}, {-1, 1}, {-1, t1}};
        std::vector<Vec2> all = half;
        for (const auto& v : half) all.push_back(-v);
        all.push_back({1, 0});
        return all;
    }();
    switch (s) {
        case SectorScheme::Hexagon: return hex;
        case SectorScheme::Square: return sq;
        default: return bm;
    }
}

inline bool projective_scheme(SectorScheme s) { return s != SectorScheme::BouwMoller; }

inline int cone_to_sector(SectorScheme s, int cone) {
    if (s == SectorScheme::BouwMoller) return ((7 - cone) % 16 + 16) % 16;
    return cone;
}

}  // namespace detail

inline int sector_count(SectorScheme s) {
    switch (s) {
        case SectorScheme::Hexagon: return 6;
        case SectorScheme::Square: return 4;
        default: return 16;
    }
}

/// Sector classification; boundary directions report both adjacent sectors.
inline SectorResult sector_of(const Direction& dir, SectorScheme scheme) {
    const auto& rays = detail::sector_rays(scheme);
    const int n = static_cast<int>(rays.size()) - 1;
    Direction d = detail::projective_scheme(scheme) ? dir.projective() : dir;
    const Vec2& v = d.vec();

    SectorResult out;
    for (int k = 0; k <= n; ++k) {
        if (cross(rays[static_cast<std::size_t>(k)], v).is_zero() && dot(rays[static_cast<std::size_t>(k)], v).sign() > 0) {
            out.boundary = true;
            int lo = (k - 1 + n) % n, hi = k % n;
            out.sectors = {detail::cone_to_sector(scheme, lo), detail::cone_to_sector(scheme, hi)};
            std::sort(out.sectors.begin(), out.sectors.end());
            return out;
        }
    }
    for (int k = 0; k < n; ++k) {
        const Vec2& lo = rays[static_cast<std::size_t>(k)];
        const Vec2& hi = rays[static_cast<std::size_t>(k + 1)];
        if (cross(lo, v).sign() > 0 && cross(v, hi).sign() > 0) {
            out.sectors = {detail::cone_to_sector(scheme, k)};
            return out;
        }
    }
    throw DomainError("direction not classified: " + v.to_string());
}

/// Closed sector membership, boundaries included.
inline bool in_sector(const Direction& d, SectorScheme scheme, int i) {
    auto r = sector_of(d, scheme);
    return std::find(r.sectors.begin(), r.sectors.end(), i) != r.sectors.end();
}

}  // namespace veech
