#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "veech/exact/direction.hpp"
#include "veech/surface/presentation.hpp"

namespace veech {

/// Nearest fraction with the given denominator.
inline Rational approx(double v, long den = 1000000) {
    Rational q(std::lround(v * static_cast<double>(den)), den);
    q.canonicalize();
    return q;
}

/// Seeded source of exact trajectories.
///
/// Slopes are taken in Q(r)\Q for a radical r outside the trace field of the surface and start points are
/// rational, so sampled lines are never periodic and never meet a vertex.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// Direction with angle close to a uniform draw in (lo, hi), of the form (x, q·r) with x, q rational.
    Direction direction(double lo, double hi, const Field& radical) {
        double rd = radical.to_double();
        for (;;) {
            double th = uniform(lo, hi);
            Rational x = approx(std::cos(th)), q = approx(std::sin(th) / rd);
            if (x == 0 || q == 0) continue;
            return Direction(Field(x), Field(q) * radical);
        }
    }

    /// Direction inside sector i of a scheme.
    Direction direction_in(SectorScheme s, int i, const Field& radical) {
        int n = sector_count(s);
        double width = (detail::projective_scheme(s) ? M_PI : 2 * M_PI) / n;
        double lo = i * width, hi = (i + 1) * width;
        if (s == SectorScheme::BouwMoller) {  // Σᵢ = [π - (i+1)π/8, π - iπ/8]
            lo = M_PI - (i + 1) * width;
            hi = M_PI - i * width;
        }
        for (;;) {
            Direction d = direction(lo, hi, radical);
            auto r = sector_of(d, s);
            if (!r.boundary && r.index() == i) return d;
        }
    }

    /// Rational point strictly inside a convex polygon.
    Vec2 point_in(const std::vector<Vec2>& poly, long den = 1000) {
        double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
        for (const auto& v : poly) {
            x0 = std::min(x0, v.x.to_double());
            x1 = std::max(x1, v.x.to_double());
            y0 = std::min(y0, v.y.to_double());
            y1 = std::max(y1, v.y.to_double());
        }
        for (;;) {
            Vec2 p{Field(approx(uniform(x0, x1), den)), Field(approx(uniform(y0, y1), den))};
            if (strictly_inside(poly, p)) return p;
        }
    }

    /// Rational start inside one polygon of s.
    Trajectory trajectory(const Surface& s, const Direction& d, int polygon = 0) {
        return {point_in(s.polygons.at(static_cast<std::size_t>(polygon)).vertices), d};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace veech
