#pragma once

#include <string>
#include <utility>
#include <vector>

#include "veech/surface/presentation.hpp"

namespace veech {

struct TraceResult {
    std::string word;                            // labels of the recorded crossings
    std::vector<int> sides;                      // side id of every recorded crossing
    std::vector<std::pair<double, double>> path; // float polyline, one entry per segment endpoint
};

namespace detail {

// f(v) = cross(d, v) + C is positive left of the line and negative right of it.
class LineWalker {
public:
    LineWalker(const Surface& s, const Vec2& start, const Direction& dir, int polygon)
        : s_(s), d_(dir.vec()), poly_(polygon) {
        if (poly_ < 0) poly_ = locate(s, start);
        if (!strictly_inside(s.polygons[static_cast<std::size_t>(poly_)].vertices, start))
            throw DomainError("start point " + start.to_string() + " is not interior to polygon " + std::to_string(poly_));
        c_ = -cross(d_, start);
        cd_.resize(s.polygons.size());
        for (std::size_t p = 0; p < s.polygons.size(); ++p)
            for (const auto& v : s.polygons[p].vertices) cd_[p].push_back(cross(d_, v));
        ct_.reserve(s.sides.size());
        for (const auto& side : s.sides) ct_.push_back(cross(d_, side.translation));
    }

    int polygon() const { return poly_; }

    struct Exit {
        int edge;
        Field before, after;  // f at the two endpoints of the exit edge
    };

    /// Exit edge of the current chord; `crossing` names the crossing in a VertexHit.
    Exit exit_edge(int crossing) const {
        const auto& f = cd_[static_cast<std::size_t>(poly_)];
        const std::size_t n = f.size();
        std::vector<int> sg(n);
        std::vector<Field> val(n);
        for (std::size_t k = 0; k < n; ++k) {
            val[k] = f[k] + c_;
            sg[k] = val[k].sign();
        }
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t j = (k + 1) % n;
            if (sg[k] < 0 && sg[j] >= 0) {
                if (sg[j] == 0) throw VertexHit(crossing);
                return {static_cast<int>(k), val[k], val[j]};
            }
        }
        throw DomainError("line misses polygon " + std::to_string(poly_));
    }

    /// Moves through side `edge` of the current polygon; returns the side id.
    int cross_edge(int edge) {
        const auto& P = s_.polygons[static_cast<std::size_t>(poly_)];
        int sid = P.sides[static_cast<std::size_t>(edge)];
        const Side& sd = s_.sides[static_cast<std::size_t>(sid)];
        c_ -= ct_[static_cast<std::size_t>(sid)];
        poly_ = s_.sides[static_cast<std::size_t>(sd.partner)].polygon;
        return sid;
    }

private:
    const Surface& s_;
    Vec2 d_;
    int poly_;
    Field c_;
    std::vector<std::vector<Field>> cd_;
    std::vector<Field> ct_;
};

}  // namespace detail

/// Cutting sequence of the first n labelled crossings. Silent sides are crossed without being recorded.
inline TraceResult trace_detailed(const Surface& s, const Trajectory& t, int n, bool with_path = false) {
    if (n < 0) throw DomainError("negative crossing count");
    detail::LineWalker walk(s, t.start, t.direction, t.polygon);
    TraceResult out;
    double px = t.start.x.to_double(), py = t.start.y.to_double();
    if (with_path) out.path.emplace_back(px, py);
    int recorded = 0, crossings = 0;
    // Silent crossings are bounded by the number of internal sides between two labelled ones.
    const int silent_budget = static_cast<int>(s.sides.size()) + 1;
    int silent_run = 0;
    while (recorded < n) {
        auto ex = walk.exit_edge(crossings);
        const auto& P = s.polygons[static_cast<std::size_t>(walk.polygon())];
        if (with_path) {
            double fa = ex.before.to_double(), fb = ex.after.to_double();
            double lam = fa / (fa - fb);
            const Vec2& a = P.vertex(static_cast<std::size_t>(ex.edge));
            const Vec2& b = P.vertex(static_cast<std::size_t>(ex.edge) + 1);
            double ax = a.x.to_double(), ay = a.y.to_double();
            double qx = ax + lam * (b.x.to_double() - ax), qy = ay + lam * (b.y.to_double() - ay);
            out.path.emplace_back(qx, qy);
        }
        int sid = walk.cross_edge(ex.edge);
        const Side& sd = s.sides[static_cast<std::size_t>(sid)];
        ++crossings;
        if (with_path) {
            auto& last = out.path.back();
            out.path.emplace_back(last.first + sd.translation.x.to_double(), last.second + sd.translation.y.to_double());
        }
        if (sd.label == kSilent) {
            if (++silent_run > silent_budget) throw DomainError("trajectory never leaves the silent sides");
            continue;
        }
        silent_run = 0;
        out.word.push_back(sd.label);
        out.sides.push_back(sid);
        ++recorded;
    }
    return out;
}

inline std::string trace(const Surface& s, const Trajectory& t, int n) { return trace_detailed(s, t, n).word; }

/// Endpoint of the straight path of displacement v from p, following the pairings.
struct FlowResult {
    int polygon;
    Vec2 point;
};

inline FlowResult flow(const Surface& s, const Vec2& p, const Vec2& v, int polygon = -1) {
    if (v.is_zero()) return {polygon < 0 ? locate(s, p) : polygon, p};
    Direction d(v);
    detail::LineWalker walk(s, p, d, polygon);
    Vec2 x = p;
    Field left = 1;  // remaining fraction of v
    for (int guard = 0; guard < 100000; ++guard) {
        const auto& P = s.polygons[static_cast<std::size_t>(walk.polygon())];
        auto ex = walk.exit_edge(guard);
        const Vec2& a = P.vertex(static_cast<std::size_t>(ex.edge));
        const Vec2& b = P.vertex(static_cast<std::size_t>(ex.edge) + 1);
        // x + t v on segment ab: t = cross(a - x, b - a) / cross(v, b - a)
        Vec2 e = b - a;
        Field t = cross(a - x, e) / cross(v, e);
        if (t > left) return {walk.polygon(), x + left * v};
        if (t == left) throw DomainError("flow ends on a side");
        x = x + t * v;
        left -= t;
        int sid = walk.cross_edge(ex.edge);
        x += s.sides[static_cast<std::size_t>(sid)].translation;
    }
    throw DomainError("flow did not terminate");
}

}  // namespace veech
