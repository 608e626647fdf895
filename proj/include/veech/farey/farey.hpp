#pragma once

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "veech/coding/derivation.hpp"
#include "veech/exact/direction.hpp"

namespace veech {

/// Closed interval of directions in [0, π], held as endpoint vectors in the closed upper half plane.
/// A horizontal lower end is (1, 0); a horizontal upper end is (-1, 0).
struct DirectionInterval {
    Vec2 lo, hi;

    bool contains(const Direction& d) const {
        Vec2 v = d.projective().vec();
        return cross(lo, v).sign() >= 0 && cross(v, hi).sign() >= 0;
    }
    bool contains(const DirectionInterval& o) const {
        return cross(lo, o.lo).sign() >= 0 && cross(o.hi, hi).sign() >= 0 && cross(lo, o.hi).sign() >= 0 &&
               cross(o.lo, hi).sign() >= 0;
    }
    double length() const {
        return std::atan2(hi.y.to_double(), hi.x.to_double()) - std::atan2(lo.y.to_double(), lo.x.to_double());
    }
};

struct FareyExpansionPrefix {
    std::vector<int> entries;
    std::vector<DirectionInterval> intervals;  // intervals[j] = Σ[s0; ...; sj]

    const DirectionInterval& interval() const { return intervals.back(); }
};

/// Sector family, branch matrices γνᵢ, and the output convention of a Farey map.
class FareyScheme {
public:
    static const FareyScheme& hexagon() {
        static const FareyScheme s = [] {
            FareyScheme f;
            f.scheme_ = SectorScheme::Hexagon;
            for (int i = 0; i < 6; ++i) f.branch_.push_back(hexagon::gamma() * hexagon::nu(i));
            return f;
        }();
        return s;
    }

    /// Square sandwich map: branches γ'νᵢ with γ' = [[-1, 2], [0, 1]].
    static const FareyScheme& square() {
        static const FareyScheme s = [] {
            FareyScheme f;
            f.scheme_ = SectorScheme::Square;
            Mat2 g{-1, 2, 0, 1};
            for (const auto& n : square_nu()) f.branch_.push_back(g * n);
            return f;
        }();
        return s;
    }

    static const std::vector<Mat2>& square_nu() {
        static const std::vector<Mat2> nu = {Mat2{1, 0, 0, 1}, Mat2{0, 1, 1, 0}, Mat2{0, 1, -1, 0}, Mat2{-1, 0, 0, 1}};
        return nu;
    }

    SectorScheme scheme() const { return scheme_; }
    int sectors() const { return static_cast<int>(branch_.size()); }
    const Mat2& branch(int i) const { return branch_.at(static_cast<std::size_t>(i)); }

    /// Sector i as an interval.
    DirectionInterval sector(int i) const {
        const auto& rays = detail::sector_rays(scheme_);
        DirectionInterval I{rays[static_cast<std::size_t>(i)], rays[static_cast<std::size_t>(i + 1)]};
        return I;
    }

    /// Image of d under its branch, in (0, π].
    Direction map(const Direction& d) const {
        int i = sector_of(d, scheme_).index();
        return normalize_upper(branch(i) * d.projective());
    }

    /// Image of d under branch i without checking the sector.
    Direction map_branch(int i, const Direction& d) const { return normalize_upper(branch(i) * d.projective()); }

    /// Preimage of an interval of directions under branch i, with horizontal ends resolved inside sector i.
    DirectionInterval pull_back(int i, const DirectionInterval& I) const {
        Mat2 inv = branch(i).inverse();
        Vec2 a = upper(inv * I.lo), b = upper(inv * I.hi);
        DirectionInterval sec = sector(i);
        bool ha = a.y.is_zero(), hb = b.y.is_zero();
        if (ha && hb) throw DomainError("degenerate interval");
        if (ha || hb) {
            Vec2 other = ha ? b : a;
            if (sec.lo.y.is_zero()) return {sec.lo, other};
            if (sec.hi.y.is_zero()) return {other, sec.hi};
            throw DomainError("horizontal endpoint inside a non-horizontal sector");
        }
        if (cross(a, b).sign() < 0) std::swap(a, b);
        return {a, b};
    }

private:
    static Vec2 upper(const Vec2& v) {
        int sy = v.y.sign();
        if (sy < 0 || (sy == 0 && v.x.sign() < 0)) return -v;
        return v;
    }
    static Direction normalize_upper(const Direction& d) {
        Vec2 v = upper(d.vec());
        if (v.y.is_zero()) v = -v;  // horizontal images read as π
        return Direction(v);
    }

    SectorScheme scheme_ = SectorScheme::Hexagon;
    std::vector<Mat2> branch_;
};

inline Direction farey_map(const Direction& d) { return FareyScheme::hexagon().map(d); }

/// Itinerary s0..sk of d and the nested intervals it determines.
inline FareyExpansionPrefix farey_expansion(const Direction& d, int depth, const FareyScheme& f = FareyScheme::hexagon()) {
    FareyExpansionPrefix out;
    Direction cur = d.projective();
    for (int k = 0; k <= depth; ++k) {
        auto r = sector_of(cur, f.scheme());
        if (r.boundary) throw BoundaryDirection(r.sectors, "iterate " + std::to_string(k) + " lies on a sector boundary");
        out.entries.push_back(r.sectors.front());
        if (k < depth) cur = f.map_branch(r.sectors.front(), cur);
    }
    for (int j = 0; j <= depth; ++j) {
        DirectionInterval I = f.sector(out.entries[static_cast<std::size_t>(j)]);
        for (int m = j - 1; m >= 0; --m) I = f.pull_back(out.entries[static_cast<std::size_t>(m)], I);
        out.intervals.push_back(I);
    }
    return out;
}

/// Interval pinned down by an itinerary.
inline DirectionInterval farey_interval(const std::vector<int>& entries, const FareyScheme& f = FareyScheme::hexagon()) {
    if (entries.empty()) throw DomainError("empty itinerary");
    DirectionInterval I = f.sector(entries.back());
    for (std::size_t m = entries.size() - 1; m-- > 0;) I = f.pull_back(entries[m], I);
    return I;
}

struct Recognition {
    FareyExpansionPrefix prefix;
    int depth = -1;      // last round with a unique admissible diagram
    std::string stop;    // why the rounds ended early, empty when the requested depth was reached
    std::vector<int> candidates;  // diagrams still possible at the first undecided round
};

namespace detail {

struct RecognitionLeaf {
    std::vector<int> entries;
    std::string stop;  // empty when the leaf reached the requested depth
};

// Every itinerary consistent with w: a branch dies only when some derived word fits no diagram.
// False once more than cap leaves were produced.
inline bool recognition_leaves(const Word& cur, int k, int depth, std::vector<int>& path, std::vector<RecognitionLeaf>& out,
                               std::size_t cap) {
    if (out.size() >= cap) return false;
    if (cur.size() < 2) {
        out.push_back({path, "window exhausted at round " + std::to_string(k)});
        return true;
    }
    for (int i : admissible_diagrams(cur, hexagon::diagrams())) {
        path.push_back(i);
        Word n = hexagon::pi(i)(cur);
        if (k == depth)
            out.push_back({path, {}});
        else if (n.size() < 3)
            out.push_back({path, "window exhausted at round " + std::to_string(k + 1)});
        else if (!recognition_leaves(derive_sandwich(n).letters, k + 1, depth, path, out, cap))
            return false;
        path.pop_back();
    }
    return true;
}

}  // namespace detail

/// Longest itinerary prefix shared by every branch of normalize+derive rounds that survives to the
/// end of the window. Rounds where several diagrams fit are explored; a branch is dropped when a
/// later derived word fits no diagram.
inline Recognition recognize_prefix(const Word& w, int depth) {
    Recognition r;
    std::vector<detail::RecognitionLeaf> leaves;
    std::vector<int> path;
    if (!detail::recognition_leaves(w, 0, depth, path, leaves, 1 << 12)) {
        leaves.clear();
        r.stop = "too many consistent itineraries";
    }
    if (leaves.empty() && r.stop.empty()) r.stop = "no admissible diagram at round 0";
    if (!leaves.empty()) {
        std::size_t k = 0;
        for (;; ++k) {
            bool shared = true;
            for (const auto& l : leaves)
                shared = shared && k < l.entries.size() && l.entries[k] == leaves.front().entries[k];
            if (!shared) break;
        }
        r.prefix.entries.assign(leaves.front().entries.begin(), leaves.front().entries.begin() + static_cast<long>(k));
        r.depth = static_cast<int>(k) - 1;
        if (r.depth < depth) {
            std::set<int> next;
            bool exhausted = false;
            for (const auto& l : leaves) {
                if (k < l.entries.size()) next.insert(l.entries[k]);
                if (l.entries.size() <= k) exhausted = true;
            }
            if (next.size() > 1)
                r.stop = "several consistent diagrams at round " + std::to_string(k);
            else
                r.stop = exhausted ? "window exhausted at round " + std::to_string(k) : leaves.front().stop;
            r.candidates.assign(next.begin(), next.end());
        }
    }
    for (std::size_t j = 1; j <= r.prefix.entries.size(); ++j)
        r.prefix.intervals.push_back(
            farey_interval(std::vector<int>(r.prefix.entries.begin(), r.prefix.entries.begin() + static_cast<long>(j))));
    return r;
}

/// Full-depth recognition. Throws Ambiguous or WindowTooShort when a round cannot be decided.
inline FareyExpansionPrefix recognize_direction(const Word& w, int depth) {
    Recognition r = recognize_prefix(w, depth);
    if (r.depth == depth) return r.prefix;
    if (r.candidates.size() > 1) throw Ambiguous(r.candidates);
    throw WindowTooShort(r.stop);
}

struct GaussCheck {
    int n = 0;
    bool matrix_identity = false;
    int points = 0;
    int agree = 0;
    bool domains = true;
    std::vector<std::string> failures;

    bool ok() const { return matrix_identity && agree == points && domains && points > 0; }
};

/// Gauss branch G_n(u) = 1/u - n against F1∘F0^(n-1) on slopes u in [1/(n+1), 1/n],
/// where F0(u) = u/(1-u) and F1(u) = (1-u)/u act on slopes through σ⁻¹ and ν1σ⁻¹.
inline GaussCheck gauss_acceleration_check(int n, const std::vector<Rational>& slopes) {
    GaussCheck r;
    r.n = n;
    Mat2 sinv{1, -1, 0, 1};
    Mat2 f0 = sinv, f1 = Mat2{0, 1, 1, 0} * sinv;
    Mat2 comp = f1;
    for (int k = 1; k < n; ++k) comp = comp * f0;
    Mat2 gn{0, 1, 1, Field(-n)};
    r.matrix_identity = comp == gn;
    Rational lo(1, n + 1), hi(1, n);
    lo.canonicalize();
    hi.canonicalize();
    for (auto u : slopes) {
        u.canonicalize();
        if (u < lo || u > hi) continue;
        ++r.points;
        Vec2 v{Field(1), Field(u)};
        for (int k = 1; k < n; ++k) {
            Field s = v.y / v.x;
            if (s > Field::ratio(1, 2)) r.domains = false;
            v = f0 * v;
        }
        Field s = v.y / v.x;
        if (n > 1 && s < Field::ratio(1, 2)) r.domains = false;
        v = f1 * v;
        Field lhs = v.y / v.x;
        Field rhs = Field(Rational(1) / u) - Field(n);
        if (lhs == rhs) ++r.agree;
        else r.failures.push_back(u.get_str());
    }
    return r;
}

}  // namespace veech
