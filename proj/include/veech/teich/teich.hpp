#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "veech/coding/central.hpp"
#include "veech/coding/derivation.hpp"
#include "veech/exact/direction.hpp"

namespace veech::teich {

/// Point of R ∪ {∞}. A direction line (x, y) sits at -y/x, so a matrix acts on the boundary through its
/// action on directions: z ↦ (dz - c)/(-bz + a).
struct BoundaryPoint {
    Field value;
    bool infinite = false;

    static BoundaryPoint of_line(const Vec2& v) {
        if (v.is_zero()) throw DomainError("zero vector has no boundary point");
        if (v.x.is_zero()) return {Field(0), true};
        return {-(v.y / v.x), false};
    }
    Vec2 line() const { return infinite ? Vec2{Field(0), Field(1)} : Vec2{Field(1), -value}; }

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
    /// Image in the unit disk under z ↦ (z - i)/(z + i).
    std::complex<double> disk() const {
        if (infinite) return {1, 0};
        std::complex<double> z(value.to_double(), 0);
        return (z - std::complex<double>(0, 1)) / (z + std::complex<double>(0, 1));
    }
};

/// x + iy with y > 0.
struct HyperbolicPoint {
    Field x, y;

    friend bool operator==(const HyperbolicPoint& a, const HyperbolicPoint& b) { return a.x == b.x && a.y == b.y; }
    std::string to_string() const { return x.to_string() + " + i*(" + y.to_string() + ")"; }
};

inline BoundaryPoint act(const Mat2& m, const BoundaryPoint& p) { return BoundaryPoint::of_line(m * p.line()); }

/// Same action on interior points, through z̄ when det m < 0.
inline HyperbolicPoint act(const Mat2& m, const HyperbolicPoint& z) {
    Field y = m.det().sign() < 0 ? -z.y : z.y;
    // (d w - c) / (-b w + a), w = x + iy
    Field nr = m.d * z.x - m.c, ni = m.d * y;
    Field dr = m.a - m.b * z.x, di = -(m.b * y);
    Field den = dr * dr + di * di;
    if (den.is_zero()) throw SingularMatrix();
    return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
}

class Geodesic {
public:
    Geodesic(BoundaryPoint p, BoundaryPoint q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_ == q_) throw DomainError("geodesic endpoints coincide");
        if (p_.infinite) std::swap(p_, q_);
    }

    const BoundaryPoint& p() const { return p_; }
    const BoundaryPoint& q() const { return q_; }

    bool vertical() const { return q_.infinite; }

    /// Highest point of a semicircle, or x + i on a vertical line.
    HyperbolicPoint apex() const {
        if (vertical()) return {p_.value, Field(1)};
        return {(p_.value + q_.value) / 2, (p_.value - q_.value).abs() / 2};
    }

    /// Side of an interior point: +1 or -1, 0 on the geodesic.
    int side(const HyperbolicPoint& z) const {
        if (vertical()) return (z.x - p_.value).sign();
        return -((z.x - p_.value) * (z.x - q_.value) + z.y * z.y).sign();
    }
    int side(const BoundaryPoint& e) const {
        if (e == p_ || e == q_) return 0;
        if (vertical()) return (e.value - p_.value).sign();
        if (e.infinite) return -1;
        return -((e.value - p_.value) * (e.value - q_.value)).sign();
    }

    /// True when the geodesic ray from z to e crosses this geodesic.
    bool separates(const HyperbolicPoint& z, const BoundaryPoint& e) const {
        int a = side(z), b = side(e);
        if (a == 0 || b == 0) throw DomainError("ray meets the geodesic at an endpoint or starts on it");
        return a != b;
    }

    friend bool operator==(const Geodesic& a, const Geodesic& b) {
        return (a.p_ == b.p_ && a.q_ == b.q_) || (a.p_ == b.q_ && a.q_ == b.p_);
    }

private:
    BoundaryPoint p_, q_;
};

inline Geodesic act(const Mat2& m, const Geodesic& g) { return {act(m, g.p()), act(m, g.q())}; }

inline const HyperbolicPoint& base_point() {
    static const HyperbolicPoint i{Field(0), Field(1)};
    return i;
}

struct RayEndpoint {
    BoundaryPoint point;           // -tan θ
    std::complex<double> disk;     // its image in the disk
    std::complex<double> expected; // e^{i(π - 2θ)}

    double error() const { return std::abs(disk - expected); }
};

/// Limit point of the Teichmüller ray of θ.
inline RayEndpoint ray_endpoint(const Direction& theta) {
    Direction d = theta.projective();
    if (d.y().is_zero()) throw DomainError("horizontal direction: the ray degenerates");
    if (d.x().is_zero()) throw DomainError("vertical direction: the ray ends at infinity");
    RayEndpoint r;
    r.point = BoundaryPoint::of_line(d.vec());
    r.disk = r.point.disk();
    r.expected = std::polar(1.0, M_PI - 2 * d.angle());
    return r;
}

/// g_t^θ = ρ⁻¹ g_t ρ with ρ the rotation by π/2 - θ and g_t = diag(e^{t/2}, e^{-t/2}), applied to i as
/// a Möbius map. Float shadow only.
inline std::complex<double> flow_shadow(double theta, double t) {
    double a = M_PI / 2 - theta, c = std::cos(a), s = std::sin(a);
    double e = std::exp(t / 2), f = std::exp(-t / 2);
    // ρ⁻¹ diag(e, f) ρ
    double m11 = c * c * e + s * s * f, m12 = c * s * (f - e);
    double m21 = c * s * (f - e), m22 = s * s * e + c * c * f;
    std::complex<double> i(0, 1);
    return (m11 * i + m12) / (m21 * i + m22);
}

/// Side i of the base ideal hexagon: the geodesic spanned by the sector Σᵢ.
inline Geodesic base_side(int i) {
    Mat2 ni = hexagon::nu(i).inverse();
    return {act(ni, BoundaryPoint::of_line({Field(1), Field(0)})), act(ni, BoundaryPoint::of_line({Field::sqrt3(), Field(1)}))};
}

/// γᵢ = νᵢ⁻¹γνᵢ, the reflection in side i.
inline Mat2 generator(int i) { return hexagon::nu(i).inverse() * hexagon::gamma() * hexagon::nu(i); }

/// Product of the generators named by a reduced address word.
inline Mat2 address_matrix(const std::vector<int>& word) {
    Mat2 g = Mat2::identity();
    for (int j : word) g = g * generator(j);
    return g;
}

struct ReflectionCheck {
    std::string name;
    Geodesic side;
    bool involution = false;
    bool reverses_orientation = false;
    bool fixes_endpoints = false;
    bool fixes_apex = false;

    bool ok() const { return involution && reverses_orientation && fixes_endpoints && fixes_apex; }
};

/// α, β, γ against the three sides of the fundamental triangle.
inline std::vector<ReflectionCheck> reflection_checks() {
    Field r3 = Field::sqrt3();
    BoundaryPoint zero{Field(0)}, inf{Field(0), true}, m{-(r3.inverse())}, p{r3};
    std::vector<std::pair<std::string, std::pair<Mat2, Geodesic>>> cases = {
        {"alpha", {hexagon::alpha(), Geodesic(zero, inf)}},
        {"beta", {hexagon::beta(), Geodesic(m, p)}},
        {"gamma", {hexagon::gamma(), Geodesic(zero, m)}},
    };
    std::vector<ReflectionCheck> out;
    for (const auto& [name, mg] : cases) {
        const auto& [M, g] = mg;
        ReflectionCheck c{name, g};
        c.involution = M * M == Mat2::identity();
        c.reverses_orientation = M.det() == Field(-1);
        c.fixes_endpoints = act(M, g.p()) == g.p() && act(M, g.q()) == g.q();
        c.fixes_apex = act(M, g.apex()) == g.apex();
        out.push_back(c);
    }
    return out;
}

struct TeichCuttingSequence {
    std::vector<int> labels;  // read relative to the entry side; this is the Farey itinerary
    std::vector<int> sides;   // side of the base hexagon crossed after pulling back, never repeats
    std::vector<std::vector<int>> addresses;  // addresses[k]: generators placing the k-th hexagon
};

/// Labels 0..depth of the sides crossed by the ray of θ.
inline TeichCuttingSequence teich_cutting_sequence(const Direction& theta, int depth) {
    if (depth < 0) throw DomainError("negative depth");
    TeichCuttingSequence out;
    Direction cur = theta.projective();
    for (int k = 0; k <= depth; ++k) {
        auto r = sector_of(cur, SectorScheme::Hexagon);
        if (r.boundary) throw BoundaryDirection(r.sectors, "ray ends at a vertex of the tessellation (level " + std::to_string(k) + ")");
        int j = r.index();
        if (k == 0) {
            out.labels.push_back(j);
        } else {
            auto e = sector_of(hexagon::nu(out.sides.back()) * cur, SectorScheme::Hexagon);
            if (e.boundary) throw BoundaryDirection(e.sectors, "ray ends at a vertex of the tessellation (level " + std::to_string(k) + ")");
            out.labels.push_back(e.index());
        }
        out.addresses.push_back(out.sides);
        out.sides.push_back(j);
        cur = (generator(j) * cur).projective();
    }
    return out;
}

struct CrossingReport {
    TeichCuttingSequence sequence;
    std::vector<std::vector<int>> crossed;  // sides of the k-th hexagon met by the ray, in base labels
    std::vector<std::string> diffs;

    bool ok() const { return diffs.empty(); }
};

namespace detail {

inline std::string set_string(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace detail

/// Checks the combinatorial labels against exact half-plane tests on the ray from i to -tan θ.
inline CrossingReport geometric_crossing_check(const Direction& theta, int levels = 3) {
    CrossingReport r;
    r.sequence = teich_cutting_sequence(theta, levels);
    BoundaryPoint P = ray_endpoint(theta).point;
    const HyperbolicPoint& o = base_point();
    for (int k = 0; k <= levels; ++k) {
        const auto& addr = r.sequence.addresses[static_cast<std::size_t>(k)];
        Mat2 g = address_matrix(addr);
        std::vector<int> met, entry_met;
        Mat2 h = k > 0 ? g * hexagon::nu(addr.back()).inverse() : g;
        for (int m = 0; m < hexagon::kSectors; ++m) {
            if (act(g, base_side(m)).separates(o, P)) met.push_back(m);
            if (act(h, base_side(m)).separates(o, P)) entry_met.push_back(m);
        }
        r.crossed.push_back(met);

        int j = r.sequence.sides[static_cast<std::size_t>(k)];
        std::vector<int> want{j};
        if (k > 0) want.push_back(addr.back());
        std::sort(want.begin(), want.end());
        if (met != want)
            r.diffs.push_back("level " + std::to_string(k) + ": ray crosses sides " + detail::set_string(met) + ", expected " +
                              detail::set_string(want));

        // Entry side normalized to side 0: the exit side is the Farey label.
        int s = r.sequence.labels[static_cast<std::size_t>(k)];
        std::vector<int> want_e{s};
        if (k > 0) want_e.push_back(0);
        std::sort(want_e.begin(), want_e.end());
        if (entry_met != want_e)
            r.diffs.push_back("level " + std::to_string(k) + ": entry-normalized sides " + detail::set_string(entry_met) +
                              ", expected " + detail::set_string(want_e));
    }
    return r;
}

struct Fact3Level {
    int side = -1;   // sector of τ^(k)
    Word derived;    // k-fold derivative of c(τ)
    Word normalized; // k rounds of normalize+derive
    Word geometric;  // trace of τ^(k)
    int offset = -1; // derived against geometric
    int normalized_offset = -1;  // normalized against the relabelled geometric word
};

struct Fact3Report {
    int letters = 0;  // window traced for c(τ)
    std::vector<Fact3Level> levels;
    std::vector<std::string> diffs;

    bool ok() const { return diffs.empty() && !levels.empty(); }
};

/// Compares iterated derivation of c(τ) with the traces of τ^(k) = Ψ_{γ_{j(k-1)}} ... Ψ_{γ_{j(0)}} τ.
/// The window doubles until the deepest derivative has at least min_core letters.
inline Fact3Report fact3_check(const Trajectory& t, int depth, int min_core = 8, int max_letters = 16000, int slack = 8) {
    if (depth < 0) throw DomainError("negative depth");
    const Surface& hex = hexagon::surface();
    auto seq = teich_cutting_sequence(t.direction, depth);

    Fact3Report r;
    std::vector<Word> der;
    for (int n = 64;; n *= 2) {
        if (n > max_letters) throw WindowTooShort("depth " + std::to_string(depth) + " needs more than " + std::to_string(max_letters) + " letters");
        der.assign(1, trace(hex, t, n));
        bool short_window = false;
        for (int k = 1; k <= depth && !short_window; ++k) {
            if (der.back().size() < 3) short_window = true;
            else der.push_back(derive_sandwich(der.back()).letters);
        }
        if (!short_window && static_cast<int>(der.back().size()) >= min_core) {
            r.letters = n;
            break;
        }
    }

    Trajectory cur = t;
    Word norm = der.front();
    Permutation rel;  // π_{s(k-1)} ... π_{s(0)}
    for (int k = 0; k <= depth; ++k) {
        Fact3Level L;
        L.side = sector_of(cur.direction, SectorScheme::Hexagon).index();
        L.derived = der[static_cast<std::size_t>(k)];
        L.normalized = norm;
        L.geometric = trace(hex, cur, static_cast<int>(L.derived.size()) + slack);
        L.offset = aligned_offset(L.derived, L.geometric, slack);
        L.normalized_offset = aligned_offset(L.normalized, rel(L.geometric), slack);
        std::string at = "level " + std::to_string(k) + ": ";
        if (L.side != seq.sides[static_cast<std::size_t>(k)]) r.diffs.push_back(at + "sector of the renormalized trajectory differs from the crossed side");
        if (k == 0 && L.derived != L.geometric.substr(0, L.derived.size())) r.diffs.push_back(at + "base word differs from c(tau)");
        if (L.offset < 0) r.diffs.push_back(at + "derived word is not a window of the renormalized trace");
        if (L.normalized_offset < 0) r.diffs.push_back(at + "normalized word is not a window of the relabelled trace");
        r.levels.push_back(L);
        if (k == depth) break;
        int s = seq.labels[static_cast<std::size_t>(k)];
        norm = derive_sandwich(hexagon::pi(s)(norm)).letters;
        rel = hexagon::pi(s) * rel;
        cur = hexagon::renormalize(L.side, cur);
    }
    return r;
}

}  // namespace veech::teich
