#pragma once

#include "veech/coding/hexagon.hpp"
#include "veech/coding/word.hpp"
#include "veech/surface/builtins.hpp"
#include "veech/surface/lattice.hpp"
#include "veech/surface/trace.hpp"

namespace veech::hexagon {

inline const Surface& surface() {
    static const Surface s = build_hexagon();
    return s;
}

/// Affine automorphism with derivative m, image point reduced into the hexagon.
inline Trajectory psi(const Mat2& m, const Trajectory& t) {
    return {torus_reduce(surface(), m * t.start), m * t.direction};
}

/// Ψ for γᵢ = νᵢ⁻¹γνᵢ. The νᵢ are symmetries of the hexagon, so no reduction is needed around γ.
inline Trajectory renormalize(int i, const Trajectory& t) {
    const Mat2& n = nu(i);
    Trajectory s = psi(gamma(), {n * t.start, n * t.direction});
    Mat2 ni = n.inverse();
    return {ni * s.start, ni * s.direction};
}

struct CentralCase {
    Word word;
    Word derived;
    Word image;  // trace of Ψ_γτ
    int offset = -1;

    bool ok() const { return offset >= 0; }
};

/// derive(trace τ) against trace(Ψ_γ τ) for τ in Σ0.
inline CentralCase central_case(const Trajectory& t, int n = 60, int max_offset = 3) {
    auto s = sector_of(t.direction, SectorScheme::Hexagon);
    if (s.boundary) throw BoundaryDirection(s.sectors);
    if (s.index() != 0) throw DomainError("direction outside the first sector");
    CentralCase c;
    c.word = trace(surface(), t, n);
    c.derived = derive_sandwich(c.word).letters;
    c.image = trace(surface(), psi(gamma(), t), n);
    c.offset = aligned_offset(c.derived, c.image, max_offset);
    return c;
}

}  // namespace veech::hexagon
