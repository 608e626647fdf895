#pragma once

#include <optional>
#include <string>

#include "veech/coding/word.hpp"
#include "veech/surface/builtins.hpp"
#include "veech/surface/cylinders.hpp"
#include "veech/surface/lattice.hpp"
#include "veech/surface/trace.hpp"

namespace veech::square {

inline Mat2 sigma() { return {1, 1, 0, 1}; }
inline Mat2 sigma_prime() { return {1, 2, 0, 1}; }
/// Orientation reversing partner of σ.
inline Mat2 gamma() { return {-1, 1, 0, 1}; }
inline Mat2 gamma_prime() { return {-1, 2, 0, 1}; }
inline Mat2 nu1() { return {0, 1, 1, 0}; }
inline const Permutation& pi1() {
    static const Permutation p = Permutation::cycles("(AB)");
    return p;
}

/// Affine automorphism with derivative m: the image point reduced into the unit square.
inline Trajectory psi(const Mat2& m, const Trajectory& t) {
    static const Surface sq = build_square();
    return {torus_reduce(sq, m * t.start), m * t.direction};
}

/// Crossings with the horizontal sides and the diagonal; the diagonal is read as B.
inline Word hat_sequence(const Trajectory& t, int n) {
    static const Surface sd = build_square_with_diagonal();
    for (int budget = 2 * n + 4;; budget *= 2) {
        Word raw = trace(sd, t, budget), out;
        for (char c : raw) {
            if (c == 'B') continue;
            out += c == 'c' ? 'B' : c;
            if (static_cast<int>(out.size()) == n) return out;
        }
    }
}

struct SandwichCase {
    Word word;     // trace of τ
    Word derived;  // sandwich derivative
    Word image;    // trace of Ψτ
    int offset = -1;

    bool ok() const { return offset >= 0; }
};

/// Derived core of trace(τ) against trace(Ψ_m τ).
inline SandwichCase sandwich_case(const Mat2& m, const Trajectory& t, int n, int max_offset = 3) {
    static const Surface sq = build_square();
    SandwichCase c;
    c.word = trace(sq, t, n);
    c.derived = derive_sandwich(c.word).letters;
    c.image = trace(sq, psi(m, t), n);
    c.offset = aligned_offset(c.derived, c.image, max_offset);
    return c;
}

struct PipelineReport {
    SandwichCase shear_prime;  // γ' = [[-1,2],[0,1]]
    SandwichCase shear;        // γ = [[-1,1],[0,1]]
    Word hat;                  // ĉ(τ)
    bool hat_is_image = false; // ĉ(τ) coincides with trace(Ψ_γ τ)
};

/// Both shears on one trajectory with direction in [0, π/4].
inline PipelineReport square_sandwich_pipeline(const Trajectory& t, int n) {
    auto s = sector_of(t.direction, SectorScheme::Square);
    if (s.boundary) throw BoundaryDirection(s.sectors);
    if (s.index() != 0) throw DomainError("direction outside [0, pi/4]; apply nu1 first");
    PipelineReport r;
    r.shear_prime = sandwich_case(gamma_prime(), t, n);
    r.shear = sandwich_case(gamma(), t, n);
    r.hat = hat_sequence(t, n);
    r.hat_is_image = r.hat == r.shear.image;
    return r;
}

/// Inverse modulus of the single horizontal cylinder of the diamond.
inline Field diamond_modulus() {
    auto cd = cylinder_decomposition(build_diamond(), Direction(1, 0));
    if (cd.cylinders.size() != 1) throw DomainError("diamond should be one cylinder");
    return cd.cylinders.front().mu;
}

}  // namespace veech::square
