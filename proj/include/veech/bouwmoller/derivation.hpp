#pragma once

#include <string>
#include <vector>

#include "veech/bouwmoller/surfaces.hpp"
#include "veech/bouwmoller/symmetry.hpp"
#include "veech/coding/diagram.hpp"
#include "veech/surface/cylinders.hpp"
#include "veech/surface/trace.hpp"

namespace veech::bm {

/// Transitions of R1 cutting sequences in Σ0, annotated with the R2 sides crossed in between.
inline const TransitionDiagram& diagram_d0() {
    static const TransitionDiagram d = [] {
        TransitionDiagram t;
        t.name = "BM D0";
        t.nodes = "ABCDEFGH";
        t.arrows = {{'H', 'B', ""}, {'B', 'H', "g"}, {'B', 'G', ""}, {'F', 'B', "b"}, {'F', 'D', ""},
                    {'D', 'F', "i"}, {'D', 'E', ""}, {'A', 'H', ""}, {'G', 'A', ""}, {'G', 'C', "c"},
                    {'C', 'G', "f"}, {'C', 'F', ""}, {'E', 'C', ""}};
        return t;
    }();
    return d;
}

/// Dᵢ = πᵢ⁻¹ D0.
inline TransitionDiagram diagram(int i) {
    return diagram_d0().relabelled(pi(i).inverse(), "BM D" + std::to_string(i));
}

inline const std::vector<TransitionDiagram>& diagrams() {
    static const std::vector<TransitionDiagram> all = [] {
        std::vector<TransitionDiagram> v;
        for (int i = 0; i < kSectors; ++i) v.push_back(diagram(i));
        return v;
    }();
    return all;
}

/// Interpolates the arrow labels, keeps A, D, E, H as primed letters and drops B, C, F, G.
inline Word bm_derive(const Word& w) {
    Word aug = diagram_d0().interpolate(w), out;
    for (char c : aug) {
        switch (c) {
            case 'A': case 'D': case 'E': case 'H': out += static_cast<char>(c - 'A' + 'a'); break;
            case 'B': case 'C': case 'F': case 'G': break;
            default: out += c;
        }
    }
    return out;
}

struct DerivationCase {
    Word word;     // trace in R1
    Word derived;  // bm_derive of the word
    Word image;    // trace of Ψ_σ τ in R2
    int offset = -1;

    bool ok() const { return offset >= 0; }
};

/// bm_derive(trace_R1(τ)) against trace_R2(Ψ_σ τ).
inline DerivationCase derivation_case(const Trajectory& t, int n, int max_offset = 3) {
    static const Surface r1 = build_r1();
    static const Surface r2 = build_r2();
    auto sec = sector_of(t.direction, SectorScheme::BouwMoller);
    if (sec.boundary) throw BoundaryDirection(sec.sectors);
    if (sec.index() != 0) throw DomainError("direction outside the sector [7pi/8, pi]");
    DerivationCase c;
    c.word = trace(r1, t, n);
    c.derived = bm_derive(c.word);
    c.image = trace(r2, psi_sigma(t), n);
    c.offset = aligned_offset(c.derived, c.image, max_offset);
    return c;
}

struct ModulusReport {
    std::vector<Cylinder> cylinders;
    Mat2 gamma;
    bool all_equal = false;

    bool ok() const { return cylinders.size() == 3 && all_equal && gamma.det() == Field(1) && gamma.trace() == Field(2); }
};

/// Horizontal cylinders of R1 and the parabolic element built from their common inverse modulus.
inline ModulusReport cylinder_modulus_check() {
    ModulusReport r;
    Field mu = Field(2) + Field::sqrt2();
    r.cylinders = cylinder_decomposition(build_r1(), Direction(1, 0)).cylinders;
    r.all_equal = !r.cylinders.empty();
    for (const auto& c : r.cylinders) r.all_equal = r.all_equal && c.mu == mu;
    r.gamma = Mat2{1, mu, 0, 1};
    return r;
}

}  // namespace veech::bm
