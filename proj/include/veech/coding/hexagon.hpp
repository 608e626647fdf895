#pragma once

#include <array>
#include <string>
#include <vector>

#include "veech/coding/diagram.hpp"
#include "veech/exact/linalg.hpp"

namespace veech::hexagon {

inline constexpr int kSectors = 6;

/// νᵢ sends the sector [iπ/6, (i+1)π/6] onto [0, π/6].
inline const Mat2& nu(int i) {
    static const std::array<Mat2, 6> table = [] {
        Field h = Field::ratio(1, 2), s = Field::sqrt3() / 2;
        return std::array<Mat2, 6>{Mat2{1, 0, 0, 1},  Mat2{h, s, s, -h},  Mat2{h, s, -s, h},
                                   Mat2{-h, s, s, h}, Mat2{-h, s, -s, -h}, Mat2{-1, 0, 0, 1}};
    }();
    return table.at(static_cast<std::size_t>(i));
}

/// Letter permutation induced by νᵢ.
inline const Permutation& pi(int i) {
    static const std::array<Permutation, 6> table = {
        Permutation::cycles("id"),   Permutation::cycles("(AC)"),  Permutation::cycles("(ABC)"),
        Permutation::cycles("(BA)"), Permutation::cycles("(ACB)"), Permutation::cycles("(BC)")};
    return table.at(static_cast<std::size_t>(i));
}

inline Mat2 gamma() { return {-1, Field(2) * Field::sqrt3(), 0, 1}; }
inline Mat2 sigma() { return {1, Field(2) * Field::sqrt3(), 0, 1}; }
inline Mat2 alpha() { return {1, 0, 0, -1}; }
inline Mat2 beta() { return nu(1); }

/// Letters at the left, middle and right positions of the common diagram shape.
struct Shape {
    char left, middle, right;
};

inline const Shape& shape(int i) {
    static const std::array<Shape, 6> table = {
        Shape{'A', 'C', 'B'}, Shape{'C', 'A', 'B'}, Shape{'C', 'B', 'A'},
        Shape{'B', 'C', 'A'}, Shape{'B', 'A', 'C'}, Shape{'A', 'B', 'C'}};
    return table.at(static_cast<std::size_t>(i));
}

/// Generation labels on the shape arrows, ordered w1, w2, w3, w̄2, w̄1.
inline const std::array<std::string, 5>& generation_labels(int i) {
    static const std::array<std::array<std::string, 5>, 6> table = {{
        {"", "", "", "", ""},
        {"", "CB", "", "BC", ""},
        {"B", "BC", "CBBC", "CB", "B"},
        {"B", "BBC", "CBBC", "CBB", "B"},
        {"C", "CBB", "BB", "BBC", "C"},
        {"C", "", "BB", "", "C"},
    }};
    return table.at(static_cast<std::size_t>(i));
}

/// Dᵢ with its shape arrows; `labels` (ordered w1, w2, w3, w̄2, w̄1) annotate them.
inline TransitionDiagram shaped_diagram(int i, const std::array<std::string, 5>& labels, const std::string& name) {
    const Shape& s = shape(i);
    TransitionDiagram d;
    d.name = name;
    d.nodes = {s.left, s.middle, s.right};
    d.arrows = {{s.left, s.middle, labels[0]},
                {s.middle, s.right, labels[1]},
                {s.right, s.right, labels[2]},
                {s.right, s.middle, labels[3]},
                {s.middle, s.left, labels[4]}};
    return d;
}

inline const std::vector<TransitionDiagram>& diagrams() {
    static const std::vector<TransitionDiagram> family = [] {
        std::vector<TransitionDiagram> f;
        for (int i = 0; i < kSectors; ++i) f.push_back(shaped_diagram(i, {"", "", "", "", ""}, "D" + std::to_string(i)));
        return f;
    }();
    return family;
}

/// Diagram Dⱼ annotated for the generation operator into D0.
inline TransitionDiagram generation_diagram(int j) {
    if (j < 1 || j > 5) throw DomainError("generation diagrams exist for 1..5");
    return shaped_diagram(j, generation_labels(j), "G" + std::to_string(j));
}

/// D0 annotated with the crossings of the diagonals d, e (horizontal) and f.
inline TransitionDiagram augmented_d0() {
    return shaped_diagram(0, {"", "f", "e", "d", ""}, "D0~");
}

/// D0 annotated with the crossings of the parallelogram sides: e vertical, f along π/6.
inline TransitionDiagram dictionary_d0() {
    return shaped_diagram(0, {"", "e", "e", "ef", "e"}, "D0 dictionary");
}

}  // namespace veech::hexagon
