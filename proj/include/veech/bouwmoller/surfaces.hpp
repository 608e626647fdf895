#pragma once

#include <array>
#include <string>

#include "veech/surface/builtins.hpp"
#include "veech/surface/cut_and_paste.hpp"

namespace veech::bm {

inline Field h() { return (Field(1) + Field::sqrt2()) / 2; }

/// Regular octagon of unit side with an axis square on side C and a tilted square on side B.
/// Octagon sides A..H run counterclockwise from the bottom.
inline Surface build_r1() {
    using namespace pts;
    Field H = h(), q = half(), r = Field::sqrt2() / 2;
    SurfaceBuilder b("bm-r1");
    int oct = b.add_polygon({v(-q, -H), v(q, -H), v(H, -q), v(H, q), v(q, H), v(-q, H), v(-H, q), v(-H, -q)});
    int sq = b.add_polygon({v(H, -q), v(H + 1, -q), v(H + 1, q), v(H, q)});
    int dia = b.add_polygon({v(q, -H), v(q + r, -H - r), v(H + r, -H), v(H, -q)});
    b.glue(oct, 0, sq, 2, 'A').glue(oct, 2, sq, 3, 'C').glue(oct, 4, sq, 0, 'E').glue(oct, 6, sq, 1, 'G');
    b.glue(oct, 1, dia, 3, 'B').glue(oct, 3, dia, 0, 'D').glue(oct, 5, dia, 1, 'F').glue(oct, 7, dia, 2, 'H');
    return b.build();
}

/// Shear making the horizontal and 3π/4 cylinder directions orthogonal.
inline Mat2 sigma1() { return {1, 1, 0, 1}; }
/// Length adjustment: scale_sq · diag(√2/2, √3/2)².
inline ScaledMatrix sigma2() { return {Mat2{Field::sqrt2() / 2, 0, 0, Field::sqrt3() / 2}, Field(2) * Field::sqrt6() / 3}; }
inline Mat2 sigma3() { return {1, Field::sqrt3() / 3, 0, 1}; }
inline ScaledMatrix sigma() { return ScaledMatrix(sigma3()) * sigma2() * ScaledMatrix(sigma1()); }
/// Squared side length of the long hexagon sides once areas agree.
inline Field r2_scale_sq() { return Field(2) * Field::sqrt6() / 3; }

/// Basic rectangles in orthogonal coordinates, one per grid-graph edge a..g.
struct Cell {
    char name;
    int column, row;
};

inline const std::array<Cell, 7>& cells() {
    static const std::array<Cell, 7> c = {{{'a', 0, 0}, {'d', 1, 0}, {'e', 0, 1}, {'b', 1, 1}, {'g', 2, 1}, {'f', 1, 2}, {'c', 2, 2}}};
    return c;
}

inline const std::array<Field, 4>& column_bounds() {
    static const std::array<Field, 4> x = [] {
        Field r = Field::sqrt2() / 2;
        return std::array<Field, 4>{-(Field(1) + r), -r, r, Field(1) + r};
    }();
    return x;
}

inline const std::array<Field, 4>& row_bounds() {
    static const std::array<Field, 4> y = [] {
        Field H = h(), q = Field::ratio(1, 2);
        return std::array<Field, 4>{-H, -q, q, H};
    }();
    return y;
}

inline const Cell& cell(char name) {
    for (const auto& c : cells())
        if (c.name == name) return c;
    throw DomainError(std::string("no cell ") + name);
}

/// Corners of a cell: 0 bottom left, 1 bottom right, 2 top right, 3 top left.
inline Vec2 corner(char name, int k) {
    const Cell& c = cell(name);
    const auto& X = column_bounds();
    const auto& Y = row_bounds();
    std::size_t i = static_cast<std::size_t>(c.column), j = static_cast<std::size_t>(c.row);
    switch (k) {
        case 0: return {X[i], Y[j]};
        case 1: return {X[i + 1], Y[j]};
        case 2: return {X[i + 1], Y[j + 1]};
        default: return {X[i], Y[j + 1]};
    }
}

inline Field cell_width(char name) {
    const auto& X = column_bounds();
    auto i = static_cast<std::size_t>(cell(name).column);
    return X[i + 1] - X[i];
}

inline Field cell_height(char name) {
    const auto& Y = row_bounds();
    auto j = static_cast<std::size_t>(cell(name).row);
    return Y[j + 1] - Y[j];
}

/// Cell whose interior holds p, or 0.
inline char cell_at(const Vec2& p) {
    for (const auto& c : cells()) {
        Vec2 lo = corner(c.name, 0), hi = corner(c.name, 2);
        if (p.x > lo.x && p.x < hi.x && p.y > lo.y && p.y < hi.y) return c.name;
    }
    return 0;
}

/// R1 sheared so that its two cylinder directions are horizontal and vertical.
inline Surface build_r1_perp() {
    Surface s = transform_surface(sigma1(), build_r1());
    s.name = "bm-r1-perp";
    return s;
}

/// Two triangles and two hexagons cut from the basic rectangles along antidiagonals.
/// Primed labels are stored lowercase.
inline Surface build_r2_perp() {
    auto C = [](char n, int k) { return corner(n, k); };
    SurfaceBuilder b("bm-r2-perp");
    int t1 = b.add_polygon({C('a', 0), C('a', 1), C('a', 3)});
    int h1 = b.add_polygon({C('a', 1), C('d', 1), C('d', 2), C('b', 3), C('e', 3), C('e', 0)});
    int h2 = b.add_polygon({C('b', 1), C('g', 1), C('g', 2), C('c', 3), C('f', 3), C('f', 0)});
    int t2 = b.add_polygon({C('c', 1), C('c', 2), C('c', 3)});
    b.glue(t1, 0, h1, 3, 'a').glue(t1, 1, h1, 5, 'g').glue(t1, 2, h1, 1, 'h');
    b.glue(h1, 0, h2, 3, 'b').glue(h1, 2, h2, 5, 'f').glue(h1, 4, h2, 1, 'c');
    b.glue(t2, 0, h2, 4, 'd').glue(t2, 1, h2, 0, 'e').glue(t2, 2, h2, 2, 'i');
    return b.build();
}

/// σ3σ2 without its scalar: orthogonal coordinates to R2.
inline Mat2 r2_shape() { return {Field::sqrt2() / 2, Field::ratio(1, 2), 0, Field::sqrt3() / 2}; }

/// Two triangles and two semi-regular hexagons, long sides 1 and short sides √2/2 before scaling.
inline Surface build_r2() {
    Surface s = transform_surface(r2_shape(), build_r2_perp());
    s.name = "bm-r2";
    return s;
}

/// Cut and paste from R1⊥ onto the rectangle layout: one half of the square moves left and one half
/// of the tilted square moves up.
inline CutAndPaste upsilon_perp() {
    using namespace pts;
    Field H = h(), q = half(), r = Field::sqrt2() / 2;
    Mat2 s1 = sigma1();
    auto P = [&](const Field& x, const Field& y) { return s1 * v(x, y); };
    CutAndPaste m;
    m.source = build_r1_perp();
    m.target = build_r2_perp();
    m.pieces.push_back({{P(-q, -H), P(q, -H), P(H, -q), P(H, q), P(q, H), P(-q, H), P(-H, q), P(-H, -q)}, v(0, 0)});
    m.pieces.push_back({{P(H, -q), P(H + 1, -q), P(H, q)}, v(0, 0)});
    m.pieces.push_back({{P(H + 1, -q), P(H + 1, q), P(H, q)}, v(-(Field(2) + Field::sqrt2()), Field(0))});
    m.pieces.push_back({{P(q, -H), P(H + r, -H), P(H, -q)}, v(0, 0)});
    m.pieces.push_back({{P(q, -H), P(q + r, -H - r), P(H + r, -H)}, v(Field(0), Field(1) + Field::sqrt2())});
    return m;
}

/// Ψ_σ on a trajectory of R1, landing in R2 (shape coordinates).
inline Trajectory psi_sigma(const Trajectory& t) {
    static const CutAndPaste u = upsilon_perp();
    Mat2 s1 = sigma1();
    Vec2 p = r2_shape() * u.apply(s1 * t.start);
    return {p, r2_shape() * (s1 * t.direction)};
}

}  // namespace veech::bm
