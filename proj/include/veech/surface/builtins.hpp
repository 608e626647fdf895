#pragma once

#include <string>

#include "veech/surface/presentation.hpp"

namespace veech {

namespace pts {

inline Vec2 v(long x, long y) { return {Field(x), Field(y)}; }
inline Vec2 v(const Field& x, const Field& y) { return {x, y}; }
inline Field half() { return Field::ratio(1, 2); }
inline Field r3h() { return Field::sqrt3() / 2; }

}  // namespace pts

/// Regular hexagon of unit side centred at the origin. Sides counterclockwise from the bottom
/// are A C B A C B, opposite sides glued.
inline Surface build_hexagon() {
    using namespace pts;
    Field h = half(), s = r3h();
    SurfaceBuilder b("hexagon");
    b.add_polygon({v(-h, -s), v(h, -s), v(1, 0), v(h, s), v(-h, s), v(-1, 0)});
    b.glue(0, 0, 0, 3, 'A').glue(0, 1, 0, 4, 'C').glue(0, 2, 0, 5, 'B');
    return b.build();
}

/// Unit square; A is the horizontal pair, B the vertical pair.
inline Surface build_square() {
    using namespace pts;
    SurfaceBuilder b("square");
    b.add_polygon({v(0, 0), v(1, 0), v(1, 1), v(0, 1)});
    b.glue(0, 0, 0, 2, 'A').glue(0, 1, 0, 3, 'B');
    return b.build();
}

/// Unit square cut along the diagonal from (0,0) to (1,1), labelled c.
inline Surface build_square_with_diagonal() {
    using namespace pts;
    SurfaceBuilder b("square-diagonal");
    b.add_polygon({v(0, 0), v(1, 0), v(1, 1)});
    b.add_polygon({v(0, 0), v(1, 1), v(0, 1)});
    b.glue(0, 0, 1, 1, 'A').glue(0, 1, 1, 2, 'B').glue(0, 2, 1, 0, 'c');
    return b.build();
}

/// The unit square turned by a quarter of a right angle about its centre.
inline Surface build_diamond() {
    using namespace pts;
    Field r = Field::sqrt2() / 2;
    SurfaceBuilder b("diamond");
    b.add_polygon({v(Field(0), -r), v(r, Field(0)), v(Field(0), r), v(-r, Field(0))});
    b.glue(0, 0, 0, 2, 'A').glue(0, 1, 0, 3, 'B');
    return b.build();
}

/// Parallelogram obtained from the hexagon by moving its left and lower right triangles.
/// Sides along π/6 carry 'a' (A'), vertical sides carry 'b' (B').
inline Surface build_parallelogram() {
    using namespace pts;
    Field h = half(), s = r3h();
    SurfaceBuilder b("parallelogram");
    b.add_polygon({v(-h, -s), v(1, 0), v(Field(1), Field::sqrt3()), v(-h, s)});
    b.glue(0, 0, 0, 2, 'a').glue(0, 1, 0, 3, 'b');
    return b.build();
}

/// Hexagon cut into four triangles by the diagonals d, e (horizontal) and f.
inline Surface build_augmented_hexagon() {
    using namespace pts;
    Field h = half(), s = r3h();
    SurfaceBuilder b("hexagon-augmented");
    b.add_polygon({v(-h, -s), v(h, -s), v(1, 0)});
    b.add_polygon({v(-1, 0), v(-h, -s), v(1, 0)});
    b.add_polygon({v(-1, 0), v(1, 0), v(h, s)});
    b.add_polygon({v(-1, 0), v(h, s), v(-h, s)});
    b.glue(0, 0, 3, 1, 'A').glue(0, 1, 3, 2, 'C').glue(1, 0, 2, 1, 'B');
    b.glue(0, 2, 1, 1, 'd').glue(1, 2, 2, 0, 'e').glue(2, 2, 3, 0, 'f');
    return b.build();
}

/// Hexagon cut along the vertical diagonal e and the diagonal f of slope π/6, both from the
/// lower left vertex.
inline Surface build_dictionary_hexagon() {
    using namespace pts;
    Field h = half(), s = r3h();
    SurfaceBuilder b("hexagon-dictionary");
    int L = b.add_polygon({v(-1, 0), v(-h, -s), v(-h, s)});
    int R = b.add_polygon({v(-h, -s), v(h, -s), v(1, 0)});
    int M = b.add_polygon({v(-h, -s), v(1, 0), v(h, s), v(-h, s)});
    b.glue(R, 0, M, 2, 'A').glue(R, 1, L, 2, 'C').glue(M, 1, L, 0, 'B');
    b.glue(L, 1, M, 3, 'e').glue(R, 2, M, 0, 'f');
    return b.build();
}

}  // namespace veech
