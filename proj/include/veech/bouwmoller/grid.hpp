#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "veech/bouwmoller/surfaces.hpp"
#include "veech/surface/trace.hpp"

namespace veech::bm {

/// Bipartite graph of cylinder intersections. White vertices are horizontal cylinders, black ones
/// vertical cylinders; each edge is the basic rectangle where two cylinders meet.
struct GridGraph {
    struct Vertex {
        bool black;
        int column, row;  // columns from 1, rows from the top
    };
    struct Edge {
        char name;
        int u, v;
    };
    struct Arrow {
        char from, to;
        bool black;  // glued top to bottom when true, right to left otherwise
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::string> vertical_pieces;    // as read off the vertical decomposition
    std::vector<std::string> horizontal_pieces;  // as read off the horizontal decomposition

    /// Edges at vertex i in cyclic order: clockwise on odd columns, counterclockwise on even ones.
    std::string cyclic_order(int i) const {
        const Vertex& x = vertices[static_cast<std::size_t>(i)];
        // slots: up, right, down, left
        std::string slot(4, 0);
        for (const auto& e : edges) {
            if (e.u != i && e.v != i) continue;
            const Vertex& y = vertices[static_cast<std::size_t>(e.u == i ? e.v : e.u)];
            int k = y.row < x.row ? 0 : y.column > x.column ? 1 : y.row > x.row ? 2 : 3;
            slot[static_cast<std::size_t>(k)] = e.name;
        }
        std::string order;
        const int cw[4] = {0, 1, 2, 3}, ccw[4] = {0, 3, 2, 1};
        for (int k = 0; k < 4; ++k) {
            char c = slot[static_cast<std::size_t>(x.column % 2 == 1 ? cw[k] : ccw[k])];
            if (c) order += c;
        }
        return order;
    }

    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            std::string o = cyclic_order(static_cast<int>(i));
            if (o.size() < 2) continue;
            for (std::size_t k = 0; k < o.size(); ++k) out.push_back({o[k], o[(k + 1) % o.size()], vertices[i].black});
        }
        return out;
    }
};

inline GridGraph grid_graph() {
    GridGraph g;
    g.vertices = {{false, 1, 0}, {true, 1, 1}, {false, 1, 2}, {true, 2, 0}, {false, 2, 1}, {true, 2, 2}};
    g.edges = {{'a', 0, 3}, {'d', 0, 1}, {'e', 3, 4}, {'b', 1, 4}, {'f', 1, 2}, {'g', 4, 5}, {'c', 2, 5}};
    g.vertical_pieces = {"df", "adbefcg", "eg"};
    g.horizontal_pieces = {"a", "adbe", "bfcg", "c"};
    return g;
}

struct GridReport {
    std::vector<GridGraph::Arrow> arrows;
    int checks = 0;
    std::vector<std::string> diffs;
    std::vector<std::string> r1_pieces, r2_pieces;  // cells met by each polygon, halves included

    bool ok() const { return diffs.empty() && checks > 0; }
};

namespace detail {

inline std::vector<Vec2> cell_rect(char c) { return {corner(c, 0), corner(c, 1), corner(c, 2), corner(c, 3)}; }

inline std::string sorted(std::string s) {
    std::sort(s.begin(), s.end());
    return s;
}

inline std::multiset<std::string> as_sets(const std::vector<std::string>& v) {
    std::multiset<std::string> out;
    for (const auto& s : v) out.insert(sorted(s));
    return out;
}

}  // namespace detail

/// Rebuilds the side gluings of both orthogonal presentations from the graph and checks each one by
/// flowing across the glued side, then checks which rectangles every polygon contains.
inline GridReport validate_grid_graph(const GridGraph& g) {
    GridReport r;
    r.arrows = g.arrows();
    static const CutAndPaste ups = upsilon_perp();
    static const Surface r2p = build_r2_perp();
    const Surface& r1p = ups.source;

    auto land_r1 = [&](const Vec2& q, const Vec2& v) {
        auto f = flow(r1p, ups.apply_inverse(q), v);
        return cell_at(ups.apply(f.point));
    };
    auto land_r2 = [&](const Vec2& q, const Vec2& v) { return cell_at(flow(r2p, q, v).point); };

    const Field eps = Field::ratio(1, 10);
    const Rational rel[2][2] = {{Rational(1, 5), Rational(2, 5)}, {Rational(4, 5), Rational(3, 5)}};
    for (const auto& a : r.arrows) {
        Field w = cell_width(a.from), ht = cell_height(a.from);
        Vec2 o = corner(a.from, 0);
        for (const auto& s : rel) {
            Field sx(s[0]), sy(s[1]);
            Vec2 q = o + Vec2{sx * w, sy * ht};
            Vec2 v = a.black ? Vec2{Field(0), (Field(1) - sy) * ht + eps} : Vec2{(Field(1) - sx) * w + eps, Field(0)};
            const char* side = a.black ? "top" : "right";
            for (int k = 0; k < 2; ++k) {
                ++r.checks;
                char got = k == 0 ? land_r1(q, v) : land_r2(q, v);
                if (got != a.to)
                    r.diffs.push_back(std::string(k == 0 ? "R1perp" : "R2perp") + ": " + side + " of " + a.from + " meets " +
                                      (got ? std::string(1, got) : std::string("no rectangle")) + ", graph says " + a.to);
            }
        }
    }

    // Rectangles per polygon, with exact area bookkeeping.
    std::vector<std::string> r1(r1p.polygons.size()), r2(r2p.polygons.size());
    for (const auto& c : cells()) {
        auto rect = detail::cell_rect(c.name);
        Field full = polygon_area(rect), seen;
        for (std::size_t i = 0; i < r2p.polygons.size(); ++i) {
            Field a = polygon_area(veech::detail::intersect_convex(rect, r2p.polygons[i].vertices));
            if (a.sign() > 0) r2[i] += c.name;
            seen += a;
        }
        if (seen != full) r.diffs.push_back(std::string("R2perp: rectangle ") + c.name + " not covered exactly once");
        seen = Field(0);
        std::vector<Field> per(r1p.polygons.size());
        for (const auto& pc : ups.pieces) {
            Vec2 centroid = (Field(1) / Field(static_cast<long>(pc.region.size()))) *
                            [&] { Vec2 s; for (const auto& v : pc.region) s += v; return s; }();
            auto src = static_cast<std::size_t>(locate(r1p, centroid));
            std::vector<Vec2> img;
            for (const auto& v : pc.region) img.push_back(v + pc.translation);
            per[src] += polygon_area(veech::detail::intersect_convex(rect, img));
        }
        for (std::size_t i = 0; i < per.size(); ++i) {
            if (per[i].sign() > 0) r1[i] += c.name;
            seen += per[i];
        }
        if (seen != full) r.diffs.push_back(std::string("R1perp: rectangle ") + c.name + " not covered exactly once");
    }
    r.r1_pieces = r1;
    r.r2_pieces = r2;
    if (detail::as_sets(r1) != detail::as_sets(g.vertical_pieces)) r.diffs.push_back("R1perp: polygons do not match the vertical decomposition");
    if (detail::as_sets(r2) != detail::as_sets(g.horizontal_pieces)) r.diffs.push_back("R2perp: polygons do not match the horizontal decomposition");
    ++r.checks;
    return r;
}

}  // namespace veech::bm
