#include <gtest/gtest.h>

#include "veech/render/svg.hpp"
#include "veech/surface/builtins.hpp"

using namespace veech;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

bool well_formed(const std::string& svg) {
    return svg.find("<svg") != std::string::npos && svg.find("</svg>") != std::string::npos && count(svg, "<svg") == 1;
}

}  // namespace

TEST(Render, SurfaceWithTrajectory) {
    Surface h = build_hexagon();
    Trajectory t{{Field(0), Field::ratio(-1, 4)}, Direction(Field(1), Field::sqrt2())};
    std::string svg = render::surface_svg(h, &t, 12);
    EXPECT_TRUE(well_formed(svg));
    EXPECT_EQ(count(svg, "<polygon"), 1u);
    EXPECT_GE(count(svg, "<polyline"), 1u);
    EXPECT_EQ(render::label_text('a'), "A'");
}

TEST(Render, FareyAndTessellation) {
    EXPECT_TRUE(well_formed(render::farey_svg()));
    std::string a = render::tessellation_svg(1), b = render::tessellation_svg(2);
    EXPECT_TRUE(well_formed(a));
    EXPECT_GT(b.size(), a.size());
    Direction d(Field(1), Field::sqrt2());
    EXPECT_TRUE(well_formed(render::tessellation_svg(2, true, &d)));
}
