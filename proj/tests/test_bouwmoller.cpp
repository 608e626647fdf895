#include <gtest/gtest.h>

#include "veech/bouwmoller/derivation.hpp"
#include "veech/bouwmoller/grid.hpp"
#include "veech/bouwmoller/symmetry.hpp"
#include "veech/verify/sampling.hpp"
#include "veech/verify/suites.hpp"

using namespace veech;

TEST(BouwMoller, AreasAgree) {
    Field a1 = bm::build_r1().area();
    EXPECT_EQ(a1, Field(2) * (Field(2) + Field::sqrt2()));
    // R2 is stored in shape coordinates; its side length a enters through a²
    EXPECT_EQ(bm::build_r2().area() * bm::r2_scale_sq(), a1);
    EXPECT_EQ(bm::r2_scale_sq() * bm::r2_scale_sq(), Field(8) / 3);
}

TEST(BouwMoller, AffineMapHasDeterminantOne) {
    auto s = bm::sigma();
    EXPECT_EQ(s.det(), Field(1));
    EXPECT_EQ(bm::sigma2().det(), Field(1));
}

TEST(BouwMoller, HorizontalCylindersShareTheirModulus) {
    auto m = bm::cylinder_modulus_check();
    EXPECT_TRUE(m.ok());
    ASSERT_EQ(m.cylinders.size(), 3u);
    for (const auto& c : m.cylinders) EXPECT_EQ(c.mu, Field(2) + Field::sqrt2());
    EXPECT_EQ(m.gamma, (Mat2{1, Field(2) + Field::sqrt2(), 0, 1}));
}

TEST(BouwMoller, SampledTracesFitTheirDiagram) {
    Sampler s(101);
    int n = sector_count(SectorScheme::BouwMoller);
    EXPECT_EQ(n, 16);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 10; ++k) {
            Word w = trace(bm::build_r1(), verify::detail::bm_sample(s, i), 80);
            EXPECT_TRUE(bm::diagram(i).admits(w)) << "sector " << i << " " << w;
            EXPECT_TRUE(bm::diagram_d0().admits(bm::pi(i)(w))) << "sector " << i;
        }
}

TEST(BouwMoller, DerivedWordIsTheTraceInR2) {
    Sampler s(102);
    for (int i = 0; i < 60; ++i) {
        auto c = bm::derivation_case(verify::detail::bm_sample(s, 0), 60);
        EXPECT_TRUE(c.ok()) << c.word;
    }
}

TEST(BouwMoller, GridGraphPredictsTheOrthogonalGluings) {
    auto g = bm::grid_graph();
    auto r = bm::validate_grid_graph(g);
    EXPECT_TRUE(r.ok()) << (r.diffs.empty() ? "" : r.diffs.front());
    EXPECT_EQ(r.diffs.size(), 0u);
    std::string orders;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) orders += (v ? " " : "") + g.cyclic_order(static_cast<int>(v));
    EXPECT_EQ(orders, "ad dbf fc ae ebg gc");
}
