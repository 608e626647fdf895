#include <gtest/gtest.h>

#include <cmath>

#include "veech/teich/teich.hpp"
#include "veech/verify/sampling.hpp"
#include "veech/verify/suites.hpp"

using namespace veech;
using namespace veech::teich;

namespace {

Mat2 random_matrix(Sampler& s) {
    for (;;) {
        Mat2 m{Field(s.integer(-4, 4)), Field(s.integer(-4, 4)) * Field::sqrt3(), Field(s.integer(-4, 4)), Field(s.integer(-4, 4))};
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace

TEST(Teich, ReflectionsFixTheirSides) {
    auto checks = reflection_checks();
    ASSERT_EQ(checks.size(), 3u);
    for (const auto& c : checks) EXPECT_TRUE(c.ok()) << c.name;
}

TEST(Teich, GeneratorsAreReflections) {
    for (int i = 0; i < 6; ++i) {
        Mat2 g = generator(i);
        EXPECT_EQ(g * g, Mat2::identity()) << i;
        EXPECT_EQ(g.det(), Field(-1)) << i;
        Geodesic side = base_side(i);
        EXPECT_EQ(act(g, side), side) << i;
    }
}

TEST(Teich, BoundaryActionIsAHomomorphism) {
    Sampler s(81);
    for (int i = 0; i < 200; ++i) {
        Mat2 m = random_matrix(s), n = random_matrix(s);
        BoundaryPoint z{Field(approx(s.uniform(-5, 5), 97))};
        EXPECT_EQ(act(m * n, z), act(m, act(n, z)));
        HyperbolicPoint w{Field(approx(s.uniform(-3, 3), 89)), Field(approx(s.uniform(0.1, 3), 83))};
        EXPECT_EQ(act(m * n, w), act(m, act(n, w)));
        EXPECT_GT(act(m, w).y.sign(), 0);
    }
}

TEST(Teich, SeparationIsInvariant) {
    Sampler s(82);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Mat2 m = random_matrix(s);
        Geodesic g = base_side(static_cast<int>(s.integer(0, 5)));
        BoundaryPoint e{Field(approx(s.uniform(-5, 5), 101)) + Field::sqrt2()};
        try {
            bool before = g.separates(base_point(), e);
            bool after = act(m, g).separates(act(m, base_point()), act(m, e));
            EXPECT_EQ(before, after);
            ++checked;
        } catch (const DomainError&) {
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(Teich, RayEndpointInTheDisk) {
    Sampler s(83);
    for (int i = 0; i < 100; ++i) {
        Direction d = s.direction(0.01, M_PI - 0.01, Field::sqrt2());
        if (std::abs(d.angle() - M_PI / 2) < 1e-3) continue;
        auto r = ray_endpoint(d);
        EXPECT_LT(r.error(), 1e-12);
        auto z = flow_shadow(d.angle(), 40);
        EXPECT_NEAR(z.real(), -std::tan(d.angle()), 1e-6 * (1 + std::abs(std::tan(d.angle()))));
        EXPECT_LT(z.imag(), 1e-6);
    }
    EXPECT_THROW(ray_endpoint(Direction(Field(1), Field(0))), DomainError);
    EXPECT_THROW(ray_endpoint(Direction(Field(0), Field(1))), DomainError);
}

TEST(Teich, CuttingSequenceIsTheFareyItinerary) {
    Sampler s(84);
    for (int i = 0; i < 60; ++i) {
        Direction d = verify::detail::hex_uniform(s).direction;
        auto seq = teich_cutting_sequence(d, 8);
        EXPECT_EQ(seq.labels, farey_expansion(d, 8).entries);
        for (std::size_t k = 1; k < seq.sides.size(); ++k) EXPECT_NE(seq.sides[k], seq.sides[k - 1]);
    }
}

TEST(Teich, CrossingsMatchExactGeometry) {
    Sampler s(85);
    for (int i = 0; i < 15; ++i) {
        Direction d = verify::detail::hex_uniform(s).direction;
        auto c = geometric_crossing_check(d, 3);
        EXPECT_TRUE(c.ok()) << (c.diffs.empty() ? "" : c.diffs.front());
    }
}

TEST(Teich, RenormalizedTrajectoriesFollowTheRay) {
    Sampler s(86);
    for (int i = 0; i < 8; ++i) {
        Trajectory t = verify::detail::hex_uniform(s);
        auto r = fact3_check(t, 3);
        EXPECT_TRUE(r.ok()) << (r.diffs.empty() ? "" : r.diffs.front());
    }
}
