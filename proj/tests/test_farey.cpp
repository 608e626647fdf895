#include <gtest/gtest.h>

#include "veech/farey/farey.hpp"
#include "veech/verify/sampling.hpp"
#include "veech/verify/suites.hpp"

using namespace veech;

TEST(Farey, BranchesMapTheirSectorOntoTheUpperHalf) {
    const auto& f = FareyScheme::hexagon();
    for (int i = 0; i < 6; ++i) {
        auto I = f.sector(i);
        Direction a = f.map_branch(i, Direction(I.lo)), b = f.map_branch(i, Direction(I.hi));
        // the two ends go to the horizontal, read as 0 and π
        EXPECT_TRUE(a.y().is_zero() || b.y().is_zero()) << i;
        EXPECT_EQ(f.branch(i).det().abs(), Field(1)) << i;
    }
}

TEST(Farey, NestedIntervalsContainTheDirection) {
    Sampler s(71);
    for (int i = 0; i < 60; ++i) {
        Direction d = verify::detail::hex_uniform(s).direction;
        auto e = farey_expansion(d, 10);
        ASSERT_EQ(e.entries.size(), 11u);
        for (std::size_t k = 0; k < e.intervals.size(); ++k) {
            EXPECT_TRUE(e.intervals[k].contains(d)) << k;
            if (k > 0) {
                EXPECT_TRUE(e.intervals[k - 1].contains(e.intervals[k])) << k;
                EXPECT_LE(e.intervals[k].length(), e.intervals[k - 1].length() + 1e-15);
            }
        }
        EXPECT_EQ(farey_interval(e.entries).lo, e.intervals.back().lo);
    }
}

TEST(Farey, ItineraryShiftsUnderTheMap) {
    Sampler s(72);
    for (int i = 0; i < 60; ++i) {
        Direction d = verify::detail::hex_uniform(s).direction;
        auto e = farey_expansion(d, 8);
        auto next = farey_expansion(farey_map(d), 7);
        EXPECT_EQ(std::vector<int>(e.entries.begin() + 1, e.entries.end()), next.entries);
    }
}

TEST(Farey, BoundaryDirectionsThrow) {
    EXPECT_THROW(farey_expansion(Direction(Field(1), Field::sqrt3()), 3), BoundaryDirection);
    // a preimage of a boundary ray becomes a boundary iterate later
    Direction d = FareyScheme::hexagon().branch(0).inverse() * Direction(Field(1), Field::sqrt3());
    EXPECT_THROW(farey_expansion(d, 3), BoundaryDirection);
}

TEST(Recognize, DecidedRoundsMatchTheItinerary) {
    Sampler s(73);
    int full = 0;
    for (int i = 0; i < 40; ++i) {
        Trajectory t = verify::detail::hex_uniform(s);
        auto e = farey_expansion(t.direction, 6);
        auto r = recognize_prefix(trace(hexagon::surface(), t, 400), 6);
        for (std::size_t k = 0; k < r.prefix.entries.size(); ++k) EXPECT_EQ(r.prefix.entries[k], e.entries[k]);
        EXPECT_GE(r.depth, 0);
        if (r.depth == 6) ++full;
    }
    EXPECT_GT(full, 0);
}

TEST(Recognize, LongWindowsReachFullDepth) {
    Sampler s(74);
    for (int i = 0; i < 10; ++i) {
        Trajectory t = verify::detail::hex_uniform(s);
        auto e = farey_expansion(t.direction, 3);
        EXPECT_EQ(recognize_direction(trace(hexagon::surface(), t, 3000), 3).entries, e.entries);
    }
}

TEST(Recognize, ShortWindowsReportTheirLimit) {
    Trajectory t{{Field(0), Field::ratio(-1, 4)}, Direction(Field(1), Field::sqrt2())};
    EXPECT_THROW(recognize_direction(trace(hexagon::surface(), t, 6), 6), Error);
}

TEST(Gauss, BranchIdentityForSmallN) {
    std::vector<Rational> pts;
    for (int k = 1; k <= 400; ++k) pts.emplace_back(k, 401);
    for (int n = 1; n <= 6; ++n) {
        auto g = gauss_acceleration_check(n, pts);
        EXPECT_TRUE(g.ok()) << "n=" << n;
        EXPECT_GT(g.points, 0);
    }
}
