#include <gtest/gtest.h>

#include <cmath>

#include "veech/torus/dictionary.hpp"
#include "veech/torus/series.hpp"
#include "veech/torus/square.hpp"
#include "veech/verify/sampling.hpp"

using namespace veech;

namespace {

double ratio(const Word& w, char top, char bottom) {
    return static_cast<double>(std::count(w.begin(), w.end(), top)) / static_cast<double>(std::count(w.begin(), w.end(), bottom));
}

}  // namespace

TEST(Square, PrimeShearPipelineHolds) {
    Sampler s(91);
    int shear_failures = 0;
    for (int i = 0; i < 60; ++i) {
        Direction d = s.direction(0.01, M_PI / 4 - 0.01, Field::sqrt2());
        square::PipelineReport p;
        try {
            p = square::square_sandwich_pipeline({s.point_in(build_square().polygons[0].vertices), d}, 60);
        } catch (const DomainError&) {
            continue;  // sheared start lands on a side
        }
        EXPECT_TRUE(p.shear_prime.ok()) << p.shear_prime.word;
        if (!p.shear.ok()) ++shear_failures;
    }
    EXPECT_GT(shear_failures, 0);
}

TEST(Square, InvolutionsAndDeterminants) {
    EXPECT_EQ(square::gamma_prime() * square::gamma_prime(), Mat2::identity());
    EXPECT_EQ(square::gamma() * square::gamma(), Mat2::identity());
    EXPECT_EQ(square::nu1() * square::nu1(), Mat2::identity());
    EXPECT_EQ(square::sigma().det(), Field(1));
}

TEST(Series, DerivationFollowsTheGaussMap) {
    Sampler s(92);
    Surface sq = build_square();
    for (int i = 0; i < 60; ++i) {
        Direction d = s.direction(0.05, M_PI / 2 - 0.05, Field::sqrt2());
        Word w = trace(sq, {s.point_in(sq.polygons[0].vertices), d}, 4000);
        auto f = sturmian_block_form(w);
        Word once = w;
        for (int k = 0; k < f.n0; ++k) once = single_step_derive(once, f.block, f.separator);
        EXPECT_EQ(series_derive(w), swap_letters(once, f.block, f.separator));
        // the block letter outnumbers the separator by n0 or n0 + 1 per separator
        double r = ratio(w, f.block, f.separator);
        EXPECT_GE(r, f.n0 - 0.05);
        EXPECT_LE(r, f.n0 + 1.05);
    }
}

TEST(Series, RejectsNonSturmianWords) {
    EXPECT_THROW(sturmian_block_form("AABBAABB"), Error);
}

TEST(Dictionary, MatchesTheParallelogramTrace) {
    Sampler s(93);
    const CutAndPaste m = hexagon_to_parallelogram_map();
    for (int i = 0; i < 60; ++i) {
        int sec = static_cast<int>(s.integer(0, 5));
        Trajectory t = s.trajectory(build_hexagon(), s.direction_in(SectorScheme::Hexagon, sec, Field::sqrt2()));
        Word d = hex_to_parallelogram(trace(build_hexagon(), t, 80), sec);
        Trajectory u{m.apply(hexagon::nu(sec) * t.start), hexagon::nu(sec) * t.direction};
        Word p = trace(build_parallelogram(), u, static_cast<int>(d.size()) + 6);
        EXPECT_GE(aligned_offset(d, p, 6), 0) << display(d) << " vs " << display(p);
    }
}

TEST(Dictionary, PeriodicExampleDoesNotCommuteWithDerivation) {
    auto r = noncommutation_witness(6);
    EXPECT_TRUE(r.witnessed());
    EXPECT_NE(display(r.dictionary).find("A'B'B'A'B'B'"), std::string::npos);
    EXPECT_EQ(r.derived_dictionary.find_first_not_of('a'), std::string::npos);
}
