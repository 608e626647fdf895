#include <gtest/gtest.h>

#include "float_tracer.hpp"
#include "veech/bouwmoller/surfaces.hpp"
#include "veech/surface/builtins.hpp"
#include "veech/surface/cut_and_paste.hpp"
#include "veech/surface/cylinders.hpp"
#include "veech/surface/io.hpp"
#include "veech/surface/trace.hpp"
#include "veech/torus/dictionary.hpp"
#include "veech/verify/sampling.hpp"

using namespace veech;

namespace {

std::vector<Surface> all_surfaces() {
    return {build_hexagon(),        build_square(),      build_square_with_diagonal(), build_diamond(),  build_parallelogram(),
            build_augmented_hexagon(), build_dictionary_hexagon(), bm::build_r1(),        bm::build_r2(), bm::build_r1_perp(),
            bm::build_r2_perp()};
}

}  // namespace

TEST(Surface, GluingsAreValid) {
    for (const auto& s : all_surfaces()) EXPECT_TRUE(pairings_valid(s)) << s.name;
}

TEST(Surface, Areas) {
    Field r3 = Field::sqrt3();
    EXPECT_EQ(build_hexagon().area(), Field(3) * r3 / 2);
    EXPECT_EQ(build_square().area(), Field(1));
    EXPECT_EQ(build_diamond().area(), Field(1));
    EXPECT_EQ(build_parallelogram().area(), build_hexagon().area());
    EXPECT_EQ(bm::build_r1().area(), Field(2) * (Field(2) + Field::sqrt2()));
    EXPECT_EQ(bm::build_r1_perp().area(), bm::build_r1().area());
}

TEST(Trace, AgreesWithFloatTracer) {
    Sampler smp(21);
    int compared = 0;
    for (const auto& s : all_surfaces()) {
        Field radical = s.name.rfind("bm", 0) == 0 ? Field::sqrt3() : Field::sqrt2();
        for (int i = 0; i < 40; ++i) {
            Direction d = smp.direction(0.01, 2 * M_PI - 0.01, radical);
            int poly = static_cast<int>(smp.integer(0, static_cast<long>(s.polygons.size()) - 1));
            Trajectory t = smp.trajectory(s, d, poly);
            t.polygon = poly;
            std::string exact;
            try {
                exact = trace(s, t, 40);
            } catch (const VertexHit&) {
                continue;
            } catch (const DomainError&) {
                continue;
            }
            auto approx = oracle::trace(s, oracle::to_pt(t.start), oracle::to_pt(d.vec()), poly, 40);
            if (!approx) continue;
            ++compared;
            EXPECT_EQ(exact, *approx) << s.name << " start " << t.start.to_string() << " dir " << d.vec().to_string();
        }
    }
    EXPECT_GT(compared, 350);
}

TEST(Trace, HexagonHorizontalAndKnownWord) {
    // slope √2 from just below the centre crosses C, B, A in a fixed pattern
    Surface s = build_hexagon();
    Trajectory t{{Field(0), Field::ratio(-1, 4)}, Direction(Field(1), Field::sqrt2())};
    std::string w = trace(s, t, 30);
    auto f = oracle::trace(s, oracle::to_pt(t.start), oracle::to_pt(t.direction.vec()), 0, 30);
    ASSERT_TRUE(f);
    EXPECT_EQ(w, *f);
    EXPECT_EQ(w.size(), 30u);
}

TEST(Trace, RejectsStartOutsideAndVertexHits) {
    Surface s = build_square();
    Trajectory out{{Field(2), Field(2)}, Direction(Field(1), Field::sqrt2())};
    EXPECT_THROW(trace(s, out, 5), DomainError);
    Trajectory diag{{Field::ratio(1, 2), Field::ratio(1, 2)}, Direction(Field(1), Field(1))};
    EXPECT_THROW(trace(s, diag, 5), Error);
}

TEST(CutAndPaste, HexagonToParallelogramTiles) {
    EXPECT_EQ(validate_cut_and_paste(hexagon_to_parallelogram_map()), "");
    EXPECT_EQ(validate_cut_and_paste(bm::upsilon_perp()), "");
}

TEST(CutAndPaste, ApplyInvertsOnSamples) {
    auto m = hexagon_to_parallelogram_map();
    Sampler smp(5);
    for (int i = 0; i < 200; ++i) {
        Vec2 p = smp.point_in(m.source.polygons[0].vertices);
        EXPECT_EQ(m.apply_inverse(m.apply(p)), p);
    }
}

TEST(Cylinders, SquareAndOctagonHorizontal) {
    auto sq = cylinder_decomposition(build_square(), Direction(Field(1), Field(0)));
    EXPECT_EQ(sq.cylinders.size(), 1u);
    auto r1 = cylinder_decomposition(bm::build_r1(), Direction(Field(1), Field(0)));
    ASSERT_EQ(r1.cylinders.size(), 3u);
    for (const auto& c : r1.cylinders) EXPECT_EQ(c.mu, Field(2) + Field::sqrt2());
}

TEST(SurfaceJson, RoundTrip) {
    for (const auto& s : all_surfaces()) {
        auto j = surface_to_json(s);
        Surface back = surface_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(back.area(), s.area()) << s.name;
        EXPECT_EQ(surface_to_json(back), j) << s.name;
    }
}

TEST(SurfaceJson, RejectsBadGluing) {
    auto j = surface_to_json(build_square());
    j["gluings"][0][3] = 1;  // glue bottom to the right side
    EXPECT_THROW(surface_from_json(j), Error);
}
