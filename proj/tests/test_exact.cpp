#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "veech/exact/direction.hpp"
#include "veech/exact/field.hpp"
#include "veech/verify/sampling.hpp"

using namespace veech;

namespace {

Field random_field(std::mt19937_64& g, long range = 40) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 9);
    return Field(Rational(num(g), den(g)), Rational(num(g), den(g)), Rational(num(g), den(g)), Rational(num(g), den(g)));
}

long double value(const Field& x) {
    long double r2 = std::sqrt(2.0L), r3 = std::sqrt(3.0L);
    return x[0].get_d() + x[1].get_d() * r2 + x[2].get_d() * r3 + x[3].get_d() * r2 * r3;
}

}  // namespace

TEST(Field, RadicalsSquare) {
    EXPECT_EQ(Field::sqrt2() * Field::sqrt2(), Field(2));
    EXPECT_EQ(Field::sqrt3() * Field::sqrt3(), Field(3));
    EXPECT_EQ(Field::sqrt6() * Field::sqrt6(), Field(6));
    EXPECT_EQ(Field::sqrt2() * Field::sqrt3(), Field::sqrt6());
}

TEST(Field, RingAxiomsOnRandomElements) {
    std::mt19937_64 g(11);
    for (int i = 0; i < 300; ++i) {
        Field a = random_field(g), b = random_field(g), c = random_field(g);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * (b * c), (a * b) * c);
        EXPECT_EQ(a - a, Field());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Field(1));
        }
    }
}

TEST(Field, SignAgreesWithLongDouble) {
    std::mt19937_64 g(12);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        Field a = random_field(g);
        long double v = value(a);
        if (std::abs(v) < 1e-9) continue;
        ++checked;
        EXPECT_EQ(a.sign(), v > 0 ? 1 : -1) << a;
        EXPECT_EQ(a.sign(), a.exact_sign()) << a;
    }
    EXPECT_GT(checked, 1900);
}

TEST(Field, SignOfNearCancellation) {
    // 1 + √2 - √3 - √6/… style values close to zero
    Field x = Field(99) * Field::sqrt2() - Field(140);  // 99√2 ≈ 140.0071
    EXPECT_EQ(x.sign(), 1);
    Field y = Field(577) - Field(408) * Field::sqrt2();  // ≈ 0.0012
    EXPECT_EQ(y.sign(), 1);
    EXPECT_EQ((-y).sign(), -1);
    Field z = Field(5) + Field(2) * Field::sqrt6() - (Field::sqrt2() + Field::sqrt3()) * (Field::sqrt2() + Field::sqrt3());
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.sign(), 0);
}

TEST(Field, ParseAndPrintRoundTrip) {
    std::mt19937_64 g(13);
    for (int i = 0; i < 200; ++i) {
        Field a = random_field(g);
        EXPECT_EQ(Field::parse(a.to_string()), a) << a.to_string();
    }
    EXPECT_EQ(Field::parse("sqrt3/2"), Field::sqrt3() / 2);
    EXPECT_EQ(Field::parse("1/2 - 3*sqrt2"), Field::ratio(1, 2) - Field(3) * Field::sqrt2());
    EXPECT_EQ(Field::parse("-r6"), -Field::sqrt6());
    EXPECT_THROW(Field::parse("sqrt5"), Error);
    EXPECT_THROW(Field::parse(""), Error);
}

TEST(Direction, HexagonSectors) {
    Direction d(Field(1), Field::ratio(1, 10));
    EXPECT_EQ(sector_of(d, SectorScheme::Hexagon).index(), 0);
    EXPECT_EQ(sector_of(Direction(Field(1), Field(1)), SectorScheme::Hexagon).index(), 1);
    EXPECT_EQ(sector_of(Direction(Field(-1), Field(1)), SectorScheme::Hexagon).index(), 4);
    EXPECT_TRUE(sector_of(Direction(Field(0), Field(1)), SectorScheme::Hexagon).boundary);
    Direction edge(Field(1), Field::sqrt3());  // π/3
    EXPECT_TRUE(sector_of(edge, SectorScheme::Hexagon).boundary);
    EXPECT_THROW(sector_of(edge, SectorScheme::Hexagon).index(), BoundaryDirection);
}

TEST(Direction, SectorsPartitionSampledAngles) {
    Sampler s(3);
    for (int i = 0; i < 500; ++i) {
        Direction d = s.direction(0.0001, M_PI - 0.0001, Field::sqrt2());
        int k = sector_of(d, SectorScheme::Hexagon).index();
        EXPECT_EQ(k, static_cast<int>(std::floor(d.angle() / (M_PI / 6))));
        Direction b = s.direction(0.0001, 2 * M_PI - 0.0001, Field::sqrt3());
        int j = sector_of(b, SectorScheme::BouwMoller).index();
        double a = b.angle() < 0 ? b.angle() + 2 * M_PI : b.angle();
        // Σⱼ = [π - (j+1)π/8, π - jπ/8] modulo 2π
        double lo = M_PI - (j + 1) * M_PI / 8;
        double rel = std::fmod(a - lo + 4 * M_PI, 2 * M_PI);
        EXPECT_LT(rel, M_PI / 8 + 1e-12) << "sector " << j << " angle " << a;
    }
}

TEST(Mat2, InverseAndDeterminant) {
    Mat2 m{1, Field(2) * Field::sqrt3(), 0, 1};
    EXPECT_EQ(m * m.inverse(), Mat2::identity());
    EXPECT_EQ(m.det(), Field(1));
    ScaledMatrix s{Mat2{Field::sqrt2() / 2, 0, 0, Field::sqrt3() / 2}, Field(2) * Field::sqrt6() / 3};
    EXPECT_EQ(s.det(), Field(1));
}
