#include <gtest/gtest.h>

#include <cmath>

#include "float_tracer.hpp"
#include "veech/coding/central.hpp"
#include "veech/coding/derivation.hpp"
#include "veech/verify/sampling.hpp"
#include "veech/verify/suites.hpp"

using namespace veech;

namespace {

bool inside(const Surface& s, oracle::Pt p, double margin) {
    const auto& P = s.polygons[0];
    for (std::size_t k = 0; k < P.size(); ++k) {
        oracle::Pt a = oracle::to_pt(P.vertex(k)), b = oracle::to_pt(P.vertex(k + 1));
        double c = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (c < margin) return false;
    }
    return true;
}

// Pushes p into the hexagon with the translations (3/2, ±√3/2).
std::optional<oracle::Pt> hex_reduce(const Surface& s, oracle::Pt p) {
    double r = std::sqrt(3.0) / 2;
    for (int m = -60; m <= 60; ++m)
        for (int n = -60; n <= 60; ++n) {
            oracle::Pt q{p.x - 1.5 * (m + n), p.y - r * (m - n)};
            if (inside(s, q, 1e-9)) return q;
        }
    return std::nullopt;
}

Trajectory sector0(Sampler& s) {
    return s.trajectory(hexagon::surface(), s.direction_in(SectorScheme::Hexagon, 0, Field::sqrt2()));
}

}  // namespace

TEST(Word, SandwichKeepsLettersBetweenEqualNeighbours) {
    auto d = derive_sandwich("ABACABCB");
    EXPECT_EQ(d.letters, "BCC");
    EXPECT_EQ(d.positions, (std::vector<int>{1, 3, 6}));
    EXPECT_THROW(derive_sandwich("AB"), WindowTooShort);
}

TEST(Word, PermutationCyclesAndInverse) {
    auto p = Permutation::cycles("(ABC)");
    EXPECT_EQ(p('A'), 'B');
    EXPECT_EQ(p('C'), 'A');
    EXPECT_EQ(p.inverse()(p("ABCCBA")), "ABCCBA");
    EXPECT_TRUE(p.permutes("ABC"));
}

TEST(Word, DisplayAndParseRoundTrip) {
    EXPECT_EQ(parse_word("A'B'B'"), "abb");
    EXPECT_EQ(parse_word("A\u2032B"), "aB");
    EXPECT_EQ(display("abC"), "A'B'C");
    EXPECT_THROW(parse_word("A1"), ParseError);
}

TEST(Diagrams, SampledTracesAreAdmissibleInTheirSector) {
    Sampler s(31);
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 25; ++k) {
            Trajectory t = s.trajectory(hexagon::surface(), s.direction_in(SectorScheme::Hexagon, i, Field::sqrt2()));
            Word w = trace(hexagon::surface(), t, 80);
            EXPECT_TRUE(hexagon::diagrams()[static_cast<std::size_t>(i)].admits(w)) << "D" << i << " " << w;
            EXPECT_TRUE(hexagon::diagrams()[0].admits(hexagon::pi(i)(w))) << "pi" << i << " " << w;
        }
}

TEST(Diagrams, NormalFormRejectsAmbiguousWords) {
    EXPECT_THROW(normal_form_word("AAAA"), Ambiguous);
    EXPECT_THROW(normal_form_word("ABCABC"), Ambiguous);
}

TEST(Central, DerivedWordIsRenormalizedTrace) {
    Sampler s(41);
    for (int i = 0; i < 100; ++i) {
        auto c = hexagon::central_case(sector0(s));
        EXPECT_TRUE(c.ok()) << c.word;
    }
}

TEST(Central, AgreesWithFloatRenormalization) {
    const Surface& h = hexagon::surface();
    Sampler s(42);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        Trajectory t = sector0(s);
        Word derived = derive_sandwich(trace(h, t, 60)).letters;
        oracle::Pt p = oracle::to_pt(t.start), d = oracle::to_pt(t.direction.vec());
        double g12 = 2 * std::sqrt(3.0);
        oracle::Pt gp{-p.x + g12 * p.y, p.y}, gd{-d.x + g12 * d.y, d.y};
        auto q = hex_reduce(h, gp);
        ASSERT_TRUE(q);
        auto image = oracle::trace(h, *q, gd, 0, 60);
        if (!image) continue;
        ++compared;
        auto at = image->find(derived);
        EXPECT_TRUE(at != std::string::npos && at <= 3) << derived << " vs " << *image;
    }
    EXPECT_GT(compared, 50);
}

TEST(Generation, DeriveUndoesGenerate) {
    Sampler s(51);
    for (int j = 1; j <= 5; ++j)
        for (int i = 0; i < 40; ++i) {
            Word w = verify::random_path(s, hexagon::diagrams()[static_cast<std::size_t>(j)], 25);
            Word g = generate(w, j, 0);
            EXPECT_TRUE(hexagon::diagrams()[0].admits(g));
            EXPECT_EQ(derive_sandwich(g).letters, w.substr(1, w.size() - 2)) << "D" << j << " " << w;
        }
}

TEST(Generation, SubstitutionMatchesGeneration) {
    Sampler s(52);
    for (int j = 1; j <= 5; ++j)
        for (int i = 0; i < 40; ++i) {
            Word w = verify::random_path(s, hexagon::diagrams()[static_cast<std::size_t>(j)], 25);
            auto a = substitution_apply(j, letters_to_arrows(w, j));
            EXPECT_TRUE(composable(a));
            EXPECT_EQ(arrows_to_letters(a, 0), generate(w, j, 0));
        }
}

TEST(Generation, SubstitutionTablesAreReverseConjugateClosed) {
    for (int i = 1; i <= 5; ++i) {
        const auto& t = substitution_table(i);
        EXPECT_EQ(reverse_conjugate(t[1]), t[3]) << "sigma" << i;
        EXPECT_EQ(reverse_conjugate(t[0]), t[4]) << "sigma" << i;
    }
}

TEST(Characterize, TracedWordsPass) {
    Sampler s(61);
    for (int i = 0; i < 40; ++i) {
        Trajectory t = verify::detail::hex_uniform(s);
        Verdict v = characterize(trace(hexagon::surface(), t, 300), 3);
        EXPECT_NE(v.status, Verdict::Status::Fail) << v.reason;
    }
}

TEST(Characterize, CorruptedWordsFail) {
    Sampler s(62);
    int failed = 0;
    for (int i = 0; i < 40; ++i) {
        Word w = trace(hexagon::surface(), sector0(s), 300);
        w[150] = w[150] == 'A' ? 'B' : 'A';
        w[151] = w[150];
        if (characterize(w, 3).status == Verdict::Status::Fail) ++failed;
    }
    EXPECT_EQ(failed, 40);
}
