#pragma once

#include <array>

#include "veech/coding/word.hpp"
#include "veech/exact/direction.hpp"

namespace veech::bm {

inline constexpr int kSectors = 16;

/// νᵢ sends Σᵢ = [π - (i+1)π/8, π - iπ/8] onto Σ0 and the octagon onto itself.
inline const Mat2& nu(int i) {
    static const std::array<Mat2, 16> table = [] {
        Field c = Field::sqrt2() / 2;
        std::array<Mat2, 16> t;
        t[0] = {1, 0, 0, 1};
        t[1] = {c, -c, -c, -c};
        t[2] = {c, -c, c, c};
        t[3] = {0, -1, -1, 0};
        t[4] = {0, -1, 1, 0};
        t[5] = {-c, -c, -c, c};
        t[6] = {-c, -c, c, -c};
        t[7] = {-1, 0, 0, 1};
        Mat2 r1{1, 0, 0, -1};
        for (int k = 8; k < 16; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(15 - k)] * r1;
        return t;
    }();
    return table.at(static_cast<std::size_t>(i));
}

/// Label permutation induced by νᵢ on the sides of R1.
inline const Permutation& pi(int i) {
    static const std::array<Permutation, 16> table = {
        Permutation::cycles("id"),
        Permutation::cycles("(AD)(BC)(EH)(FG)"),
        Permutation::cycles("(ABCDEFGH)"),
        Permutation::cycles("(AC)(DH)(EG)"),
        Permutation::cycles("(ACEG)(BDFH)"),
        Permutation::cycles("(AB)(CH)(DG)(EF)"),
        Permutation::cycles("(ADGBEHCF)"),
        Permutation::cycles("(BH)(CG)(DF)"),
        Permutation::cycles("(AE)(BF)(CG)(DH)"),
        Permutation::cycles("(AH)(BG)(CF)(DE)"),
        Permutation::cycles("(AFCHEBGD)"),
        Permutation::cycles("(AG)(BF)(CE)"),
        Permutation::cycles("(AGEC)(BHFD)"),
        Permutation::cycles("(AF)(BE)(CD)(GH)"),
        Permutation::cycles("(AHGFEDCB)"),
        Permutation::cycles("(AE)(BD)(FH)"),
    };
    return table.at(static_cast<std::size_t>(i));
}

}  // namespace veech::bm
