#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "veech/coding/word.hpp"

namespace veech {

/// Runs of a block letter separated by single occurrences of a separator letter.
struct SturmianBlockForm {
    char block = 'B';
    char separator = 'A';
    int n0 = 0;
    std::vector<int> lengths;  // complete blocks, in order

    Word decode() const {
        Word out(1, separator);
        for (int n : lengths) {
            out.append(static_cast<std::size_t>(n), block);
            out += separator;
        }
        return out;
    }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> separator_span(const Word& w, char sep) {
    std::size_t first = w.find(sep), last = w.rfind(sep);
    if (first == Word::npos || first == last) throw WindowTooShort("window holds no complete block");
    return {first, last};
}

inline std::vector<int> block_lengths(const Word& w, char block, char sep) {
    auto [first, last] = separator_span(w, sep);
    std::vector<int> out;
    int run = 0;
    for (std::size_t i = first + 1; i <= last; ++i) {
        if (w[i] == block) ++run;
        else if (w[i] == sep) {
            out.push_back(run);
            run = 0;
        } else {
            throw DomainError(std::string("letter ") + w[i] + " is neither block nor separator");
        }
    }
    return out;
}

inline bool repeats(const Word& w, char c) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == c && w[i + 1] == c) return true;
    return false;
}

}  // namespace detail

/// Block structure of a two-letter window. Partial blocks at both ends are ignored.
inline SturmianBlockForm sturmian_block_form(const Word& w) {
    std::string letters = w;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.size() != 2) throw DomainError("expected exactly two letters, got \"" + letters + "\"");
    bool r0 = detail::repeats(w, letters[0]), r1 = detail::repeats(w, letters[1]);
    if (r0 && r1) throw DomainError("both letters repeat: not a block form");
    if (!r0 && !r1) throw DomainError("neither letter repeats: block letter undetermined");
    SturmianBlockForm f;
    f.block = r0 ? letters[0] : letters[1];
    f.separator = r0 ? letters[1] : letters[0];
    f.lengths = detail::block_lengths(w, f.block, f.separator);
    if (f.lengths.empty()) throw WindowTooShort("window holds no complete block");
    auto [lo, hi] = std::minmax_element(f.lengths.begin(), f.lengths.end());
    if (*hi - *lo > 1) throw DomainError("block lengths " + std::to_string(*lo) + " and " + std::to_string(*hi) + " differ by more than one");
    f.n0 = *lo;
    return f;
}

inline Word swap_letters(const Word& w, char a, char b) {
    Word out = w;
    for (auto& c : out) c = c == a ? b : c == b ? a : c;
    return out;
}

/// Removes one block letter from every complete block; the window is cut to its outer separators.
inline Word single_step_derive(const Word& w, char block, char separator) {
    auto lengths = detail::block_lengths(w, block, separator);
    Word out(1, separator);
    for (int n : lengths) {
        out.append(static_cast<std::size_t>(std::max(n - 1, 0)), block);
        out += separator;
    }
    return out;
}

/// Shortens every block by n0, then exchanges the two letters.
inline Word series_derive(const Word& w) {
    SturmianBlockForm f = sturmian_block_form(w);
    Word out(1, f.separator);
    for (int n : f.lengths) {
        out.append(static_cast<std::size_t>(n - f.n0), f.block);
        out += f.separator;
    }
    return swap_letters(out, f.block, f.separator);
}

}  // namespace veech
