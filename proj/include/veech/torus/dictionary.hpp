#pragma once

#include <string>

#include "veech/coding/derivation.hpp"
#include "veech/surface/builtins.hpp"
#include "veech/surface/cut_and_paste.hpp"

namespace veech {

/// Hexagon to parallelogram: the left triangle and the lower right triangle move, the rest stays.
inline CutAndPaste hexagon_to_parallelogram_map() {
    using namespace pts;
    Field h = half(), s = r3h();
    CutAndPaste m;
    m.source = build_hexagon();
    m.target = build_parallelogram();
    m.pieces.push_back({{v(-h, -s), v(1, 0), v(h, s), v(-h, s)}, v(0, 0)});
    m.pieces.push_back({{v(-1, 0), v(-h, -s), v(-h, s)}, v(Field::ratio(3, 2), s)});
    m.pieces.push_back({{v(-h, -s), v(h, -s), v(1, 0)}, v(Field(0), Field::sqrt3())});
    return m;
}

/// Parallelogram coding of a hexagon word admissible in D0: e and f crossings are interpolated,
/// hexagon letters dropped, e read as B' and f as A'.
inline Word hex_to_parallelogram(const Word& w) {
    Word aug = hexagon::dictionary_d0().interpolate(w), out;
    for (char c : aug) {
        if (c == 'e') out += 'b';
        else if (c == 'f') out += 'a';
    }
    return out;
}

/// Word of a trajectory in Σᵢ: πᵢ brings it to D0 first.
inline Word hex_to_parallelogram(const Word& w, int sector) { return hex_to_parallelogram(hexagon::pi(sector)(w)); }

/// Same, with the sector read off the word. Throws Ambiguous when several diagrams admit it.
inline Word hex_to_parallelogram_any(const Word& w) { return hex_to_parallelogram(normal_form_word(w).word); }

struct NoncommutationReport {
    Word word;                  // periodic BC window
    Word derived;               // sandwich derivative of word
    Word dictionary;            // dictionary of word
    Word derived_dictionary;    // derivative of the dictionary word
    Word dictionary_derived;    // dictionary of the derivative

    bool derived_is_shift() const { return word.find(derived) != Word::npos; }
    bool witnessed() const { return derived_dictionary != dictionary_derived; }
};

/// The horizontal trajectory through the midpoints of B and C.
inline NoncommutationReport noncommutation_witness(int periods = 6) {
    NoncommutationReport r;
    for (int i = 0; i < periods; ++i) r.word += "BC";
    r.derived = derive_sandwich(r.word).letters;
    r.dictionary = hex_to_parallelogram(r.word);
    r.derived_dictionary = derive_sandwich(r.dictionary).letters;
    r.dictionary_derived = hex_to_parallelogram(r.derived);
    return r;
}

}  // namespace veech
