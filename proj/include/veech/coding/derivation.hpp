#pragma once

#include <string>
#include <vector>

#include "veech/coding/hexagon.hpp"

namespace veech {

struct NormalForm {
    Word word;
    int diagram;
};

/// πₖ·w for the unique hexagon diagram Dₖ admitting w.
inline NormalForm normal_form_word(const Word& w) {
    auto adm = admissible_diagrams(w, hexagon::diagrams());
    if (adm.size() != 1) throw Ambiguous(adm);
    return {hexagon::pi(adm.front())(w), adm.front()};
}

/// 𝔤ⱼⁱ w = πᵢ⁻¹ · 𝔤ⱼ⁰ w.
inline Word generate(const Word& w, int from_diagram, int to_sector) {
    Word base = hexagon::generation_diagram(from_diagram).interpolate(w);
    return hexagon::pi(to_sector).inverse()(base);
}

// ---- arrows of the common shape ----

enum class ShapeArrow { W1, W2, W3, W2bar, W1bar };

using ArrowWord = std::vector<ShapeArrow>;

inline ShapeArrow conjugate(ShapeArrow a) {
    switch (a) {
        case ShapeArrow::W1: return ShapeArrow::W1bar;
        case ShapeArrow::W1bar: return ShapeArrow::W1;
        case ShapeArrow::W2: return ShapeArrow::W2bar;
        case ShapeArrow::W2bar: return ShapeArrow::W2;
        default: return ShapeArrow::W3;
    }
}

/// 0 left, 1 middle, 2 right
inline int arrow_source(ShapeArrow a) {
    switch (a) {
        case ShapeArrow::W1: return 0;
        case ShapeArrow::W2: return 1;
        case ShapeArrow::W1bar: return 1;
        default: return 2;
    }
}

inline int arrow_target(ShapeArrow a) {
    switch (a) {
        case ShapeArrow::W1: return 1;
        case ShapeArrow::W2bar: return 1;
        case ShapeArrow::W1bar: return 0;
        default: return 2;
    }
}

inline std::string arrow_name(ShapeArrow a) {
    static const char* names[] = {"w1", "w2", "w3", "w2~", "w1~"};
    return names[static_cast<int>(a)];
}

inline std::string arrows_to_string(const ArrowWord& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? " " : "") + arrow_name(a[i]);
    return out;
}

inline bool composable(const ArrowWord& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (arrow_target(a[i]) != arrow_source(a[i + 1])) return false;
    return true;
}

inline ArrowWord reverse_conjugate(const ArrowWord& a) {
    ArrowWord out;
    for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(conjugate(*it));
    return out;
}

/// Rewrite rules σ₁..σ₅, rows ordered w1, w2, w3, w̄2, w̄1.
inline const std::array<ArrowWord, 5>& substitution_table(int i) {
    using A = ShapeArrow;
    static const std::array<std::array<ArrowWord, 5>, 6> table = {{
        {},
        {{{A::W1bar}, {A::W1, A::W2, A::W3}, {A::W3}, {A::W3, A::W2bar, A::W1bar}, {A::W1}}},
        {{{A::W2, A::W3},
          {A::W3, A::W2bar, A::W1bar},
          {A::W1, A::W2, A::W3, A::W2bar, A::W1bar},
          {A::W1, A::W2, A::W3},
          {A::W3, A::W2bar}}},
        {{{A::W3, A::W2bar},
          {A::W2, A::W3, A::W2bar, A::W1bar},
          {A::W1, A::W2, A::W3, A::W2bar, A::W1bar},
          {A::W1, A::W2, A::W3, A::W2bar},
          {A::W2, A::W3}}},
        {{{A::W2bar, A::W1bar},
          {A::W1, A::W2, A::W3, A::W2bar},
          {A::W2, A::W3, A::W2bar},
          {A::W2, A::W3, A::W2bar, A::W1bar},
          {A::W1, A::W2}}},
        {{{A::W1, A::W2}, {A::W2bar}, {A::W2, A::W3, A::W2bar}, {A::W2}, {A::W2bar, A::W1bar}}},
    }};
    if (i < 1 || i > 5) throw DomainError("substitutions are indexed 1..5");
    return table[static_cast<std::size_t>(i)];
}

inline ArrowWord substitution_apply(int i, const ArrowWord& a) {
    if (!composable(a)) throw NotAdmissible("arrow word is not a path: " + arrows_to_string(a));
    ArrowWord out;
    const auto& rows = substitution_table(i);
    for (auto x : a) {
        const auto& img = rows[static_cast<std::size_t>(x)];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

/// Arrow names of the transitions of w inside D_{s0}.
inline ArrowWord letters_to_arrows(const Word& w, int s0) {
    const auto& sh = hexagon::shape(s0);
    auto pos = [&](char c) {
        if (c == sh.left) return 0;
        if (c == sh.middle) return 1;
        if (c == sh.right) return 2;
        throw NotAdmissible(std::string("letter ") + c + " is not in D" + std::to_string(s0));
    };
    ArrowWord out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = pos(w[i]), b = pos(w[i + 1]);
        if (a == 0 && b == 1) out.push_back(ShapeArrow::W1);
        else if (a == 1 && b == 2) out.push_back(ShapeArrow::W2);
        else if (a == 2 && b == 2) out.push_back(ShapeArrow::W3);
        else if (a == 2 && b == 1) out.push_back(ShapeArrow::W2bar);
        else if (a == 1 && b == 0) out.push_back(ShapeArrow::W1bar);
        else throw NotAdmissible(display(w.substr(i, 2)) + " is not a transition of D" + std::to_string(s0));
    }
    return out;
}

/// Follows the path of `a` in D_{s0}.
inline Word arrows_to_letters(const ArrowWord& a, int s0) {
    if (a.empty()) throw DomainError("empty arrow word");
    if (!composable(a)) throw NotAdmissible("arrow word is not a path: " + arrows_to_string(a));
    const auto& sh = hexagon::shape(s0);
    const char at[3] = {sh.left, sh.middle, sh.right};
    Word out{at[arrow_source(a.front())]};
    for (auto x : a) out += at[arrow_target(x)];
    return out;
}

// ---- characterization ----

struct Verdict {
    enum class Status { Pass, Fail, Ambiguous } status = Status::Pass;
    std::vector<int> prefix;   // s0, s1, ...
    int failing_step = -1;
    std::string reason;
};

inline std::string to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Pass: return "PASS";
        case Verdict::Status::Fail: return "FAIL";
        default: return "AMBIGUOUS";
    }
}

/// Checks that w lies in the depth-k generation image: each round normalizes, derives, and regenerates
/// the normalized window from the derived one.
inline Verdict characterize(const Word& w, int depth) {
    Verdict v;
    Word cur = w;
    for (int k = 0; k <= depth; ++k) {
        auto adm = admissible_diagrams(cur, hexagon::diagrams());
        if (adm.empty()) {
            v.status = Verdict::Status::Fail;
            v.failing_step = k;
            v.reason = "not admissible in any diagram";
            return v;
        }
        if (adm.size() > 1) {
            v.status = Verdict::Status::Ambiguous;
            v.failing_step = k;
            v.reason = "admissible in several diagrams";
            return v;
        }
        int s = adm.front();
        if (k > 0 && s == 0) {
            v.status = Verdict::Status::Fail;
            v.failing_step = k;
            v.reason = "derived word admissible only in D0";
            return v;
        }
        v.prefix.push_back(s);
        if (k == depth) break;
        Word n = hexagon::pi(s)(cur);
        if (n.size() < 3) {
            v.status = Verdict::Status::Fail;
            v.failing_step = k;
            v.reason = "window exhausted";
            return v;
        }
        Derived d = derive_sandwich(n);
        if (d.letters.size() < 2) {
            v.status = Verdict::Status::Fail;
            v.failing_step = k + 1;
            v.reason = "window exhausted";
            return v;
        }
        auto adm_next = admissible_diagrams(d.letters, hexagon::diagrams());
        if (adm_next.size() == 1 && adm_next.front() != 0) {
            Word regen = hexagon::generation_diagram(adm_next.front()).interpolate(d.letters);
            std::size_t from = static_cast<std::size_t>(d.positions.front());
            std::size_t to = static_cast<std::size_t>(d.positions.back());
            if (regen != n.substr(from, to - from + 1)) {
                v.status = Verdict::Status::Fail;
                v.failing_step = k + 1;
                v.reason = "generation does not rebuild the normalized window";
                return v;
            }
        }
        cur = d.letters;
    }
    return v;
}

}  // namespace veech
