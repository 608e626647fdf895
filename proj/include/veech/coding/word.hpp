#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "veech/core/error.hpp"

namespace veech {

/// A finite window of a bi-infinite sequence. Primed letters are stored lowercase.
using Word = std::string;

/// Display form: lowercase letters become primed capitals.
inline std::string display(const Word& w) {
    std::string out;
    for (char c : w) {
        if (c >= 'a' && c <= 'z') {
            out += static_cast<char>(c - 'a' + 'A');
            out += '\'';
        } else {
            out += c;
        }
    }
    return out;
}

/// Inverse of display; accepts A' and A′ for a primed letter.
inline Word parse_word(const std::string& s) {
    Word out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == ' ' || c == ',' || c == '\n' || c == '\t' || c == '\r') continue;
        bool primed = false;
        if (i + 1 < s.size() && s[i + 1] == '\'') {
            primed = true;
            ++i;
        } else if (i + 3 < s.size() + 1 && s.compare(i + 1, 3, "\xE2\x80\xB2") == 0) {
            primed = true;
            i += 3;
        }
        if (!(c >= 'A' && c <= 'Z') && !(c >= 'a' && c <= 'z')) throw ParseError(std::string("bad letter '") + c + "'");
        out += primed && c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
    }
    return out;
}

struct Derived {
    Word letters;
    std::vector<int> positions;  // index in the input of every kept letter
};

/// Keeps the letters whose two neighbours agree. End letters have an unknown neighbour and are dropped.
inline Derived derive_sandwich(const Word& w) {
    if (w.size() < 3) throw WindowTooShort("derivation needs at least three letters");
    Derived d;
    for (std::size_t j = 1; j + 1 < w.size(); ++j)
        if (w[j - 1] == w[j + 1]) {
            d.letters += w[j];
            d.positions.push_back(static_cast<int>(j));
        }
    return d;
}

/// Letter relabelling.
class Permutation {
public:
    Permutation() = default;

    /// Cycle notation such as "(AC)(BD)"; "id" or "" is the identity.
    static Permutation cycles(const std::string& text) {
        Permutation p;
        if (text == "id") return p;
        std::string cur;
        auto close = [&] {
            for (std::size_t i = 0; i < cur.size(); ++i) p.map_[cur[i]] = cur[(i + 1) % cur.size()];
            cur.clear();
        };
        for (char c : text) {
            if (c == '(') cur.clear();
            else if (c == ')') close();
            else cur += c;
        }
        return p;
    }

    static Permutation from_map(std::map<char, char> m) {
        Permutation p;
        for (auto [a, b] : m)
            if (a != b) p.map_[a] = b;
        return p;
    }

    char operator()(char c) const {
        auto it = map_.find(c);
        return it == map_.end() ? c : it->second;
    }

    Word operator()(const Word& w) const {
        Word out = w;
        for (auto& c : out) c = (*this)(c);
        return out;
    }

    Permutation inverse() const {
        Permutation p;
        for (auto [a, b] : map_) p.map_[b] = a;
        return p;
    }

    /// (p * q)(x) = p(q(x))
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        std::map<char, char> m;
        for (auto [a, b] : q.map_) m[a] = p(b);
        for (auto [a, b] : p.map_)
            if (!q.map_.count(a)) m[a] = b;
        return from_map(m);
    }

    friend bool operator==(const Permutation& p, const Permutation& q) { return p.map_ == q.map_; }

    std::string to_string() const {
        std::string out;
        std::map<char, bool> seen;
        for (auto [a, b] : map_) {
            if (seen[a]) continue;
            out += '(';
            char c = a;
            do {
                out += c;
                seen[c] = true;
                c = (*this)(c);
            } while (c != a);
            out += ')';
        }
        return out.empty() ? "id" : out;
    }

    /// True when the map is a bijection of `alphabet`.
    bool permutes(const std::string& alphabet) const {
        std::string img;
        for (char c : alphabet) img += (*this)(c);
        std::string a = alphabet, b = img;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

private:
    std::map<char, char> map_;
};

inline Word permute_word(const Word& w, const Permutation& p) { return p(w); }

/// Smallest offset in [0, max_offset] with text.substr(offset) starting with core, or -1.
inline int aligned_offset(const Word& core, const Word& text, int max_offset) {
    for (int off = 0; off <= max_offset; ++off) {
        if (static_cast<std::size_t>(off) + core.size() > text.size()) break;
        if (text.compare(static_cast<std::size_t>(off), core.size(), core) == 0) return off;
    }
    return -1;
}

}  // namespace veech
