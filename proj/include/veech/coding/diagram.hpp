#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veech/coding/word.hpp"

namespace veech {

/// Directed graph on letters; an arrow may carry a string interpolated between its endpoints.
struct TransitionDiagram {
    struct Arrow {
        char from, to;
        std::string label;
    };

    std::string name;
    std::string nodes;
    std::vector<Arrow> arrows;

    const Arrow* find(char a, char b) const {
        for (const auto& ar : arrows)
            if (ar.from == a && ar.to == b) return &ar;
        return nullptr;
    }
    bool has(char a, char b) const { return find(a, b) != nullptr; }
    bool has_node(char c) const { return nodes.find(c) != std::string::npos; }

    /// Every letter is a node and every transition an arrow.
    bool admits(const Word& w) const {
        for (char c : w)
            if (!has_node(c)) return false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!has(w[i], w[i + 1])) return false;
        return true;
    }

    /// Set of transitions, as two-letter strings.
    std::set<std::string> transitions() const {
        std::set<std::string> out;
        for (const auto& a : arrows) out.insert(std::string{a.from, a.to});
        return out;
    }

    /// Interpolates arrow labels into w. Throws when w is not a path.
    Word interpolate(const Word& w) const {
        if (!admits(w)) throw NotAdmissible(name + " does not admit " + display(w));
        Word out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            out += w[i];
            if (i + 1 < w.size()) out += find(w[i], w[i + 1])->label;
        }
        return out;
    }

    TransitionDiagram relabelled(const Permutation& p, std::string new_name) const {
        TransitionDiagram d;
        d.name = std::move(new_name);
        d.nodes = p(nodes);
        for (const auto& a : arrows) d.arrows.push_back({p(a.from), p(a.to), p(a.label)});
        return d;
    }
};

inline std::vector<int> admissible_diagrams(const Word& w, const std::vector<TransitionDiagram>& family) {
    std::vector<int> out;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family[i].admits(w)) out.push_back(static_cast<int>(i));
    return out;
}

/// Transitions occurring in w.
inline std::set<std::string> transitions_of(const Word& w) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) out.insert(w.substr(i, 2));
    return out;
}

/// Labels found between consecutive letters of `keep` in an augmented word, keyed by transition.
/// Returns nullopt when one transition is followed by two different labels.
inline std::optional<std::map<std::string, std::string>> read_augmentation(const Word& augmented, const std::string& keep) {
    std::map<std::string, std::string> out;
    std::optional<char> prev;
    std::string between;
    for (char c : augmented) {
        if (keep.find(c) == std::string::npos) {
            between += c;
            continue;
        }
        if (prev) {
            std::string key{*prev, c};
            auto it = out.find(key);
            if (it != out.end() && it->second != between) return std::nullopt;
            out[key] = between;
        }
        prev = c;
        between.clear();
    }
    return out;
}

}  // namespace veech
