#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace veech {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("singular matrix") {}
};

/// The trajectory reaches a polygon vertex at crossing `index`.
struct VertexHit : Error {
    int index;
    explicit VertexHit(int i) : Error("trajectory hits a vertex at crossing " + std::to_string(i)), index(i) {}
};

/// A direction lies on a sector boundary (periodic direction).
struct BoundaryDirection : Error {
    std::vector<int> sectors;
    explicit BoundaryDirection(std::vector<int> s, const std::string& what = "direction on a sector boundary")
        : Error(what), sectors(std::move(s)) {}
};

struct NotAdmissible : Error {
    using Error::Error;
};

/// The word is admissible in several diagrams, so no normal form exists.
struct Ambiguous : Error {
    std::vector<int> diagrams;
    explicit Ambiguous(std::vector<int> d) : Error(describe(d)), diagrams(std::move(d)) {}

private:
    static std::string describe(const std::vector<int>& d) {
        std::string s = "word admissible in ";
        if (d.empty()) return s + "no diagram";
        s += "diagrams {";
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + "}";
    }
};

struct WindowTooShort : Error {
    using Error::Error;
};

struct InvalidSurface : Error {
    using Error::Error;
};

}  // namespace veech
