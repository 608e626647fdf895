#pragma once

#include <json.hpp>

#include "veech/exact/direction.hpp"

namespace veech {

// A field element is the array of its four coefficients on {1, √2, √3, √6}, each "p/q".
inline void to_json(nlohmann::json& j, const Field& x) {
    j = nlohmann::json::array();
    for (const auto& q : x.coeffs()) j.push_back(q.get_str());
}

inline void from_json(const nlohmann::json& j, Field& x) {
    if (j.is_string()) {
        x = Field::parse(j.get<std::string>());
        return;
    }
    if (!j.is_array() || j.size() != 4) throw ParseError("field element must be an array of four rationals");
    std::array<Rational, 4> c;
    for (std::size_t i = 0; i < 4; ++i) {
        if (j[i].is_number_integer()) {
            c[i] = Rational(mpz_class(std::to_string(j[i].get<long long>())));
            continue;
        }
        c[i] = Rational(j[i].get<std::string>());
        c[i].canonicalize();
    }
    x = Field(c[0], c[1], c[2], c[3]);
}

inline void to_json(nlohmann::json& j, const Vec2& v) { j = nlohmann::json::array({v.x, v.y}); }
inline void from_json(const nlohmann::json& j, Vec2& v) {
    v.x = j.at(0).get<Field>();
    v.y = j.at(1).get<Field>();
}

inline void to_json(nlohmann::json& j, const Mat2& m) {
    j = nlohmann::json::array({nlohmann::json::array({m.a, m.b}), nlohmann::json::array({m.c, m.d})});
}

inline void to_json(nlohmann::json& j, const ScaledMatrix& m) { j = {{"shape", m.shape}, {"scale_sq", m.scale_sq}}; }

inline void to_json(nlohmann::json& j, const Direction& d) {
    j = {{"vector", d.vec()}, {"angle", d.angle()}};
}

/// Human-readable exact value next to its float shadow.
inline nlohmann::json describe(const Field& x) { return {{"exact", x.to_string()}, {"approx", x.to_double()}}; }

}  // namespace veech
