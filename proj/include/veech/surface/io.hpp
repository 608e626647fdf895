#pragma once

#include <string>

#include "veech/exact/json.hpp"
#include "veech/surface/presentation.hpp"

namespace veech {

// {"name": ..., "polygons": [[[x, y], ...], ...], "gluings": [[p, i, q, j, "A"], ...]}
// Coordinates use the field-element encoding of exact/json.hpp or strings such as "sqrt3/2".
// An empty label marks an unlabelled (silent) side.

inline nlohmann::json surface_to_json(const Surface& s) {
    nlohmann::json j = {{"name", s.name}, {"polygons", nlohmann::json::array()}, {"gluings", nlohmann::json::array()}};
    for (const auto& P : s.polygons) {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : P.vertices) verts.push_back(nlohmann::json::array({v.x.to_string(), v.y.to_string()}));
        j["polygons"].push_back(verts);
    }
    for (std::size_t k = 0; k < s.sides.size(); ++k) {
        const Side& a = s.sides[k];
        if (a.partner < static_cast<int>(k)) continue;
        const Side& b = s.sides[static_cast<std::size_t>(a.partner)];
        j["gluings"].push_back({a.polygon, a.index, b.polygon, b.index, a.label == kSilent ? std::string() : std::string(1, a.label)});
    }
    j["area"] = s.area().to_string();
    return j;
}

inline Surface surface_from_json(const nlohmann::json& j) {
    try {
        SurfaceBuilder b(j.value("name", std::string("custom")));
        for (const auto& poly : j.at("polygons")) {
            std::vector<Vec2> verts;
            for (const auto& v : poly) verts.push_back(v.get<Vec2>());
            b.add_polygon(std::move(verts));
        }
        for (const auto& g : j.at("gluings")) {
            std::string label = g.at(4).get<std::string>();
            if (label.size() > 1) throw ParseError("labels are single letters: '" + label + "'");
            b.glue(g.at(0).get<int>(), g.at(1).get<int>(), g.at(2).get<int>(), g.at(3).get<int>(), label.empty() ? kSilent : label[0]);
        }
        return b.build();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("surface JSON: ") + e.what());
    }
}

}  // namespace veech
