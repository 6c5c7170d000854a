#pragma once

// JSON interchange formats:
//   complex: {"genus", "generators":[{"name","alexander","maslov"}...],
//             "differential":[{"from","to","u_power"}...]}
//   flip:    {"entries":[{"from","to","u_power"}...]}
//   graph:   {"vertices":[{"name","weight"}...], "edges":[["a","b"]...]}

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "complex.hpp"
#include "flip.hpp"
#include "plumbing.hpp"

namespace floerkit {

using nlohmann::json;

inline json complex_to_json(const BifilteredComplex& c) {
    json j;
    j["genus"] = c.genus;
    j["generators"] = json::array();
    for (const auto& g : c.generators)
        j["generators"].push_back({{"name", g.name}, {"alexander", g.alexander}, {"maslov", g.maslov}});
    j["differential"] = json::array();
    for (const auto& e : c.differential)
        j["differential"].push_back({{"from", e.from}, {"to", e.to}, {"u_power", e.u_power}});
    return j;
}

inline BifilteredComplex complex_from_json(const json& j) {
    BifilteredComplex c;
    c.genus = j.at("genus").get<int>();
    c.reduced = j.value("reduced", true);
    for (const auto& g : j.at("generators"))
        c.generators.push_back({g.at("name").get<std::string>(), g.at("alexander").get<int>(),
                                g.at("maslov").get<int>()});
    for (const auto& e : j.at("differential"))
        c.differential.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                                  e.at("u_power").get<int>()});
    return c;
}

inline json flip_to_json(const FlipMap& f) {
    json j;
    j["entries"] = json::array();
    for (const auto& e : f.entries)
        j["entries"].push_back({{"from", e.from}, {"to", e.to}, {"u_power", e.u_power}});
    return j;
}

inline FlipMap flip_from_json(const json& j) {
    FlipMap f;
    for (const auto& e : j.at("entries"))
        f.entries.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                             e.at("u_power").get<int>()});
    return f;
}

inline json graph_to_json(const PlumbingGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& [name, w] : g.vertices)
        j["vertices"].push_back({{"name", name}, {"weight", w}});
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back(json::array({a, b}));
    return j;
}

inline PlumbingGraph graph_from_json(const json& j) {
    PlumbingGraph g;
    for (const auto& v : j.at("vertices"))
        g.vertices.push_back({v.at("name").get<std::string>(), v.at("weight").get<int>()});
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    return g;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace floerkit
