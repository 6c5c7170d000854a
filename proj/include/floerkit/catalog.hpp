#pragma once

// Shipped fixtures: unknot, the (2,3) and (2,-3) torus knot staircases, the
// figure-eight model, the 11-generator cable complex with its flip map, and
// the 13-generator reduced core complex ("table1"). Generators are pinned at
// i = 0 throughout; Maslov gradings of drawn translates are recovered as
// maslov - 2i.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "flip.hpp"

namespace floerkit {

struct CatalogEntry {
    BifilteredComplex complex;
    std::optional<FlipMap> flip;
};

inline std::vector<std::string> catalog_names() {
    return {"unknot", "t23", "t-23", "fig8", "cable", "table1"};
}

inline CatalogEntry catalog_get(const std::string& name) {
    CatalogEntry e;
    auto& c = e.complex;
    c.reduced = true;
    if (name == "unknot") {
        c.generators = {{"u", 0, 0}};
        c.genus = 0;
        e.flip = FlipMap{{{"u", "u", 0}}};
    } else if (name == "t23") {
        c.generators = {{"x", 1, 0}, {"y", 0, -1}, {"z", -1, -2}};
        c.differential = {{"y", "z", 0}, {"y", "x", 1}};
        c.genus = 1;
        e.flip = FlipMap{{{"x", "z", -1}, {"y", "y", 0}, {"z", "x", 1}}};
    } else if (name == "t-23") {
        c.generators = {{"x", -1, 0}, {"y", 0, 1}, {"z", 1, 2}};
        c.differential = {{"z", "y", 0}, {"x", "y", 1}};
        c.genus = 1;
        e.flip = FlipMap{{{"x", "z", 1}, {"y", "y", 0}, {"z", "x", -1}}};
    } else if (name == "fig8") {
        // unknot summand e plus an acyclic box x, y, z, w
        c.generators = {{"e", 0, 0}, {"x", 0, 0}, {"y", -1, -1}, {"z", 1, 1}, {"w", 0, 0}};
        c.differential = {{"x", "y", 0}, {"x", "z", 1}, {"y", "w", 1}, {"z", "w", 0}};
        c.genus = 1;
        e.flip = FlipMap{{{"e", "e", 0},
                          {"w", "w", 0},
                          {"x", "x", 0},
                          {"y", "z", 1},
                          {"z", "y", -1}}};
    } else if (name == "cable") {
        c.generators = {{"a", 0, 0},  {"b", 1, 1},   {"c", 3, 2},   {"d", 2, 1},
                        {"e", 1, 0},  {"f", 0, -1},  {"g", -1, -2}, {"h", -2, -3},
                        {"i", -3, -4}, {"j", -1, -1}, {"k", 0, 0}};
        c.differential = {{"a", "b", 1}, {"c", "b", 0}, {"d", "c", 1}, {"d", "e", 0},
                          {"e", "b", 1}, {"f", "a", 1}, {"f", "e", 1}, {"f", "g", 0},
                          {"f", "k", 1}, {"g", "j", 1}, {"h", "g", 1}, {"h", "i", 0},
                          {"i", "j", 2}, {"k", "j", 0}};
        c.genus = 3;
        // the swap: fixes f, interchanges a-k, b-j, c-i, d-h, e-g
        e.flip = FlipMap{{{"a", "k", 0},
                          {"b", "j", -1},
                          {"c", "i", -3},
                          {"d", "h", -2},
                          {"e", "g", -1},
                          {"f", "f", 0},
                          {"g", "e", 1},
                          {"h", "d", 2},
                          {"i", "c", 3},
                          {"j", "b", 1},
                          {"k", "a", 0}}};
    } else if (name == "table1") {
        c.generators = {{"A", 3, 8},  {"B", 2, 7},   {"C", 1, 3},   {"D", 1, 2},  {"E", 1, 1},
                        {"F", 1, 0},  {"G", 0, 0},   {"H", -1, 1},  {"I", -1, 0}, {"J", -1, -1},
                        {"K", -1, -2}, {"L", -2, 3},  {"M", -3, 2}};
        c.differential = {{"A", "B", 0}, {"D", "C", 1}, {"F", "E", 1}, {"G", "J", 0},
                          {"G", "E", 1}, {"I", "H", 1}, {"K", "J", 1}, {"M", "L", 1}};
        c.genus = 3;
    } else {
        throw std::runtime_error("unknown catalog fixture: " + name);
    }
    return e;
}

}  // namespace floerkit
