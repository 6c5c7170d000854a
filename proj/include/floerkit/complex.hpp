#pragma once

// Reduced bifiltered complexes over F[U, U^-1]. Generators are pinned at the
// U^0 position (i, j) = (0, alexander); every other bifiltration position is
// a U-translate: U^k x sits at (-k, alexander - k) in Maslov grading
// maslov - 2k. A differential entry (from, to, u) means d(from) contains
// U^u * to.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace floerkit {

struct Generator {
    std::string name;
    int alexander = 0;
    int maslov = 0;
};

struct DiffEntry {
    std::string from;
    std::string to;
    int u_power = 0;
    bool operator==(const DiffEntry&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;
    void fail(const std::string& msg) {
        ok = false;
        errors.push_back(msg);
    }
};

struct BifilteredComplex {
    std::vector<Generator> generators;
    std::vector<DiffEntry> differential;
    int genus = 0;
    bool reduced = true;

    int gen_index(const std::string& name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name) return int(i);
        return -1;
    }

    // adjacency: for each generator index, list of (target index, u_power)
    std::vector<std::vector<std::pair<int, int>>> adjacency() const {
        std::unordered_map<std::string, int> idx;
        for (size_t i = 0; i < generators.size(); ++i) idx[generators[i].name] = int(i);
        std::vector<std::vector<std::pair<int, int>>> adj(generators.size());
        for (const auto& e : differential) adj[idx.at(e.from)].push_back({idx.at(e.to), e.u_power});
        return adj;
    }

    // default finite window per the adaptive-window contract
    int default_window() const { return int(generators.size()) + 2 * genus + 2; }
};

inline ValidationReport validate(const BifilteredComplex& c) {
    ValidationReport rep;
    std::unordered_map<std::string, int> idx;
    for (size_t i = 0; i < c.generators.size(); ++i) {
        if (idx.count(c.generators[i].name))
            rep.fail("duplicate generator name: " + c.generators[i].name);
        idx[c.generators[i].name] = int(i);
    }
    int maxa = 0;
    for (const auto& g : c.generators) maxa = std::max(maxa, std::abs(g.alexander));
    if (!c.generators.empty() && maxa != c.genus)
        rep.fail("genus mismatch: stored " + std::to_string(c.genus) + ", max |alexander| is " +
                 std::to_string(maxa));
    for (const auto& e : c.differential) {
        if (!idx.count(e.from) || !idx.count(e.to)) {
            rep.fail("dangling differential endpoint: " + e.from + " -> " + e.to);
            continue;
        }
        const Generator& f = c.generators[idx[e.from]];
        const Generator& t = c.generators[idx[e.to]];
        if (e.u_power < 0) rep.fail("negative u_power on " + e.from + " -> " + e.to);
        if (t.alexander - e.u_power > f.alexander)
            rep.fail("filtration breach (j increases): " + e.from + " -> " + e.to);
        if (t.maslov - 2 * e.u_power != f.maslov - 1)
            rep.fail("grading breach: " + e.from + " -> " + e.to);
        if (c.reduced && e.u_power == 0 && t.alexander >= f.alexander)
            rep.fail("reducedness breach: " + e.from + " -> " + e.to);
    }
    if (!rep.ok) return rep;
    // d^2 = 0 over F[U, U^-1]: count U-power-tagged length-2 paths mod 2
    auto adj = c.adjacency();
    for (size_t x = 0; x < c.generators.size(); ++x) {
        std::map<std::pair<int, int>, int> acc;  // (target, power) -> parity
        for (auto [y, u1] : adj[x])
            for (auto [z, u2] : adj[y]) acc[{z, u1 + u2}] ^= 1;
        for (auto& [key, parity] : acc)
            if (parity)
                rep.fail("d^2 != 0 starting from " + c.generators[x].name + " (hits " +
                         c.generators[key.first].name + ")");
    }
    return rep;
}

inline BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b) {
    BifilteredComplex out;
    out.reduced = a.reduced && b.reduced;
    for (const auto& x : a.generators)
        for (const auto& y : b.generators)
            out.generators.push_back(
                {x.name + "." + y.name, x.alexander + y.alexander, x.maslov + y.maslov});
    for (const auto& e : a.differential)
        for (const auto& y : b.generators)
            out.differential.push_back({e.from + "." + y.name, e.to + "." + y.name, e.u_power});
    for (const auto& x : a.generators)
        for (const auto& e : b.differential)
            out.differential.push_back({x.name + "." + e.from, x.name + "." + e.to, e.u_power});
    int maxa = 0;
    for (const auto& g : out.generators) maxa = std::max(maxa, std::abs(g.alexander));
    out.genus = maxa;
    return out;
}

inline BifilteredComplex dualize(const BifilteredComplex& c) {
    BifilteredComplex out;
    out.reduced = c.reduced;
    out.genus = c.genus;
    for (const auto& g : c.generators) out.generators.push_back({g.name, -g.alexander, -g.maslov});
    // reversing an arrow keeps its U-power (forced by the grading rule)
    for (const auto& e : c.differential) out.differential.push_back({e.to, e.from, e.u_power});
    return out;
}

}  // namespace floerkit
