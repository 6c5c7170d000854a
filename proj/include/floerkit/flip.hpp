#pragma once

// The flip map phi: a grading-preserving chain homotopy equivalence
// exchanging the two filtrations. verify_flip checks the axioms exactly
// (the level-s quasi-isomorphism via acyclicity of a truncated mapping
// cone, which is exact here because phi is U-equivariant). find_flip solves
// the chain-map constraints over F2 and filters candidates, enumerating the
// solution space modulo filtered homotopies.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "complex.hpp"
#include "finite.hpp"
#include "model.hpp"

namespace floerkit {

struct FlipEntry {
    std::string from;
    std::string to;
    int u_power = 0;  // may be negative: phi(from) contains U^u_power * to
};

struct FlipMap {
    std::vector<FlipEntry> entries;
};

struct FlipCheck {
    bool ok = true;
    std::string violation;
};

namespace flipdetail {

// cone of phi restricted to C{ -Wlow <= j <= s } -> C{ -Wlow <= i <= s };
// acyclic iff phi is a quasi-isomorphism at level s
inline FinComplex level_cone(const BifilteredComplex& c,
                             const std::vector<std::vector<std::pair<int, int>>>& phi, int s,
                             int Wlow) {
    int Wt = Wlow + c.genus + std::abs(s) + 2;
    Region src;
    src.jmin = -Wlow;
    src.jmax = s;
    Region tgt;
    tgt.imin = -Wlow;
    tgt.imax = s;
    RegionModel S(c, src, Wt), T(c, tgt, Wt);
    FinComplex cone;
    std::vector<int> sid(S.size()), tid(T.size());
    for (int i = 0; i < S.size(); ++i) cone.add(S.maslov_of(i) + 1);  // source shifted
    for (int i = 0; i < T.size(); ++i) cone.add(T.maslov_of(i));
    for (int i = 0; i < S.size(); ++i) sid[i] = i;
    for (int i = 0; i < T.size(); ++i) tid[i] = S.size() + i;
    auto adj = c.adjacency();
    for (int i = 0; i < S.size(); ++i) {
        for (auto [t, u] : adj[S.cells[i].gen]) {
            int j = S.find(t, S.cells[i].k + u);
            if (j >= 0) cone.bnd[sid[i]].push_back(sid[j]);
        }
        for (auto [t, w] : phi[S.cells[i].gen]) {
            int j = T.find(t, S.cells[i].k + w);
            if (j >= 0) cone.bnd[sid[i]].push_back(tid[j]);
        }
    }
    for (int i = 0; i < T.size(); ++i)
        for (auto [t, u] : adj[T.cells[i].gen]) {
            int j = T.find(t, T.cells[i].k + u);
            if (j >= 0) cone.bnd[tid[i]].push_back(tid[j]);
        }
    return cone;
}

inline std::vector<std::vector<std::pair<int, int>>> phi_adjacency(const BifilteredComplex& c,
                                                                   const FlipMap& phi) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < c.generators.size(); ++i) idx[c.generators[i].name] = int(i);
    std::vector<std::vector<std::pair<int, int>>> adj(c.generators.size());
    for (const auto& e : phi.entries) adj[idx.at(e.from)].push_back({idx.at(e.to), e.u_power});
    return adj;
}

}  // namespace flipdetail

inline FlipCheck verify_flip(const BifilteredComplex& c, const FlipMap& phi) {
    FlipCheck res;
    auto fail = [&](const std::string& msg) {
        res.ok = false;
        res.violation = msg;
        return res;
    };
    std::map<std::string, int> idx;
    for (size_t i = 0; i < c.generators.size(); ++i) idx[c.generators[i].name] = int(i);
    for (const auto& e : phi.entries) {
        if (!idx.count(e.from) || !idx.count(e.to)) return fail("dangling flip entry");
        const auto& f = c.generators[idx[e.from]];
        const auto& t = c.generators[idx[e.to]];
        if (t.maslov - 2 * e.u_power != f.maslov)
            return fail("not grading-preserving: " + e.from + " -> " + e.to);
        if (-e.u_power > f.alexander)
            return fail("not filtered (i-level exceeds j-level): " + e.from + " -> " + e.to);
    }
    auto adj = c.adjacency();
    auto padj = flipdetail::phi_adjacency(c, phi);
    // chain map: phi d = d phi over F[U, U^-1]
    for (size_t x = 0; x < c.generators.size(); ++x) {
        std::map<std::pair<int, int>, int> acc;
        for (auto [y, u] : adj[x])
            for (auto [z, w] : padj[y]) acc[{z, u + w}] ^= 1;
        for (auto [y, w] : padj[x])
            for (auto [z, u] : adj[y]) acc[{z, w + u}] ^= 1;
        for (auto& [key, parity] : acc)
            if (parity) return fail("not a chain map at " + c.generators[x].name);
    }
    // quasi-isomorphism C{j<=s} -> C{i<=s} for every s in [-g, g]
    int Wlow = c.default_window();
    for (int s = -c.genus; s <= c.genus; ++s) {
        auto cone = flipdetail::level_cone(c, padj, s, Wlow);
        if (cone.total_homology_rank() != 0)
            return fail("not a quasi-isomorphism at level s=" + std::to_string(s));
    }
    return res;
}

inline FlipMap find_flip(const BifilteredComplex& c, int enumeration_cap = 1 << 16) {
    int n = int(c.generators.size());
    if (n > 24) throw std::runtime_error("find_flip: too many generators");
    int bound = 2 * c.genus;
    // unknowns: pairs (x, y) with the U-power forced by grading preservation
    struct Unknown {
        int x, y, k;
    };
    std::vector<Unknown> unknowns;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return c.generators[a].name < c.generators[b].name; });
    for (int x : order)
        for (int y : order) {
            int dm = c.generators[y].maslov - c.generators[x].maslov;
            if (dm % 2 != 0) continue;
            int k = dm / 2;
            if (-k > c.generators[x].alexander) continue;  // filtration
            if (std::abs(k) > bound) continue;             // entry-degree bound
            unknowns.push_back({x, y, k});
        }
    int P = int(unknowns.size());
    auto adj = c.adjacency();
    // chain-map equations, indexed by (x, z, power)
    std::map<std::tuple<int, int, int>, int> eqidx;
    std::vector<BitVec> cols(P);
    auto eq = [&](int x, int z, int p) {
        auto key = std::make_tuple(x, z, p);
        auto it = eqidx.find(key);
        if (it == eqidx.end()) it = eqidx.emplace(key, int(eqidx.size())).first;
        return it->second;
    };
    std::vector<std::vector<int>> touched(P);
    for (int e = 0; e < P; ++e) {
        auto [a, b, k] = unknowns[e];
        // phi d: x -> U^u a, then the entry a -> U^k b
        for (int x = 0; x < n; ++x)
            for (auto [t, u] : adj[x])
                if (t == a) touched[e].push_back(eq(x, b, u + k));
        // d phi: the entry a -> U^k b, then b -> U^w z
        for (auto [z, w] : adj[b]) touched[e].push_back(eq(a, z, k + w));
    }
    int M = int(eqidx.size());
    for (int e = 0; e < P; ++e) {
        cols[e] = BitVec(M);
        for (int r : touched[e]) cols[e].flip(r);
    }
    auto kernelv = f2_kernel(cols, M, P);

    // filtered homotopies: solutions differing by dh + hd are equivalent
    F2Span hspan(P);
    std::map<std::pair<int, int>, int> unknown_of;
    for (int e = 0; e < P; ++e) unknown_of[{unknowns[e].x, unknowns[e].y}] = e;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int dm = c.generators[b].maslov - c.generators[a].maslov;
            if ((dm - 1) % 2 != 0) continue;
            int l = (dm - 1) / 2;  // h: a -> U^l b, degree +1
            if (-l > c.generators[a].alexander || std::abs(l) > bound) continue;
            // dh + hd as an entry vector; skip if it leaves the unknown space
            std::map<std::pair<int, int>, int> acc;
            for (auto [z, w] : adj[b]) acc[{a, z}] ^= 1;  // d(phi-entry): powers forced, pairs suffice
            for (int x = 0; x < n; ++x)
                for (auto [t, u] : adj[x])
                    if (t == a) acc[{x, b}] ^= 1;
            BitVec v(P);
            bool legal = true;
            for (auto& [key, parity] : acc) {
                if (!parity) continue;
                auto it = unknown_of.find(key);
                if (it == unknown_of.end()) {
                    legal = false;
                    break;
                }
                v.flip(it->second);
            }
            if (legal) hspan.insert(v);
        }
    // kernel modulo homotopies
    std::vector<BitVec> quo;
    {
        F2Span seen = hspan;
        for (const auto& kv : kernelv)
            if (seen.insert(kv)) quo.push_back(kv);
    }
    if (int(quo.size()) > 22) throw std::runtime_error("find_flip: solution space too large");
    long long total = 1ll << quo.size();
    long long cap = std::min<long long>(total, enumeration_cap);
    for (long long mask = 1; mask < cap; ++mask) {
        BitVec sol(P);
        for (size_t b = 0; b < quo.size(); ++b)
            if ((mask >> b) & 1) sol ^= quo[b];
        FlipMap phi;
        for (int e = 0; e < P; ++e)
            if (sol.get(e))
                phi.entries.push_back({c.generators[unknowns[e].x].name,
                                       c.generators[unknowns[e].y].name, unknowns[e].k});
        if (verify_flip(c, phi).ok) return phi;
    }
    throw std::runtime_error("find_flip: no flip map within bounds");
}

}  // namespace floerkit
