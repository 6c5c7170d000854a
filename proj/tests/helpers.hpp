#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <floerkit/floerkit.hpp>

namespace testutil {

using namespace floerkit;

inline std::multiset<std::pair<int, int>> grading_multiset(const BifilteredComplex& c) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& g : c.generators) out.insert({g.alexander, g.maslov});
    return out;
}

// a deterministic grid of 20 bounded convex regions for reduction oracles
inline std::vector<Region> region_grid() {
    std::vector<Region> out;
    auto rect = [](int i0, int i1, int j0, int j1) {
        Region r;
        r.imin = i0;
        r.imax = i1;
        r.jmin = j0;
        r.jmax = j1;
        return r;
    };
    for (int a : {-2, 0})
        for (int b : {0, 1, 3})
            for (int c : {-2, 0})
                if (out.size() < 12) out.push_back(rect(a, b, c, c + 3));
    out.push_back(rect(0, 0, -4, 4));
    out.push_back(rect(0, 0, -4, 0));
    out.push_back(rect(0, 4, -1, 1));
    out.push_back(rect(-1, 1, -1, 1));
    for (int s : {-1, 0, 1}) out.push_back(Region::hook_max(s, 0, 3));
    out.push_back(Region::hook_min(0, 0, 0));
    return out;
}

// do two flip maps induce the same map on H(C{j<=s}) -> H(C{i<=s}) for all s?
inline bool flips_agree_on_homology(const BifilteredComplex& c, const FlipMap& f1,
                                    const FlipMap& f2) {
    int W = c.default_window();
    auto p1 = flipdetail::phi_adjacency(c, f1);
    auto p2 = flipdetail::phi_adjacency(c, f2);
    for (int s = -c.genus; s <= c.genus; ++s) {
        Region src, tgt;
        src.jmin = -W;
        src.jmax = s;
        tgt.imin = -W;
        tgt.imax = s;
        int Wt = W + c.genus + std::abs(s) + 2;
        RegionModel S(c, src, Wt), T(c, tgt, Wt);
        for (auto& [g, sl] : S.slices()) {
            F2Span B = T.boundaries_into(g);
            const auto& cells = S.slice(g);
            for (const auto& z : S.cycles(g)) {
                BitVec diff(T.slice_dim(g));
                for (size_t p = 0; p < cells.size(); ++p) {
                    if (!z.get(int(p))) continue;
                    const Cell& cell = S.cells[cells[p]];
                    for (auto [t, w] : p1[cell.gen]) {
                        int j = T.find(t, cell.k + w);
                        if (j >= 0) diff.flip(T.slice_pos(j));
                    }
                    for (auto [t, w] : p2[cell.gen]) {
                        int j = T.find(t, cell.k + w);
                        if (j >= 0) diff.flip(T.slice_pos(j));
                    }
                }
                if (!B.contains(diff)) return false;
            }
        }
    }
    return true;
}

}  // namespace testutil
