#pragma once

// Three-manifold Floer data extracted from the i-filtration of a knot
// complex: the plus flavor is realized as the finite region {0 <= i <= W},
// tower membership is certified by surviving U^(W/2), and every result is
// recomputed at window 2W until both agree (the adaptive-window contract).

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace floerkit {

template <class F, class T = decltype(std::declval<F>()(0))>
T stable_window(const BifilteredComplex& c, F f) {
    int W = c.default_window();
    T a = f(W);
    for (int round = 0; round < 4; ++round) {
        T b = f(2 * W);
        if (a == b) return a;
        a = b;
        W *= 2;
    }
    throw std::runtime_error("window certificate failed to stabilize");
}

// dimension of the image of U^m on homology at grading g, i.e. the part of
// H_g represented by U^m-translated cycles (the tower once m is deep enough)
inline int tower_dim_at(const RegionModel& P, int g, int m) {
    F2Span span = P.boundaries_into(g);
    int base = span.dim();
    for (const auto& z : P.cycles(g + 2 * m)) span.insert(P.umap(z, g, m));
    return span.dim() - base;
}

// bottom grading of the U-tower of H(region); this is d when the region is
// the plus flavor
inline int bottom_tower_grading(const RegionModel& P, int m) {
    for (auto& [g, sl] : P.slices())
        if (tower_dim_at(P, g, m) > 0) return g;
    throw std::runtime_error("no U-tower found (homology not of rank 1)");
}

// check the complex looks like a knot in a homology sphere: a single tower
inline void check_rank_one(const RegionModel& P, int d, int m) {
    if (tower_dim_at(P, d, m) != 1 || tower_dim_at(P, d + 2, m) != 1 ||
        tower_dim_at(P, d + 1, m) != 0 || tower_dim_at(P, d + 3, m) != 0)
        throw std::runtime_error("homology is not of rank 1 over F[U, U^-1]");
}

struct TowerReport {
    int d = 0;
    int n_invariant = 0;
    std::vector<int> torsion_orders;
    bool operator==(const TowerReport& o) const {
        return d == o.d && n_invariant == o.n_invariant && torsion_orders == o.torsion_orders;
    }
};

inline TowerReport tower_report_at(const BifilteredComplex& c, int W) {
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    TowerReport rep;
    rep.d = bottom_tower_grading(P, m);
    check_rank_one(P, rep.d, m);
    // torsion lives in the safe zone where the deep-U tower test is valid
    int lo = P.min_grading(), hi = rep.d + W / 2;
    std::map<int, std::vector<BitVec>> zcache;
    auto Z = [&](int g) -> const std::vector<BitVec>& {
        auto it = zcache.find(g);
        if (it == zcache.end()) it = zcache.emplace(g, P.cycles(g)).first;
        return it->second;
    };
    // r[k] = dim U^k(HF_red) summed over gradings
    std::vector<int> r;
    for (int k = 0;; ++k) {
        if (k > W / 4) throw std::runtime_error("torsion order exceeds window");
        int total = 0;
        for (auto& [g, sl] : P.slices()) {
            if (g < lo || g > hi) continue;
            F2Span span = P.boundaries_into(g);
            for (const auto& z : Z(g + 2 * m)) span.insert(P.umap(z, g, m));
            int base = span.dim();
            for (const auto& z : Z(g + 2 * k)) span.insert(P.umap(z, g, k));
            total += span.dim() - base;
        }
        r.push_back(total);
        if (total == 0) break;
    }
    rep.n_invariant = int(r.size()) - 1;
    // summands of order exactly k: (r[k-1] - r[k]) - (r[k] - r[k+1])
    for (int k = 1; k + 1 < int(r.size()) + 1; ++k) {
        int rk = k < int(r.size()) ? r[k] : 0;
        int rk1 = k + 1 < int(r.size()) ? r[k + 1] : 0;
        int count = (r[k - 1] - rk) - (rk - rk1);
        for (int c2 = 0; c2 < count; ++c2) rep.torsion_orders.push_back(k);
    }
    return rep;
}

inline TowerReport tower_report(const BifilteredComplex& c) {
    return stable_window(c, [&](int W) { return tower_report_at(c, W); });
}

inline int d_invariant(const BifilteredComplex& c) { return tower_report(c).d; }
inline int n_invariant(const BifilteredComplex& c) { return tower_report(c).n_invariant; }

// a non-torsion cycle representative in the bottom tower grading, returned as
// U-translate cells (generator name, power)
inline std::vector<std::pair<std::string, int>> tower_cycle(const BifilteredComplex& c) {
    int W = c.default_window();
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    int d = bottom_tower_grading(P, m);
    F2Span B = P.boundaries_into(d);
    for (const auto& z : P.cycles(d + 2 * m)) {
        BitVec v = P.umap(z, d, m);
        if (!B.contains(v)) {
            std::vector<std::pair<std::string, int>> out;
            const auto& sl = P.slice(d);
            for (size_t p = 0; p < sl.size(); ++p)
                if (v.get(int(p)))
                    out.push_back({c.generators[P.cells[sl[p]].gen].name, P.cells[sl[p]].k});
            return out;
        }
    }
    throw std::runtime_error("tower cycle not found");
}

}  // namespace floerkit
