#pragma once

// Concordance invariants tau, nu, nu', epsilon, Upsilon and V0. All of them
// are phrased as "does the image of H(some region) hit the U-tower of the
// plus flavor", evaluated exactly on finite windows with the W/2W
// stabilization certificate. "in U^N HF+ for all N >> 0" is implemented as
// membership in the image of U^(W/2).

#include <set>
#include <vector>

#include "flavors.hpp"

namespace floerkit {

namespace detail {

// mapped cycle vectors of src at grading g, pushed cell-by-cell into dst
// (cells absent from dst map to zero: the subquotient projection)
inline std::vector<BitVec> push_cycles(const RegionModel& src, const RegionModel& dst, int g) {
    std::vector<BitVec> out;
    const auto& sl = src.slice(g);
    for (const auto& z : src.cycles(g)) {
        BitVec v(dst.slice_dim(g));
        for (size_t p = 0; p < sl.size(); ++p)
            if (z.get(int(p))) {
                int j = dst.find(src.cells[sl[p]].gen, src.cells[sl[p]].k);
                if (j >= 0) v.flip(dst.slice_pos(j));
            }
        out.push_back(std::move(v));
    }
    return out;
}

// does span(X) meet the tower (image of U^m) of H_g(P) away from zero?
inline bool tower_hit(const RegionModel& P, int g, int m, const std::vector<BitVec>& X) {
    F2Span B = P.boundaries_into(g);
    int b = B.dim();
    F2Span TB = B;
    for (const auto& z : P.cycles(g + 2 * m)) TB.insert(P.umap(z, g, m));
    int tb = TB.dim();
    if (tb == b) return false;
    F2Span XB = B;
    for (const auto& v : X) XB.insert(v);
    int xb = XB.dim();
    if (xb == b) return false;
    F2Span XTB = TB;
    for (const auto& v : X) XTB.insert(v);
    // dim((X+B) cap (T+B)) = xb + tb - dim(X+T+B) > b
    return xb + tb - XTB.dim() > b;
}

// gradings worth testing: tower parity, inside the certified zone
inline std::vector<int> tower_gradings(const RegionModel& src, int d, int W) {
    std::vector<int> out;
    for (auto& [g, sl] : src.slices())
        if (g >= d && (g - d) % 2 == 0 && g <= d + W / 2) out.push_back(g);
    return out;
}

}  // namespace detail

inline int tau_at(const BifilteredComplex& c, int W) {
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    int d = bottom_tower_grading(P, m);
    check_rank_one(P, d, m);
    for (int s = -c.genus - 1; s <= c.genus + 1; ++s) {
        Region r;  // {i = 0, j <= s}
        r.imin = 0;
        r.imax = 0;
        r.jmax = s;
        RegionModel S(c, r, W);
        for (int g : detail::tower_gradings(S, d, W))
            if (detail::tower_hit(P, g, m, detail::push_cycles(S, P, g))) return s;
    }
    throw std::runtime_error("tau: no level hits the tower");
}

inline int nu_at(const BifilteredComplex& c, int W) {
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    int d = bottom_tower_grading(P, m);
    for (int s = -c.genus - 1; s <= c.genus + 1; ++s) {
        RegionModel S(c, Region::hook_max(s, 0, 0), W);
        for (int g : detail::tower_gradings(S, d, W))
            if (detail::tower_hit(P, g, m, detail::push_cycles(S, P, g))) return s;
    }
    throw std::runtime_error("nu: no level hits the tower");
}

// nu' straight from the definition: the maximum s such that v'_s is nonzero
// on every hat class whose plus-flavor image is a nonzero tower class
inline int nu_prime_at(const BifilteredComplex& c, int W) {
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    int d = bottom_tower_grading(P, m);
    RegionModel hat(c, Region::column(), W);
    for (int s = c.genus + 1; s >= -c.genus - 1; --s) {
        RegionModel T(c, Region::hook_min(s, 0, 0), W);
        bool good = true;
        for (int g : detail::tower_gradings(hat, d, W)) {
            auto Z = hat.cycles(g);
            if (Z.empty()) continue;
            const auto& sl = hat.slice(g);
            auto apply = [&](const BitVec& z, const RegionModel& dst) {
                BitVec v(dst.slice_dim(g));
                for (size_t p = 0; p < sl.size(); ++p)
                    if (z.get(int(p))) {
                        int j = dst.find(hat.cells[sl[p]].gen, hat.cells[sl[p]].k);
                        if (j >= 0) v.flip(dst.slice_pos(j));
                    }
                return v;
            };
            // V_bad: hat cycles killed by v'_s on homology
            std::vector<BitVec> vimg;
            for (const auto& z : Z) vimg.push_back(apply(z, T));
            F2Span Btgt = T.boundaries_into(g);
            auto Vbad = f2_preimage(Z, vimg, Btgt, hat.slice_dim(g), T.slice_dim(g));
            if (Vbad.empty()) continue;
            // among those, is any a tower-hitting class? (rho image in (T+B)\B)
            F2Span B = P.boundaries_into(g);
            F2Span TB = B;
            for (const auto& z : P.cycles(g + 2 * m)) TB.insert(P.umap(z, g, m));
            std::vector<BitVec> rimg;
            for (const auto& v : Vbad) rimg.push_back(apply(v, P));
            auto V1 = f2_preimage(Vbad, rimg, TB, hat.slice_dim(g), P.slice_dim(g));
            for (const auto& v : V1)
                if (!B.contains(apply(v, P))) {
                    good = false;
                    break;
                }
            if (!good) break;
        }
        if (good) return s;
    }
    throw std::runtime_error("nu': no level works");
}

inline int epsilon_from(int tau, int nu, int nu_prime) {
    bool up = (nu == tau + 1), down = (nu_prime == tau - 1);
    if (up && !down) return -1;
    if (down && !up) return 1;
    if (!up && !down) return 0;
    throw std::runtime_error("epsilon trichotomy violated (implementation bug)");
}

inline Rat upsilon_at(const BifilteredComplex& c, const Rat& t, int W) {
    if (t.p == 0) return Rat(0);
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    int d = bottom_tower_grading(P, m);
    // candidate levels realized by translates U^k x
    std::set<Rat> levels;
    for (const auto& g : c.generators)
        for (int k = -W; k <= W / 2; ++k)
            levels.insert(Rat(-(long long)k * (2 * t.q - t.p) + (long long)(g.alexander - k) * t.p,
                              2 * t.q));
    std::vector<Rat> cand(levels.begin(), levels.end());
    auto cond = [&](const Rat& s) {
        Region r;
        r.ups = true;
        r.ups_t = t;
        r.ups_level = s;
        r.imin = -(W / 2);
        RegionModel S(c, r, W);
        if (S.slice_dim(d) == 0) return false;
        return detail::tower_hit(P, d, m, detail::push_cycles(S, P, d));
    };
    // the condition is monotone in s: binary search for the first true level
    int lo = 0, hi = int(cand.size()) - 1;
    if (!cond(cand[hi])) throw std::runtime_error("upsilon: top level misses the tower");
    if (cond(cand[lo])) return Rat(-2) * cand[lo];
    while (hi - lo > 1) {
        int mid = (lo + hi) / 2;
        if (cond(cand[mid]))
            hi = mid;
        else
            lo = mid;
    }
    return Rat(-2) * cand[hi];
}

inline int v0_at(const BifilteredComplex& c, int W) {
    RegionModel P(c, Region::plus_flavor(W), W);
    int m = W / 2;
    int d = bottom_tower_grading(P, m);
    RegionModel A0(c, Region::hook_max(0, 0, W), W);
    int b = bottom_tower_grading(A0, m);
    return (d - b) / 2;
}

inline int tau(const BifilteredComplex& c) {
    return stable_window(c, [&](int W) { return tau_at(c, W); });
}
inline int nu(const BifilteredComplex& c) {
    return stable_window(c, [&](int W) { return nu_at(c, W); });
}
inline int nu_prime(const BifilteredComplex& c) {
    return stable_window(c, [&](int W) { return nu_prime_at(c, W); });
}
inline int epsilon(const BifilteredComplex& c) {
    return epsilon_from(tau(c), nu(c), nu_prime(c));
}
inline Rat upsilon(const BifilteredComplex& c, const Rat& t) {
    return stable_window(c, [&](int W) { return upsilon_at(c, t, W); });
}
inline int v0(const BifilteredComplex& c) {
    return stable_window(c, [&](int W) { return v0_at(c, W); });
}

struct InvariantReport {
    int tau = 0;
    int nu = 0;
    int nu_prime = 0;
    int epsilon = 0;
    int v0 = 0;
    int d = 0;
    int n_invariant = 0;
    std::vector<std::pair<Rat, Rat>> upsilon;  // (t, value)
};

inline InvariantReport invariants(const BifilteredComplex& c, int upsilon_denominator = 4) {
    InvariantReport rep;
    rep.tau = tau(c);
    rep.nu = nu(c);
    rep.nu_prime = nu_prime(c);
    rep.epsilon = epsilon_from(rep.tau, rep.nu, rep.nu_prime);
    rep.v0 = v0(c);
    auto tw = tower_report(c);
    rep.d = tw.d;
    rep.n_invariant = tw.n_invariant;
    int q = upsilon_denominator;
    for (int k = 0; k <= 2 * q; ++k) rep.upsilon.push_back({Rat(k, q), upsilon(c, Rat(k, q))});
    return rep;
}

}  // namespace floerkit
