#pragma once

// The filtered mapping cone for 1/n-surgery. Pieces are indexed by t: one
// copy A^(t) of the input complex with large-surgery index s(t) = ceil(t/n),
// and one copy B_t; v_t: A^(t) -> B_t is the identity, h_t: A^(t) -> B_(t+1)
// is U^(s(t)) phi. Both are homogeneous of degree -1, which forces the
// relative Maslov shifts sigma_A(t+1) = sigma_A(t) + 2 s(t); for n = 1 and
// sigma_A(0) = 0 this is the s(s-1) shift of the +1 core formula. The
// absolute constant for n >= 2 is calibrated on the unknot.
//
// Filtrations on A^(t): I = max(i, j - s), J = max(i + s - 1, j); on B_t:
// I = i, J = i + s - 1. Flattening pins every piece generator at I = 0.

#include <string>
#include <vector>

#include "complex.hpp"
#include "flavors.hpp"
#include "flip.hpp"
#include "reduction.hpp"

namespace floerkit {

namespace conedetail {

inline int ceil_div(int a, int b) {  // b > 0
    int q = a / b, r = a % b;
    return q + (r > 0 ? 1 : 0);
}

inline int sigma_A(int t, int n, int c0) {
    int s = c0;
    if (t > 0)
        for (int u = 0; u < t; ++u) s += 2 * ceil_div(u, n);
    else
        for (int u = t; u < 0; ++u) s -= 2 * ceil_div(u, n);
    return s;
}

inline std::string piece_name(char kind, int t, const std::string& g) {
    std::string tt = t < 0 ? "m" + std::to_string(-t) : std::to_string(t);
    return std::string(1, kind) + tt + "_" + g;
}

}  // namespace conedetail

// Flattened mapping cone. With bifiltered=true (meaningful for n=1) the J
// filtration is carried along, so the output is CFK-infinity of the core of
// +1-surgery before reduction; otherwise only the i-filtration matters (all
// Alexander gradings are set to 0) which is enough for d-invariants.
inline BifilteredComplex build_cone(const BifilteredComplex& c, const FlipMap& phi, int n, int tmin,
                                    int tmax, bool bifiltered, int c0 = 0) {
    auto adj = c.adjacency();
    auto padj = flipdetail::phi_adjacency(c, phi);
    BifilteredComplex out;
    out.reduced = false;
    struct Pin {
        int I0;  // I-level of the k = 0 translate; the pin is U^(I0) x
        int name;
    };
    // pinned data per piece and generator
    auto s_of = [&](int t) { return conedetail::ceil_div(t, n); };
    std::map<std::pair<char, int>, std::vector<int>> I0;  // (kind, t) -> per-gen I0
    auto add_piece = [&](char kind, int t) {
        int s = s_of(t);
        int sigma = conedetail::sigma_A(t, n, c0) - (kind == 'B' ? 1 : 0);
        std::vector<int> i0(c.generators.size());
        for (size_t g = 0; g < c.generators.size(); ++g) {
            int A = c.generators[g].alexander;
            int J0;
            if (kind == 'A') {
                i0[g] = std::max(0, A - s);
                J0 = std::max(s - 1, A);
            } else {
                i0[g] = 0;
                J0 = s - 1;
            }
            int alex = bifiltered ? J0 - i0[g] : 0;
            int maslov = c.generators[g].maslov + sigma - 2 * i0[g];
            out.generators.push_back(
                {conedetail::piece_name(kind, t, c.generators[g].name), alex, maslov});
        }
        I0[{kind, t}] = i0;
    };
    for (int t = tmin; t <= tmax; ++t) add_piece('A', t);
    for (int t = tmin + 1; t <= tmax; ++t) add_piece('B', t);

    auto entry = [&](char k1, int t1, int x, char k2, int t2, int y, int a) {
        int u = a + I0[{k1, t1}][x] - I0[{k2, t2}][y];
        out.differential.push_back({conedetail::piece_name(k1, t1, c.generators[x].name),
                                    conedetail::piece_name(k2, t2, c.generators[y].name), u});
    };
    for (int t = tmin; t <= tmax; ++t) {
        for (size_t x = 0; x < c.generators.size(); ++x) {
            for (auto [y, u] : adj[x]) {
                entry('A', t, int(x), 'A', t, y, u);  // internal differential of A^(t)
                if (t > tmin) entry('B', t, int(x), 'B', t, y, u);
            }
            if (t > tmin) entry('A', t, int(x), 'B', t, int(x), 0);  // v_t
            if (t < tmax)                                            // h_t = U^(s(t)) phi
                for (auto [y, w] : padj[x]) entry('A', t, int(x), 'B', t + 1, y, s_of(t) + w);
        }
    }
    int maxa = 0;
    for (const auto& g : out.generators) maxa = std::max(maxa, std::abs(g.alexander));
    out.genus = maxa;
    return out;
}

// reduced CFK-infinity of the core of +1-surgery; the truncation range
// [a, b] defaults to [1 - g, g] (widened for genus 0)
inline BifilteredComplex core_complex(const BifilteredComplex& c, const FlipMap& phi, int a = 1,
                                      int b = 0) {
    int g = std::max(c.genus, 1);
    if (a > b) {
        a = 1 - g;
        b = g;
    }
    auto cone = build_cone(c, phi, 1, a, b, true);
    auto rep = validate(cone);
    if (!rep.ok) throw std::runtime_error("surgery cone failed validation: " + rep.errors.front());
    return reduce(cone);
}

// homology ranks of the hat pieces X(0,s) for s in [-g, g]:
// X(0,s) = cone( A_s{i <= 0, j = s} (+) A_(s+1){i = 0, j <= s} -> B_(s+1){i = 0} )
// with the corner pieces X(0, -g) = A_(1-g)(0, -g) and X(0, g) = A_g(0, g).
inline std::vector<std::pair<int, int>> hfk_hat_core(const BifilteredComplex& c,
                                                     const FlipMap& phi) {
    int g = std::max(c.genus, 1);
    auto adj = c.adjacency();
    auto padj = flipdetail::phi_adjacency(c, phi);
    std::vector<std::pair<int, int>> out;
    for (int s = g; s >= -g; --s) {
        if (s == g || s == -g) {
            int cnt = 0;
            for (const auto& gen : c.generators)
                if (gen.alexander == s) ++cnt;
            out.push_back({s, cnt});
            continue;
        }
        FinComplex X;
        // part 1: A_s cells (x, k) with j = s, i <= 0, i.e. k = A(x) - s >= 0
        // part 2: A_(s+1) cells (x, 0) with A(x) <= s
        // target: B_(s+1) cells (x, 0)
        // gradings relative to the A_s shift; the maps v, h are already
        // degree -1, so the source pieces get no extra cone shift, and
        // sigma(A_(s+1)) - sigma(A_s) = 2s, sigma(B_(s+1)) = sigma(A_(s+1)) - 1
        std::map<int, int> p1, p2, tg;
        for (size_t x = 0; x < c.generators.size(); ++x) {
            int A = c.generators[x].alexander;
            if (A - s >= 0) p1[int(x)] = X.add(c.generators[x].maslov - 2 * (A - s));
            if (A <= s) p2[int(x)] = X.add(c.generators[x].maslov + 2 * s);
            tg[int(x)] = X.add(c.generators[x].maslov + 2 * s - 1);
        }
        for (auto [x, id] : p1) {
            int kx = c.generators[x].alexander - s;
            for (auto [y, u] : adj[x])  // internal, staying on the j = s ray with i <= 0
                if (p1.count(y) && kx + u == c.generators[y].alexander - s)
                    X.bnd[id].push_back(p1[y]);
            for (auto [y, w] : padj[x])  // h_s = U^s phi, projected to i = 0
                if (kx + s + w == 0) X.bnd[id].push_back(tg[y]);
        }
        for (auto [x, id] : p2) {
            for (auto [y, u] : adj[x])  // internal in the column, j <= s
                if (u == 0 && p2.count(y)) X.bnd[id].push_back(p2[y]);
            X.bnd[id].push_back(tg[x]);  // v_(s+1)
        }
        for (auto [x, id] : tg)
            for (auto [y, u] : adj[x])
                if (u == 0) X.bnd[id].push_back(tg[y]);
        out.push_back({s, X.total_homology_rank()});
    }
    return out;
}

inline int d_of_1_over_n_surgery(const BifilteredComplex& c, const FlipMap& phi, int n) {
    if (n < 1) throw std::runtime_error("surgery coefficient 1/n needs n >= 1");
    auto d_of = [&](const BifilteredComplex& k, const FlipMap& f, int c0) {
        int g = std::max(k.genus, 1);
        auto cone = build_cone(k, f, n, -n * g + 1, n * g, false, c0);
        auto rep = validate(cone);
        if (!rep.ok) throw std::runtime_error("1/n cone failed validation: " + rep.errors.front());
        return d_invariant(cone);
    };
    // calibrate the absolute grading constant on the unknot (d must be 0)
    BifilteredComplex unknot;
    unknot.generators.push_back({"u", 0, 0});
    unknot.genus = 0;
    FlipMap id;
    id.entries.push_back({"u", "u", 0});
    int c0 = -d_of(unknot, id, 0);
    if (d_of(unknot, id, c0) != 0) throw std::runtime_error("1/n grading calibration failed");
    return d_of(c, phi, c0);
}

struct ThetaProbe {
    Rat theta;
    bool stabilized = false;
    std::vector<int> d_values;
};

inline ThetaProbe theta_probe(const BifilteredComplex& c, const FlipMap& phi, int n_max) {
    if (n_max < 3) throw std::runtime_error("theta probe needs n_max >= 3");
    ThetaProbe out;
    for (int n = 1; n <= n_max; ++n) out.d_values.push_back(d_of_1_over_n_surgery(c, phi, n));
    int lo = out.d_values[0], hi = out.d_values[0];
    for (int v : out.d_values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out.theta = Rat(hi - lo);
    int m = n_max;
    out.stabilized = out.d_values[m - 1] == out.d_values[m - 2] &&
                     out.d_values[m - 2] == out.d_values[m - 3];
    return out;
}

}  // namespace floerkit
