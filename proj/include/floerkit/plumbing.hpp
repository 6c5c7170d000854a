#pragma once

// d-invariants of boundaries of definite plumbing trees with at most one bad
// vertex: d = (min alpha^2 - n)/4 over the characteristic covectors in a
// Spin^c class, where alpha^2 = alpha^T A^-1 alpha. The minimum is found by
// exact Fincke-Pohst branch-and-bound over the coset alpha + 2A Z^n. All
// arithmetic is arbitrary-precision rational; no floating point.
//
// Orientation convention: input graphs are positive-definite fillings;
// negative-definite inputs are handled by negating the weights and the
// resulting d (orientation reversal).

#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2.hpp"
#include "rational.hpp"

namespace floerkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PlumbingGraph {
    std::vector<std::pair<std::string, int>> vertices;  // (name, weight)
    std::vector<std::pair<std::string, std::string>> edges;
};

struct IntersectionForm {
    int n = 0;
    std::vector<std::vector<Int>> A;  // of the positive-definite orientation
    bool reversed = false;            // true if the input was negative-definite
    Int det;                          // of A (positive)
    std::vector<std::string> names;
    std::vector<std::string> bad_vertices;  // weight < valence, at most one
};

struct CharCovector {
    std::vector<Int> alpha;
    bool class_rep = false;
};

namespace lattice {

inline long long node_limit() {
    const char* s = std::getenv("FLOERKIT_NODE_LIMIT");
    if (!s) return 50'000'000;
    long long v = std::atoll(s);
    return v > 0 ? v : 50'000'000;
}

// solve A y = b over the rationals (A invertible)
inline std::vector<Rational> solve_rational(const std::vector<std::vector<Int>>& A,
                                            const std::vector<Rational>& b) {
    int n = int(A.size());
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = Rational(A[i][j]);
        M[i][n] = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (M[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) throw std::runtime_error("singular matrix");
        std::swap(M[c], M[p]);
        for (int r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rational f = M[r][c] / M[c][c];
            for (int j = c; j <= n; ++j) M[r][j] -= f * M[c][j];
        }
    }
    std::vector<Rational> y(n);
    for (int i = 0; i < n; ++i) y[i] = M[i][n] / M[i][i];
    return y;
}

// LDL^T decomposition of a positive-definite rational matrix:
// Q(w) = sum_i D[i] * (w_i + sum_{j>i} L[i][j] w_j)^2
struct LDL {
    std::vector<Rational> D;
    std::vector<std::vector<Rational>> L;
};

inline LDL ldl(const std::vector<std::vector<Int>>& A) {
    int n = int(A.size());
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = Rational(A[i][j]);
    LDL out;
    out.D.resize(n);
    out.L.assign(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (M[i][i] <= 0) throw std::runtime_error("matrix not positive-definite");
        out.D[i] = M[i][i];
        for (int j = i + 1; j < n; ++j) out.L[i][j] = M[i][j] / M[i][i];
        for (int r = i + 1; r < n; ++r)
            for (int s = i + 1; s < n; ++s) M[r][s] -= M[r][i] * M[i][s] / M[i][i];
    }
    return out;
}

}  // namespace lattice

inline IntersectionForm analyze(const PlumbingGraph& g) {
    int n = int(g.vertices.size());
    if (n == 0) throw std::runtime_error("empty plumbing graph");
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) {
        if (idx.count(g.vertices[i].first)) throw std::runtime_error("duplicate vertex name");
        idx[g.vertices[i].first] = i;
    }
    if (int(g.edges.size()) != n - 1) throw std::runtime_error("not a tree: wrong edge count");
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    std::vector<int> valence(n, 0);
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n, 0));
    for (const auto& [a, b] : g.edges) {
        if (!idx.count(a) || !idx.count(b)) throw std::runtime_error("edge endpoint not a vertex");
        int i = idx[a], j = idx[b];
        if (i == j) throw std::runtime_error("not a tree: self-loop");
        if (find(i) == find(j)) throw std::runtime_error("not a tree: cycle");
        uf[find(i)] = find(j);
        ++valence[i];
        ++valence[j];
        A[i][j] = A[j][i] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (find(i) != find(0)) throw std::runtime_error("not a tree: disconnected");
    for (int i = 0; i < n; ++i) A[i][i] = g.vertices[i].second;

    // leading principal minors, without pivoting: a zero pivot means the
    // corresponding minor vanishes, so the form cannot be definite
    auto minors = [&](const std::vector<std::vector<Int>>& M) {
        std::vector<Int> out;
        std::vector<std::vector<Rational>> W(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) W[i][j] = Rational(M[i][j]);
        Rational det = 1;
        for (int c = 0; c < n; ++c) {
            if (W[c][c] == 0) {
                for (int k = c; k < n; ++k) out.push_back(0);
                return out;
            }
            for (int r = c + 1; r < n; ++r) {
                Rational f = W[r][c] / W[c][c];
                for (int j = c; j < n; ++j) W[r][j] -= f * W[c][j];
            }
            det *= W[c][c];
            out.push_back(boost::multiprecision::numerator(det) /
                          boost::multiprecision::denominator(det));
        }
        return out;
    };
    auto m = minors(A);
    bool pos = true, neg = true;
    for (int k = 0; k < n; ++k) {
        if (m[k] <= 0) pos = false;
        if ((k % 2 == 0) ? (m[k] >= 0) : (m[k] <= 0)) neg = false;
    }
    if (!pos && !neg) throw std::runtime_error("intersection form is not definite");

    IntersectionForm out;
    out.n = n;
    out.reversed = neg && !pos;
    out.A = A;
    if (out.reversed)
        for (int i = 0; i < n; ++i) out.A[i][i] = -A[i][i];
    out.det = m[n - 1];
    if (out.det < 0) out.det = -out.det;
    for (const auto& [name, w] : g.vertices) out.names.push_back(name);
    // bad vertex: weight strictly less than valence, in the positive orientation
    for (int i = 0; i < n; ++i)
        if (out.A[i][i] < valence[i]) out.bad_vertices.push_back(out.names[i]);
    if (out.bad_vertices.size() > 1) throw std::runtime_error("more than one bad vertex");
    return out;
}

// the self-conjugate Spin^c class: alpha = A x for integer x, which exists
// iff A x = diag(A) (mod 2) is solvable over F2 (always, for symmetric A)
inline CharCovector self_conjugate_class(const IntersectionForm& f) {
    int n = f.n;
    std::vector<BitVec> cols(n);
    BitVec rhs(n);
    for (int j = 0; j < n; ++j) {
        cols[j] = BitVec(n);
        for (int i = 0; i < n; ++i)
            if (f.A[i][j] % 2 != 0) cols[j].flip(i);
    }
    for (int i = 0; i < n; ++i)
        if (f.A[i][i] % 2 != 0) rhs.flip(i);
    auto x = f2_solve(cols, rhs, n);
    if (!x) throw std::runtime_error("no self-conjugate class (should not happen)");
    CharCovector out;
    out.class_rep = true;
    out.alpha.assign(n, 0);
    for (int j = 0; j < n; ++j)
        if (x->get(j))
            for (int i = 0; i < n; ++i) out.alpha[i] += f.A[i][j];
    return out;
}

inline bool is_characteristic(const IntersectionForm& f, const std::vector<Int>& alpha) {
    for (int i = 0; i < f.n; ++i)
        if ((alpha[i] - f.A[i][i]) % 2 != 0) return false;
    return true;
}

// same Spin^c class iff (alpha - beta)/2 is in A Z^n
inline bool same_class(const IntersectionForm& f, const std::vector<Int>& alpha,
                       const std::vector<Int>& beta) {
    std::vector<Rational> b(f.n);
    for (int i = 0; i < f.n; ++i) b[i] = Rational(alpha[i] - beta[i]) / 2;
    auto x = lattice::solve_rational(f.A, b);
    for (const auto& v : x)
        if (boost::multiprecision::denominator(v) != 1) return false;
    return true;
}

struct MinSquare {
    Rational value;
    std::vector<Int> minimizer;  // a covector realizing the minimum
};

// min over {alpha + 2 A z : z in Z^n} of alpha^T A^-1 alpha, equivalently
// min of 4 (z + c)^T A (z + c) with c = A^-1 alpha / 2; exact branch-and-bound
inline MinSquare min_square(const IntersectionForm& f, const CharCovector& cls) {
    int n = f.n;
    std::vector<Rational> ar(n);
    for (int i = 0; i < n; ++i) ar[i] = Rational(cls.alpha[i]);
    auto y = lattice::solve_rational(f.A, ar);  // y = A^-1 alpha
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) c[i] = y[i] / 2;
    Rational at_zero = 0;  // alpha^T A^-1 alpha
    for (int i = 0; i < n; ++i) at_zero += ar[i] * y[i];
    auto D = lattice::ldl(f.A);

    Rational best = at_zero;  // radius initialized from z = 0
    std::vector<Int> bestz(n, 0), z(n, 0);
    long long nodes = 0, limit = lattice::node_limit();

    // enumerate coordinates from the last to the first; at depth i the
    // contribution of levels > i is fixed and the constraint on z_i is
    // 4 D[i] (z_i + t_i)^2 <= best - partial
    auto floor_div = [](const Int& a, const Int& b) {  // b > 0
        Int q = a / b;
        if (a % b != 0 && a < 0) --q;
        return q;
    };
    std::function<void(int, Rational)> go = [&](int i, Rational partial) {
        if (++nodes > limit) throw std::runtime_error("lattice enumeration budget exceeded");
        if (i < 0) {
            if (partial < best) {
                best = partial;
                bestz = z;
            }
            return;
        }
        Rational t = c[i];
        for (int j = i + 1; j < n; ++j) t += D.L[i][j] * (Rational(z[j]) + c[j]);
        // exact interval for v = z_i: 4 D[i] (v + t)^2 <= best - partial,
        // i.e. (v td + tn)^2 <= floor(B td^2) with t = tn/td, B rational
        Rational B = (best - partial) / (4 * D.D[i]);
        if (B < 0) {
            z[i] = 0;
            return;
        }
        Int tn = boost::multiprecision::numerator(t), td = boost::multiprecision::denominator(t);
        Int cap = boost::multiprecision::numerator(B) * td * td /
                  boost::multiprecision::denominator(B);
        Int s = boost::multiprecision::sqrt(cap);
        Int lo = -floor_div(s + tn, td);  // ceil((-s - tn)/td)
        Int hi = floor_div(s - tn, td);
        for (Int v = lo; v <= hi; ++v) {
            Rational w = Rational(v) + t;
            Rational q = partial + 4 * D.D[i] * w * w;
            if (q > best) continue;
            z[i] = v;
            go(i - 1, q);
        }
        z[i] = 0;
    };
    go(n - 1, Rational(0));

    MinSquare out;
    out.value = best;
    out.minimizer.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        out.minimizer[i] = cls.alpha[i];
        for (int j = 0; j < n; ++j) out.minimizer[i] += 2 * f.A[i][j] * bestz[j];
    }
    return out;
}

// Spin^c classes indexed by Smith-normal-form coordinates: classes of
// characteristic covectors biject with Z^n / A Z^n via x = (alpha - diag)/2
struct SpincIndex {
    std::vector<Int> d;                    // nontrivial invariant factors (> 1)
    std::vector<int> rows;                 // rows of U giving those coordinates
    std::vector<std::vector<Int>> U, Uinv;  // D = U A V
    Int count = 1;
};

inline SpincIndex spinc_index(const IntersectionForm& f) {
    int n = f.n;
    std::vector<std::vector<Int>> M = f.A, U(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) U[i][i] = 1;
    // Smith normal form, tracking row operations only (column ops act on V)
    for (int t = 0; t < n; ++t) {
        while (true) {
            int pr = -1, pc = -1;
            Int bestabs = 0;
            for (int r = t; r < n; ++r)
                for (int cc = t; cc < n; ++cc)
                    if (M[r][cc] != 0) {
                        Int a = M[r][cc] < 0 ? Int(-M[r][cc]) : M[r][cc];
                        if (pr < 0 || a < bestabs) {
                            bestabs = a;
                            pr = r;
                            pc = cc;
                        }
                    }
            if (pr < 0) {
                pr = pc = t;  // zero block
                break;
            }
            std::swap(M[t], M[pr]);
            std::swap(U[t], U[pr]);
            for (int r = 0; r < n; ++r)
                if (r != t) std::swap(M[r][t], M[r][pc]);
            std::swap(M[t][t], M[t][pc]);
            bool clean = true;
            for (int r = t + 1; r < n; ++r)
                if (M[r][t] != 0) {
                    Int q = M[r][t] / M[t][t];
                    for (int cc = 0; cc < n; ++cc) {
                        M[r][cc] -= q * M[t][cc];
                        U[r][cc] -= q * U[t][cc];
                    }
                    if (M[r][t] != 0) clean = false;
                }
            for (int cc = t + 1; cc < n; ++cc)
                if (M[t][cc] != 0) {
                    Int q = M[t][cc] / M[t][t];
                    for (int r = 0; r < n; ++r) M[r][cc] -= q * M[r][t];
                    if (M[t][cc] != 0) clean = false;
                }
            if (clean) {
                bool zero = true;
                for (int r = t + 1; r < n && zero; ++r) zero = M[r][t] == 0;
                for (int cc = t + 1; cc < n && zero; ++cc) zero = M[t][cc] == 0;
                if (zero) break;
            }
        }
    }
    SpincIndex out;
    out.U = U;
    for (int i = 0; i < n; ++i) {
        Int d = M[i][i] < 0 ? Int(-M[i][i]) : M[i][i];
        if (d != 1) {
            out.d.push_back(d);
            out.rows.push_back(i);
            out.count *= d;
        }
    }
    // invert U exactly (unimodular)
    std::vector<std::vector<Rational>> W(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) W[i][j] = Rational(U[i][j]);
        W[i][n + i] = 1;
    }
    for (int cidx = 0; cidx < n; ++cidx) {
        int p = -1;
        for (int r = cidx; r < n; ++r)
            if (W[r][cidx] != 0) {
                p = r;
                break;
            }
        std::swap(W[cidx], W[p]);
        for (int r = 0; r < n; ++r) {
            if (r == cidx || W[r][cidx] == 0) continue;
            Rational fr = W[r][cidx] / W[cidx][cidx];
            for (int j = 0; j < 2 * n; ++j) W[r][j] -= fr * W[cidx][j];
        }
    }
    out.Uinv.assign(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = W[i][n + j] / W[i][i];
            if (boost::multiprecision::denominator(v) != 1)
                throw std::runtime_error("SNF transform not unimodular");
            out.Uinv[i][j] = boost::multiprecision::numerator(v);
        }
    return out;
}

inline Int mod_pos(Int a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// the class of a covector as a mixed-radix index
inline Int class_index_of(const IntersectionForm& f, const SpincIndex& ix,
                          const std::vector<Int>& alpha) {
    int n = f.n;
    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i) x[i] = (alpha[i] - f.A[i][i]) / 2;
    Int out = 0;
    for (size_t k = 0; k < ix.d.size(); ++k) {
        Int coord = 0;
        for (int j = 0; j < n; ++j) coord += ix.U[ix.rows[k]][j] * x[j];
        out = out * ix.d[k] + mod_pos(coord, ix.d[k]);
    }
    return out;
}

// a representative covector for a class index
inline CharCovector class_from_index(const IntersectionForm& f, const SpincIndex& ix, Int index) {
    if (index < 0 || index >= ix.count) throw std::runtime_error("spin-c class index out of range");
    int n = f.n;
    std::vector<Int> r(n, 0);
    for (int k = int(ix.d.size()) - 1; k >= 0; --k) {
        r[ix.rows[k]] = index % ix.d[k];
        index /= ix.d[k];
    }
    CharCovector out;
    out.class_rep = true;
    out.alpha.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        Int y = 0;
        for (int j = 0; j < n; ++j) y += ix.Uinv[i][j] * r[j];
        out.alpha[i] = f.A[i][i] + 2 * y;
    }
    return out;
}

// spinc: "self-conjugate" or a decimal class index
inline Rational d_plumbing(const PlumbingGraph& g, const std::string& spinc = "self-conjugate") {
    auto f = analyze(g);
    CharCovector cls;
    if (spinc == "self-conjugate")
        cls = self_conjugate_class(f);
    else {
        auto ix = spinc_index(f);
        cls = class_from_index(f, ix, Int(spinc));
    }
    auto ms = min_square(f, cls);
    Rational d = (ms.value - f.n) / 4;
    return f.reversed ? -d : d;
}

inline PlumbingGraph gamma_j(int j) {
    if (j < 1) throw std::runtime_error("gamma_j needs j >= 1");
    PlumbingGraph g;
    int n = 2 * j + 5;
    auto vn = [](int i) { return "v" + std::to_string(i); };
    for (int i = 1; i <= n; ++i) {
        int w = 2;
        if (i == 1) w = j + 2;
        if (i == 5) w = j + 1;
        g.vertices.push_back({vn(i), w});
    }
    g.edges.push_back({vn(1), vn(2)});
    g.edges.push_back({vn(2), vn(3)});
    g.edges.push_back({vn(3), vn(4)});
    g.edges.push_back({vn(4), vn(5)});
    g.edges.push_back({vn(3), vn(6)});
    for (int i = 6; i < n; ++i) g.edges.push_back({vn(i), vn(i + 1)});
    return g;
}

struct PipelineRow {
    int j;
    Rat d;
    int v0;
    int theta;
};

inline Rat to_rat(const Rational& r) {
    Int num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    if (num < std::numeric_limits<long long>::min() || num > std::numeric_limits<long long>::max())
        throw std::runtime_error("rational overflow");
    return Rat(num.convert_to<long long>(), den.convert_to<long long>());
}

inline PipelineRow paper_pipeline(int j) {
    Rational d = d_plumbing(gamma_j(j));
    Rational v0 = (Rational(j) / 2 - d) / 2;
    if (boost::multiprecision::denominator(v0) != 1 || v0 < 0)
        throw std::runtime_error("pipeline: V0 is not a nonnegative integer");
    PipelineRow row;
    row.j = j;
    row.d = to_rat(d);
    row.v0 = int(boost::multiprecision::numerator(v0).convert_to<long long>());
    row.theta = 2 * row.v0;
    return row;
}

// squares of sampled covectors in the same class (for the mod-8 residue check)
inline std::vector<Int> sample_class_squares(const IntersectionForm& f, const CharCovector& cls,
                                             int count) {
    int n = f.n;
    std::vector<Rational> ar(n);
    for (int i = 0; i < n; ++i) ar[i] = Rational(cls.alpha[i]);
    std::vector<Int> out;
    // deterministic z sweep: unit vectors, pairs, and scaled unit vectors
    std::vector<std::vector<Int>> zs;
    zs.push_back(std::vector<Int>(n, 0));
    for (int s = 1; int(zs.size()) < count && s <= 4; ++s) {
        for (int i = 0; i < n && int(zs.size()) < count; ++i) {
            std::vector<Int> z(n, 0);
            z[i] = s;
            zs.push_back(z);
            z[i] = -s;
            zs.push_back(z);
        }
        for (int i = 0; i < n && int(zs.size()) < count; ++i)
            for (int j = i + 1; j < n && int(zs.size()) < count; ++j) {
                std::vector<Int> z(n, 0);
                z[i] = s;
                z[j] = -s;
                zs.push_back(z);
            }
    }
    for (const auto& z : zs) {
        std::vector<Int> a(n);
        for (int i = 0; i < n; ++i) {
            a[i] = cls.alpha[i];
            for (int j = 0; j < n; ++j) a[i] += 2 * f.A[i][j] * z[j];
        }
        std::vector<Rational> b(n);
        for (int i = 0; i < n; ++i) b[i] = Rational(a[i]);
        auto y = lattice::solve_rational(f.A, b);
        Rational sq = 0;
        for (int i = 0; i < n; ++i) sq += b[i] * y[i];
        if (boost::multiprecision::denominator(sq) != 1)
            throw std::runtime_error("sampled square not an integer");
        out.push_back(boost::multiprecision::numerator(sq));
    }
    return out;
}

}  // namespace floerkit
