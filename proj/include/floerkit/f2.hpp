#pragma once

// Exact linear algebra over the two-element field. Vectors are bit-packed,
// spans are kept in echelon form with distinct pivots so membership tests and
// rank queries stay O(rows * words).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace floerkit {

struct BitVec {
    int n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(int n_) : n(n_), w((size_t(n_) + 63) / 64, 0) {}

    bool get(int i) const { return (w[size_t(i) >> 6] >> (i & 63)) & 1u; }
    void flip(int i) { w[size_t(i) >> 6] ^= uint64_t(1) << (i & 63); }
    void set(int i) { w[size_t(i) >> 6] |= uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    bool zero() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    // index of the lowest set bit, -1 when zero
    int leading() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return int(k * 64) + __builtin_ctzll(w[k]);
        return -1;
    }
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
};

// Subspace of F2^n maintained as an XOR basis: every stored row is reduced
// against the earlier ones, so pivots are pairwise distinct.
struct F2Span {
    int n = 0;
    std::vector<BitVec> rows;
    std::vector<int> pivots;

    F2Span() = default;
    explicit F2Span(int n_) : n(n_) {}

    BitVec reduce(BitVec v) const {
        for (size_t r = 0; r < rows.size(); ++r)
            if (v.get(pivots[r])) v ^= rows[r];
        return v;
    }
    // returns true when v was independent of the current span
    bool insert(BitVec v) {
        v = reduce(v);
        int p = v.leading();
        if (p < 0) return false;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
    bool contains(const BitVec& v) const { return reduce(v).zero(); }
    int dim() const { return int(rows.size()); }
};

inline int f2_rank(const std::vector<BitVec>& vecs, int n) {
    F2Span s(n);
    for (const auto& v : vecs) s.insert(v);
    return s.dim();
}

// Kernel of the linear map sending unit vector e_j of F2^k to img[j] in F2^m.
// Returned vectors live in F2^k.
inline std::vector<BitVec> f2_kernel(const std::vector<BitVec>& img, int m, int k) {
    struct Row {
        BitVec v;
        BitVec c;
        int pivot;
    };
    std::vector<Row> rows;
    std::vector<BitVec> ker;
    for (int j = 0; j < k; ++j) {
        BitVec v = img[j];
        BitVec c(k);
        c.set(j);
        for (const auto& r : rows)
            if (v.get(r.pivot)) {
                v ^= r.v;
                c ^= r.c;
            }
        int p = v.leading();
        if (p < 0)
            ker.push_back(std::move(c));
        else
            rows.push_back({std::move(v), std::move(c), p});
    }
    (void)m;
    return ker;
}

// One solution x of sum_j x_j img[j] = b, if any.
inline std::optional<BitVec> f2_solve(const std::vector<BitVec>& img, const BitVec& b, int k) {
    struct Row {
        BitVec v;
        BitVec c;
        int pivot;
    };
    std::vector<Row> rows;
    for (int j = 0; j < k; ++j) {
        BitVec v = img[j];
        BitVec c(k);
        c.set(j);
        for (const auto& r : rows)
            if (v.get(r.pivot)) {
                v ^= r.v;
                c ^= r.c;
            }
        int p = v.leading();
        if (p >= 0) rows.push_back({std::move(v), std::move(c), p});
    }
    BitVec v = b;
    BitVec c(k);
    for (const auto& r : rows)
        if (v.get(r.pivot)) {
            v ^= r.v;
            c ^= r.c;
        }
    if (!v.zero()) return std::nullopt;
    return c;
}

// Basis of the intersection of two spans inside F2^n.
inline std::vector<BitVec> f2_intersect(const std::vector<BitVec>& A, const std::vector<BitVec>& B,
                                        int n) {
    // kernel of [A | B] as a map F2^(a+b) -> F2^n; the A-part of each kernel
    // vector recombines to an intersection element.
    int a = int(A.size()), b = int(B.size());
    std::vector<BitVec> img;
    img.reserve(a + b);
    for (const auto& v : A) img.push_back(v);
    for (const auto& v : B) img.push_back(v);
    auto ker = f2_kernel(img, n, a + b);
    F2Span out(n);
    std::vector<BitVec> basis;
    for (const auto& c : ker) {
        BitVec v(n);
        for (int j = 0; j < a; ++j)
            if (c.get(j)) v ^= A[j];
        if (out.insert(v)) basis.push_back(v);
    }
    return basis;
}

// Subspace {z in span(Z) : map(z) in span(B)}, where mapped[j] is the image of
// Z[j]. Returns vectors in the ambient space of Z.
inline std::vector<BitVec> f2_preimage(const std::vector<BitVec>& Z,
                                       const std::vector<BitVec>& mapped, const F2Span& B, int n_src,
                                       int n_dst) {
    std::vector<BitVec> red;
    red.reserve(mapped.size());
    for (const auto& v : mapped) red.push_back(B.reduce(v));
    auto ker = f2_kernel(red, n_dst, int(Z.size()));
    std::vector<BitVec> out;
    F2Span dedupe(n_src);
    for (const auto& c : ker) {
        BitVec v(n_src);
        for (size_t j = 0; j < Z.size(); ++j)
            if (c.get(int(j))) v ^= Z[j];
        if (dedupe.insert(v)) out.push_back(v);
    }
    return out;
}

}  // namespace floerkit
