#pragma once

// Finite F2 model of a convex subquotient of a bifiltered complex: the basis
// is the set of U-translates U^k x (|k| <= W) whose position lies in the
// region, with the induced differential (arrows leaving the region are
// dropped, per the subquotient convention). The differential is homogeneous
// of Maslov degree -1, so all linear algebra is done per grading slice.

#include <map>
#include <stdexcept>
#include <vector>

#include "complex.hpp"
#include "f2.hpp"
#include "region.hpp"

namespace floerkit {

struct Cell {
    int gen = 0;
    int k = 0;  // the basis element is U^k * generators[gen]
};

class RegionModel {
  public:
    const BifilteredComplex* C = nullptr;
    Region R;
    int W = 0;
    std::vector<Cell> cells;
    bool window_error = false;

    RegionModel() = default;
    RegionModel(const BifilteredComplex& c, const Region& r, int w) : C(&c), R(r), W(w) {
        adj_ = c.adjacency();
        for (size_t g = 0; g < c.generators.size(); ++g) {
            // enumerate translates; positions of U^k x are (-k, A - k)
            for (int k = -W; k <= W; ++k)
                if (R.contains(-k, c.generators[g].alexander - k)) add_cell(int(g), k);
        }
        // detect arrows pointing at region positions outside the translate window
        for (const auto& cell : cells)
            for (auto [t, u] : adj_[cell.gen]) {
                int kk = cell.k + u;
                if (find(t, kk) < 0 && std::abs(kk) > W &&
                    R.contains(-kk, c.generators[t].alexander - kk))
                    window_error = true;
        }
        if (window_error) throw std::runtime_error("subquotient window too small");
    }

    int size() const { return int(cells.size()); }
    int maslov_of(int idx) const {
        return C->generators[cells[idx].gen].maslov - 2 * cells[idx].k;
    }
    int find(int gen, int k) const {
        auto it = index_.find({gen, k});
        return it == index_.end() ? -1 : it->second;
    }

    const std::map<int, std::vector<int>>& slices() const { return slices_; }
    int slice_dim(int g) const {
        auto it = slices_.find(g);
        return it == slices_.end() ? 0 : int(it->second.size());
    }
    // position of cell idx within its grading slice
    int slice_pos(int idx) const { return pos_.at(idx); }
    const std::vector<int>& slice(int g) const {
        static const std::vector<int> empty;
        auto it = slices_.find(g);
        return it == slices_.end() ? empty : it->second;
    }

    // boundary images of the slice-g basis, as vectors in the slice (g-1) space
    std::vector<BitVec> boundary(int g) const {
        std::vector<BitVec> out;
        int m = slice_dim(g - 1);
        for (int idx : slice(g)) {
            BitVec v(m);
            for (auto [t, u] : adj_[cells[idx].gen]) {
                int j = find(t, cells[idx].k + u);
                if (j >= 0) v.flip(slice_pos(j));
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    std::vector<BitVec> cycles(int g) const {
        auto img = boundary(g);
        auto ker = f2_kernel(img, slice_dim(g - 1), slice_dim(g));
        return ker;  // vectors in the slice-g coordinate space
    }

    F2Span boundaries_into(int g) const {
        F2Span span(slice_dim(g));
        for (auto& v : boundary(g + 1)) span.insert(v);
        return span;
    }

    int homology_rank(int g) const {
        return int(cycles(g).size()) - boundaries_into(g).dim();
    }

    std::map<int, int> homology_ranks() const {
        std::map<int, int> out;
        for (auto& [g, sl] : slices_) {
            int r = homology_rank(g);
            if (r) out[g] = r;
        }
        return out;
    }

    int total_homology_rank() const {
        int t = 0;
        for (auto& [g, r] : homology_ranks()) t += r;
        return t;
    }

    // image of U^m applied to a slice-(g+2m) vector, landing in slice g;
    // translates that fall out of the region are dropped (quotient side).
    BitVec umap(const BitVec& v, int g, int m) const {
        BitVec out(slice_dim(g));
        const auto& src = slice(g + 2 * m);
        for (size_t p = 0; p < src.size(); ++p)
            if (v.get(int(p))) {
                int j = find(cells[src[p]].gen, cells[src[p]].k + m);
                if (j >= 0) out.flip(slice_pos(j));
            }
        return out;
    }

    int min_grading() const {
        if (slices_.empty()) throw std::runtime_error("empty model");
        return slices_.begin()->first;
    }
    int max_grading() const { return slices_.rbegin()->first; }

  private:
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::map<std::pair<int, int>, int> index_;
    std::map<int, std::vector<int>> slices_;
    std::map<int, int> pos_;

    void add_cell(int g, int k) {
        int idx = int(cells.size());
        cells.push_back({g, k});
        index_[{g, k}] = idx;
        auto& sl = slices_[C->generators[g].maslov - 2 * k];
        pos_[idx] = int(sl.size());
        sl.push_back(idx);
    }
};

// public subquotient operation (the FiniteF2Complex of the interface)
inline RegionModel subquotient(const BifilteredComplex& c, const Region& r, int window) {
    return RegionModel(c, r, window);
}

}  // namespace floerkit
