#pragma once

// A bare finite F2 chain complex with integer gradings and degree -1
// differential. Used for ad-hoc assemblies (cones of maps, hat pieces of the
// surgery complex) that are not subquotients of a single bifiltered complex.

#include <map>
#include <vector>

#include "f2.hpp"

namespace floerkit {

struct FinComplex {
    std::vector<int> grading;
    std::vector<std::vector<int>> bnd;  // per cell: XOR-list of target cells

    int add(int g) {
        grading.push_back(g);
        bnd.emplace_back();
        return int(grading.size()) - 1;
    }

    std::map<int, int> homology_ranks() const {
        std::map<int, std::vector<int>> slices;
        std::map<int, int> pos;
        for (size_t i = 0; i < grading.size(); ++i) {
            pos[int(i)] = int(slices[grading[i]].size());
            slices[grading[i]].push_back(int(i));
        }
        auto slice_dim = [&](int g) {
            auto it = slices.find(g);
            return it == slices.end() ? 0 : int(it->second.size());
        };
        std::map<int, int> ranks;  // grading -> rank of d: C_g -> C_(g-1)
        for (auto& [g, sl] : slices) {
            std::vector<BitVec> img;
            for (int idx : sl) {
                BitVec v(slice_dim(g - 1));
                for (int t : bnd[idx]) {
                    if (grading[t] != g - 1)
                        throw std::runtime_error("finite complex differential is not degree -1");
                    v.flip(pos.at(t));
                }
                img.push_back(std::move(v));
            }
            ranks[g] = f2_rank(img, slice_dim(g - 1));
        }
        std::map<int, int> out;
        for (auto& [g, sl] : slices) {
            int rg = ranks.count(g) ? ranks[g] : 0;
            int rg1 = ranks.count(g + 1) ? ranks[g + 1] : 0;
            int h = int(sl.size()) - rg - rg1;
            if (h) out[g] = h;
        }
        return out;
    }

    int total_homology_rank() const {
        int t = 0;
        for (auto& [g, r] : homology_ranks()) t += r;
        return t;
    }
};

}  // namespace floerkit
