#pragma once

// Cancellation: Gaussian elimination on the bifiltration-preserving part of
// the differential (arrows with u_power 0 and equal Alexander grading),
// updating the rest by the zig-zag rule. Deterministic: always cancels the
// lexicographically first cancellable arrow, so golden outputs are stable.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"

namespace floerkit {

inline BifilteredComplex reduce(const BifilteredComplex& input) {
    int n = int(input.generators.size());
    std::vector<bool> alive(n, true);
    // arrows as XOR-sets of u_powers per (from, to)
    std::map<std::pair<int, int>, std::set<int>> out;
    std::map<int, std::set<int>> ins;  // to -> set of froms (with any power)
    std::map<int, std::set<int>> outs;
    auto toggle = [&](int f, int t, int u) {
        auto& s = out[{f, t}];
        if (!s.erase(u)) s.insert(u);
        if (s.empty()) {
            out.erase({f, t});
            // membership sets are refreshed lazily below
        }
        outs[f].insert(t);
        ins[t].insert(f);
    };
    {
        std::map<std::string, int> idx;
        for (int i = 0; i < n; ++i) idx[input.generators[i].name] = i;
        for (const auto& e : input.differential) toggle(idx.at(e.from), idx.at(e.to), e.u_power);
    }
    // name order for deterministic pivoting
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return input.generators[a].name < input.generators[b].name;
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    auto has_arrow = [&](int f, int t, int u) {
        auto it = out.find({f, t});
        return it != out.end() && it->second.count(u);
    };

    while (true) {
        // find the first cancellable arrow: u_power 0, zero filtration shift
        int cf = -1, ct = -1;
        for (int f : order) {
            if (!alive[f]) continue;
            for (int t0 : outs[f]) {
                if (!alive[t0] || t0 == f) continue;
                if (input.generators[t0].alexander != input.generators[f].alexander) continue;
                if (!has_arrow(f, t0, 0)) continue;
                if (ct < 0 || rank[t0] < rank[ct]) ct = t0;
            }
            if (ct >= 0) {
                cf = f;
                break;
            }
        }
        if (cf < 0) break;
        // zig-zag: every a -> U^p ct gains a -> U^(p+q) b for every cf -> U^q b
        std::vector<std::pair<int, int>> into;  // (a, p), a != cf
        for (int a : ins[ct]) {
            if (!alive[a] || a == cf) continue;
            auto it = out.find({a, ct});
            if (it == out.end()) continue;
            for (int p : it->second) into.push_back({a, p});
        }
        std::vector<std::pair<int, int>> from;  // (b, q), b != ct
        for (int b : outs[cf]) {
            if (!alive[b] || b == ct) continue;
            auto it = out.find({cf, b});
            if (it == out.end()) continue;
            for (int q : it->second) from.push_back({b, q});
        }
        for (auto [a, p] : into)
            for (auto [b, q] : from) toggle(a, b, p + q);
        alive[cf] = alive[ct] = false;
        // drop all arrows incident to the cancelled pair
        for (auto it = out.begin(); it != out.end();)
            if (it->first.first == cf || it->first.first == ct || it->first.second == cf ||
                it->first.second == ct)
                it = out.erase(it);
            else
                ++it;
    }

    BifilteredComplex res;
    res.reduced = true;
    std::vector<int> newidx(n, -1);
    for (int i : order)
        if (alive[i]) {
            newidx[i] = int(res.generators.size());
            res.generators.push_back(input.generators[i]);
        }
    for (const auto& [key, us] : out) {
        auto [f, t] = key;
        if (!alive[f] || !alive[t]) continue;
        for (int u : us)
            res.differential.push_back({input.generators[f].name, input.generators[t].name, u});
    }
    std::sort(res.differential.begin(), res.differential.end(), [](const DiffEntry& a, const DiffEntry& b) {
        return std::tie(a.from, a.to, a.u_power) < std::tie(b.from, b.to, b.u_power);
    });
    int maxa = 0;
    for (const auto& g : res.generators) maxa = std::max(maxa, std::abs(g.alexander));
    res.genus = maxa;
    return res;
}

}  // namespace floerkit
