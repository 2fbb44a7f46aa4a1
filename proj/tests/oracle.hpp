#pragma once
// Brute-force oracles for the tests. Deliberately naive: own vertex arithmetic,
// plain backtracking, filtering for symmetry. Only usable on small regions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "ferncore/lattice.hpp"

namespace oracle {

using ferncore::Cell;
using ferncore::Region;

inline std::set<std::pair<int, int>> verts(const Cell& c) {
    if (c.up()) return {{c.p, c.q}, {c.p + 1, c.q}, {c.p, c.q + 1}};
    return {{c.p + 1, c.q}, {c.p, c.q + 1}, {c.p + 1, c.q + 1}};
}

inline bool share_edge(const Cell& a, const Cell& b) {
    if (a.up() == b.up()) return false;
    auto va = verts(a), vb = verts(b);
    int common = 0;
    for (const auto& v : va) common += int(vb.count(v));
    return common == 2;
}

// every tiling as a list of (cell index, cell index) pairs; gives up past `limit`
inline std::vector<std::vector<std::pair<int, int>>> tilings(const Region& r, std::size_t limit = 200000) {
    const int n = int(r.cells.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (share_edge(r.cells[i], r.cells[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<char> used(n, 0);
    std::vector<std::pair<int, int>> cur;
    std::function<void()> rec = [&] {
        if (out.size() > limit) return;
        int i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            out.push_back(cur);
            return;
        }
        used[i] = 1;
        for (int j : adj[i])
            if (!used[j]) {
                used[j] = 1;
                cur.push_back({std::min(i, j), std::max(i, j)});
                rec();
                cur.pop_back();
                used[j] = 0;
            }
        used[i] = 0;
    };
    rec();
    return out;
}

inline std::uint64_t count(const Region& r) { return tilings(r).size(); }

inline std::uint64_t count_symmetric(const Region& r) {
    const int n = int(r.cells.size());
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
        // 180 degree turn of the vertex set about the centre
        std::set<std::pair<int, int>> v;
        for (auto [p, q] : verts(r.cells[i])) v.insert({r.center->cp2 - p, r.center->cq2 - q});
        img[i] = -1;
        for (int j = 0; j < n; ++j)
            if (verts(r.cells[j]) == v) img[i] = j;
    }
    std::uint64_t k = 0;
    for (auto t : tilings(r)) {
        std::set<std::pair<int, int>> s(t.begin(), t.end()), m;
        for (auto [a, b] : t) m.insert({std::min(img[a], img[b]), std::max(img[a], img[b])});
        if (s == m) ++k;
    }
    return k;
}

}  // namespace oracle
