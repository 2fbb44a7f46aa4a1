// Column sweep over p = const. Inside a column the cells form a path
// U(p,q) - D(p,q) - U(p,q+1) - ...; the only edges leaving a column are
// D(p,q) - U(p+1,q). The profile is the set of Ups of the next column that
// are already covered from the left.
#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "ferncore/counting.hpp"

namespace ferncore {

BigInt count_matchings_dual(const Region& r) {
    if (r.size() == 0) return 1;
    if (2 * r.ups() != int(r.size())) return 0;

    int qmin = r.cells.front().q, qmax = r.cells.back().q;
    if (qmax - qmin >= 63) throw CountError("profile DP: region taller than 63 rows");

    std::map<int, std::vector<Cell>> cols;
    for (const Cell& c : r.cells) cols[c.p].push_back(c);
    for (auto& [p, v] : cols) std::sort(v.begin(), v.end());  // by q, Up before Down

    using Profile = std::uint64_t;
    std::unordered_map<Profile, BigInt> cur{{0, 1}};
    int prev_p = cols.begin()->first - 1;
    for (auto& [p, col] : cols) {
        if (p != prev_p + 1) {
            // an empty column in between: nothing may be pending
            auto it = cur.find(0);
            BigInt keep = it == cur.end() ? BigInt(0) : it->second;
            cur.clear();
            if (keep != 0) cur[0] = keep;
        }
        prev_p = p;
        const int m = int(col.size());
        std::unordered_map<Profile, BigInt> nxt;
        for (auto& [in, ways] : cur) {
            // Ups demanded by the profile must exist in this column.
            bool ok = true;
            for (int b = 0; b < 64 && ok; ++b)
                if ((in >> b) & 1u) ok = r.contains(Up(p, qmin + b));
            if (!ok) continue;
            std::vector<char> used(m, 0);
            for (int k = 0; k < m; ++k)
                if (col[k].up() && ((in >> (col[k].q - qmin)) & 1u)) used[k] = 1;
            auto rec = [&](auto&& self, int k, Profile out) -> void {
                while (k < m && used[k]) ++k;
                if (k == m) {
                    nxt[out] += ways;
                    return;
                }
                const Cell& c = col[k];
                bool next_adj = k + 1 < m && !used[k + 1] && adjacent(c, col[k + 1]);
                if (c.up()) {
                    if (!next_adj) return;  // its earlier in-column partner was already passed
                    used[k + 1] = 1;
                    self(self, k + 2, out);
                    used[k + 1] = 0;
                    return;
                }
                if (next_adj) {
                    used[k + 1] = 1;
                    self(self, k + 2, out);
                    used[k + 1] = 0;
                }
                if (r.contains(Up(p + 1, c.q))) self(self, k + 1, out | (Profile(1) << (c.q - qmin)));
            };
            rec(rec, 0, 0);
        }
        cur.swap(nxt);
    }
    auto it = cur.find(0);
    return it == cur.end() ? BigInt(0) : it->second;
}

}  // namespace ferncore
