#include "ferncore/counting.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace ferncore {

namespace {

constexpr int kWords = 4;
constexpr int kMaxWindow = 64 * kWords;

struct Mask {
    std::array<std::uint64_t, kWords> w{};

    bool test(int d) const { return (w[d >> 6] >> (d & 63)) & 1u; }
    void set(int d) { w[d >> 6] |= std::uint64_t(1) << (d & 63); }
    void shr(int k) {
        if (k >= kMaxWindow) {
            w = {};
            return;
        }
        int ws = k >> 6, bs = k & 63;
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t lo = i + ws < kWords ? w[i + ws] : 0;
            std::uint64_t hi = i + ws + 1 < kWords ? w[i + ws + 1] : 0;
            w[i] = bs ? (lo >> bs) | (hi << (64 - bs)) : lo;
        }
    }
    bool operator==(const Mask&) const = default;
};

struct MaskHash {
    std::size_t operator()(const Mask& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : m.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return std::size_t(h ^ (h >> 31));
    }
};

// Vertices 0..n-1 in sweep order. In mirrored mode vertex i is paired with n-1-i.
struct Ordered {
    int n = 0;
    std::vector<std::vector<int>> later;
    bool mirrored = false;
    int W = 1;
};

struct State {
    int i;
    Mask m;
};

// Frontier elimination: the lowest uncovered vertex must be matched to a later
// neighbour. Everything before i is covered; coverage at or after i lives in a
// W-wide window (plus its mirror image in mirrored mode). Two partial tilings
// with the same (i, window) have the same completions, so they are merged.
class Frontier {
public:
    explicit Frontier(const Ordered& g) : g_(g), end_(g.mirrored ? g.n / 2 : g.n) {}

    int end() const { return end_; }

    State start() const {
        State s{0, {}};
        for (int d = 0; d < g_.W; ++d)
            if (d >= g_.n) s.m.set(d);
        return advance(s, {}, 0);
    }

    // f(j, next) for each admissible partner j of s.i.
    template <class F>
    void successors(const State& s, F&& f) const {
        const int i = s.i, n = g_.n;
        for (int j : g_.later[i]) {
            if (covered(s, j)) continue;
            std::array<int, 4> placed{i, j, -1, -1};
            int np = 2;
            if (g_.mirrored && j != n - 1 - i) {
                placed[2] = n - 1 - i;
                placed[3] = n - 1 - j;
                np = 4;
            }
            f(j, advance(s, placed, np));
        }
    }

private:
    bool covered(const State& s, int c) const {
        const int n = g_.n;
        if (c < s.i || c >= n) return true;
        if (g_.mirrored && c > n - 1 - s.i) return true;
        if (c - s.i < g_.W) return s.m.test(c - s.i);
        if (g_.mirrored) {
            int r = n - 1 - c;
            if (r >= s.i && r - s.i < g_.W) return s.m.test(r - s.i);
        }
        return false;
    }

    State advance(const State& s, const std::array<int, 4>& placed, int np) const {
        auto placed_has = [&](int c) {
            for (int k = 0; k < np; ++k)
                if (placed[k] == c) return true;
            return false;
        };
        auto cov = [&](int c) { return placed_has(c) || covered(s, c); };
        int ni = s.i;
        while (ni < end_ && cov(ni)) ++ni;
        if (ni >= end_) return State{end_, {}};
        Mask m = s.m;
        for (int k = 0; k < np; ++k) {
            int d = placed[k] - s.i;
            if (d >= 0 && d < g_.W) m.set(d);
        }
        int shift = ni - s.i;
        m.shr(shift);
        int from = std::max(0, g_.W - shift);
        for (int d = from; d < g_.W; ++d)
            if (cov(ni + d)) m.set(d);
        return State{ni, m};
    }

    const Ordered& g_;
    int end_;
};

using Layer = std::unordered_map<Mask, BigInt, MaskHash>;

BigInt run_count(const Ordered& g) {
    if (g.n == 0) return 1;
    Frontier fr(g);
    std::vector<Layer> layers(fr.end() + 1);
    State s0 = fr.start();
    layers[s0.i][s0.m] = 1;
    for (int i = 0; i < fr.end(); ++i) {
        for (auto& [m, v] : layers[i]) {
            State s{i, m};
            fr.successors(s, [&](int, const State& nx) { layers[nx.i][nx.m] += v; });
        }
        Layer().swap(layers[i]);
    }
    auto it = layers[fr.end()].find(Mask{});
    return it == layers[fr.end()].end() ? BigInt(0) : it->second;
}

// usage[e] for e indexing `edge_of(i,j)` (ordered labels, i<j)
template <class EdgeOf>
void run_usage(const Ordered& g, EdgeOf edge_of, std::vector<BigInt>& usage) {
    if (g.n == 0) return;
    Frontier fr(g);
    std::vector<Layer> fwd(fr.end() + 1);
    State s0 = fr.start();
    fwd[s0.i][s0.m] = 1;
    for (int i = 0; i < fr.end(); ++i)
        for (auto& [m, v] : fwd[i]) {
            State s{i, m};
            fr.successors(s, [&](int, const State& nx) { fwd[nx.i][nx.m] += v; });
        }
    std::vector<Layer> bwd(fr.end() + 1);
    bwd[fr.end()][Mask{}] = 1;
    for (int i = fr.end() - 1; i >= 0; --i)
        for (auto& [m, f] : fwd[i]) {
            State s{i, m};
            BigInt total = 0;
            fr.successors(s, [&](int j, const State& nx) {
                auto it = bwd[nx.i].find(nx.m);
                if (it == bwd[nx.i].end() || it->second == 0) return;
                total += it->second;
                BigInt through = f * it->second;
                usage[edge_of(i, j)] += through;
                if (g.mirrored && j != g.n - 1 - i) usage[edge_of(g.n - 1 - j, g.n - 1 - i)] += through;
            });
            bwd[i][m] = total;
        }
}

int window_of(const std::vector<std::vector<int>>& later) {
    int w = 1;
    for (std::size_t i = 0; i < later.size(); ++i)
        for (int j : later[i]) w = std::max(w, j - int(i) + 1);
    return w;
}

void check_window(int w) {
    if (w > kMaxWindow) throw CountError("frontier too wide (" + std::to_string(w) + " > " + std::to_string(kMaxWindow) + ")");
}

// Region in sweep order. The lattice rotation with the narrowest frontier is used;
// rotating commutes with the central reflection, and for a symmetric region the
// sorted order is reversed by the reflection, so label i mirrors to n-1-i.
struct RegionOrder {
    Ordered g;
    std::vector<Cell> original;  // label -> cell of the input region
};

RegionOrder order_region(const Region& r, bool mirrored) {
    RegionOrder best;
    int best_w = -1;
    for (int rot = 0; rot < 6; ++rot) {
        std::vector<std::pair<Cell, Cell>> pc;
        pc.reserve(r.cells.size());
        for (const Cell& c : r.cells) pc.push_back({apply_symmetry(rot, c), c});
        std::sort(pc.begin(), pc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Cell> rc;
        rc.reserve(pc.size());
        for (auto& p : pc) rc.push_back(p.first);
        Ordered g;
        g.n = int(rc.size());
        g.mirrored = mirrored;
        g.later.resize(g.n);
        for (int i = 0; i < g.n; ++i)
            for (const Cell& nb : cell_neighbors(rc[i])) {
                auto it = std::lower_bound(rc.begin(), rc.end(), nb);
                if (it != rc.end() && *it == nb && it - rc.begin() > i) g.later[i].push_back(int(it - rc.begin()));
            }
        for (auto& l : g.later) std::sort(l.begin(), l.end());
        g.W = window_of(g.later);
        if (best_w < 0 || g.W < best_w) {
            best_w = g.W;
            best.g = std::move(g);
            best.original.clear();
            for (auto& p : pc) best.original.push_back(p.second);
        }
    }
    check_window(best.g.W);
    return best;
}

bool balanced(const Region& r) { return 2 * r.ups() == int(r.size()); }

void require_symmetric(const Region& r) {
    if (!r.center) throw CountError("region has no symmetry center");
    if (!is_centrally_symmetric(r)) throw CountError("region is not centrally symmetric");
}

Ordered order_graph(const MatchingGraph& mg, bool mirrored) {
    std::vector<int> label(mg.n, -1);
    if (mirrored) {
        if (int(mg.involution.size()) != mg.n) throw CountError("involution size mismatch");
        if (mg.n % 2) throw CountError("odd vertex count with a fixed-point-free involution");
        int k = 0;
        for (int v = 0; v < mg.n; ++v) {
            int w = mg.involution[v];
            if (w < 0 || w >= mg.n || w == v || mg.involution[w] != v) throw CountError("bad involution");
            if (label[v] >= 0) continue;
            label[v] = k;
            label[w] = mg.n - 1 - k;
            ++k;
        }
    } else {
        for (int v = 0; v < mg.n; ++v) label[v] = v;
    }
    Ordered g;
    g.n = mg.n;
    g.mirrored = mirrored;
    g.later.resize(g.n);
    for (auto [a, b] : mg.edges) {
        if (a < 0 || b < 0 || a >= mg.n || b >= mg.n || a == b) throw CountError("bad edge");
        int la = label[a], lb = label[b];
        if (la > lb) std::swap(la, lb);
        g.later[la].push_back(lb);
    }
    for (auto& l : g.later) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    g.W = window_of(g.later);
    check_window(g.W);
    return g;
}

}  // namespace

MatchingGraph dual_graph(const Region& r) {
    MatchingGraph g;
    g.n = int(r.size());
    for (int i = 0; i < g.n; ++i)
        for (const Cell& nb : cell_neighbors(r.cells[i])) {
            long j = r.index_of(nb);
            if (j > i) g.edges.push_back({i, int(j)});
        }
    if (r.center && is_centrally_symmetric(r)) {
        g.involution.resize(g.n);
        for (int i = 0; i < g.n; ++i) g.involution[i] = int(r.index_of(reflect_cell(r.cells[i], *r.center)));
    }
    return g;
}

BigInt count_perfect_matchings(const MatchingGraph& g) { return run_count(order_graph(g, false)); }

BigInt count_symmetric_matchings(const MatchingGraph& g) { return run_count(order_graph(g, true)); }

BigInt count_tilings(const Region& r) {
    if (r.size() == 0) return 1;
    if (!balanced(r)) return 0;
    return run_count(order_region(r, false).g);
}

BigInt count_symmetric_tilings(const Region& r) {
    require_symmetric(r);
    if (r.size() == 0) return 1;
    if (!balanced(r)) return 0;
    return run_count(order_region(r, true).g);
}

std::vector<Lozenge> region_lozenges(const Region& r) {
    std::vector<Lozenge> out;
    for (const Cell& c : r.cells)
        if (c.up())
            for (const Cell& nb : cell_neighbors(c))
                if (r.contains(nb)) out.push_back({c, nb});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LozengeUse> lozenge_usage(const Region& r, bool symmetric) {
    if (symmetric) require_symmetric(r);
    auto loz = region_lozenges(r);
    std::vector<BigInt> usage(loz.size());
    if (r.size() && balanced(r)) {
        RegionOrder ro = order_region(r, symmetric);
        auto edge_of = [&](int i, int j) {
            Cell a = ro.original[i], b = ro.original[j];
            Lozenge l = a.up() ? Lozenge{a, b} : Lozenge{b, a};
            return std::size_t(std::lower_bound(loz.begin(), loz.end(), l) - loz.begin());
        };
        run_usage(ro.g, edge_of, usage);
    }
    std::vector<LozengeUse> out;
    for (std::size_t k = 0; k < loz.size(); ++k) out.push_back({loz[k], usage[k]});
    return out;
}

Region remove_cells(const Region& r, const std::vector<Cell>& cells) {
    std::vector<Cell> gone = cells;
    std::sort(gone.begin(), gone.end());
    std::vector<Cell> keep;
    keep.reserve(r.size());
    for (const Cell& c : r.cells)
        if (!std::binary_search(gone.begin(), gone.end(), c)) keep.push_back(c);
    return Region{std::move(keep), r.center};
}

Tiling reflect_tiling(const Tiling& t, const SymCenter& c) {
    Tiling out;
    out.reserve(t.size());
    for (const Lozenge& l : t) out.push_back({reflect_cell(l.down, c), reflect_cell(l.up, c)});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
    std::vector<Tiling> out;
    if (!balanced(r)) return out;
    const int n = int(r.size());
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> later(n);
    for (int i = 0; i < n; ++i)
        for (const Cell& nb : cell_neighbors(r.cells[i])) {
            long j = r.index_of(nb);
            if (j > i) later[i].push_back(int(j));
        }
    for (auto& l : later) std::sort(l.begin(), l.end());
    Tiling cur;
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (out.size() >= limit) throw CountError("enumeration too large");
            Tiling t = cur;
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
            return;
        }
        for (int j : later[i]) {
            if (used[j]) continue;
            used[i] = used[j] = 1;
            const Cell &a = r.cells[i], &b = r.cells[j];
            cur.push_back(a.up() ? Lozenge{a, b} : Lozenge{b, a});
            self(self, i + 1);
            cur.pop_back();
            used[i] = used[j] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ferncore
