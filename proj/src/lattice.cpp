#include "ferncore/lattice.hpp"

#include <algorithm>

namespace ferncore {

bool Region::contains(const Cell& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

long Region::index_of(const Cell& c) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || !(*it == c)) return -1;
    return long(it - cells.begin());
}

int Region::ups() const {
    return int(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.up(); }));
}

std::array<Vertex, 3> cell_vertices(const Cell& t) {
    if (t.up()) return {Vertex{t.p, t.q}, Vertex{t.p + 1, t.q}, Vertex{t.p, t.q + 1}};
    return {Vertex{t.p + 1, t.q}, Vertex{t.p, t.q + 1}, Vertex{t.p + 1, t.q + 1}};
}

Cell cell_from_vertices(std::array<Vertex, 3> v) {
    std::sort(v.begin(), v.end());
    int p = std::min({v[0].p, v[1].p, v[2].p});
    int q = std::min({v[0].q, v[1].q, v[2].q});
    for (Cell c : {Up(p, q), Down(p, q)}) {
        auto w = cell_vertices(c);
        std::sort(w.begin(), w.end());
        if (w == v) return c;
    }
    throw GeometryError("vertices do not form a unit triangle");
}

Cell reflect_cell(const Cell& t, const SymCenter& c) {
    return {c.cp2 - t.p - 1, c.cq2 - t.q - 1, t.up() ? Orient::Down : Orient::Up};
}

Vertex reflect_vertex(const Vertex& v, const SymCenter& c) {
    return {c.cp2 - v.p, c.cq2 - v.q};
}

std::array<Cell, 3> cell_neighbors(const Cell& t) {
    if (t.up()) return {Down(t.p, t.q), Down(t.p - 1, t.q), Down(t.p, t.q - 1)};
    return {Up(t.p, t.q), Up(t.p + 1, t.q), Up(t.p, t.q + 1)};
}

bool adjacent(const Cell& a, const Cell& b) {
    for (const Cell& n : cell_neighbors(a))
        if (n == b) return true;
    return false;
}

bool is_centrally_symmetric(const Region& r) {
    if (!r.center) throw GeometryError("no center declared");
    for (const Cell& c : r.cells)
        if (!r.contains(reflect_cell(c, *r.center))) return false;
    return true;
}

namespace {
// 60 degree rotation: e1 -> e2, e2 -> e2 - e1. Linear, so it also acts on doubled coords.
Vertex rot(Vertex v) { return {-v.q, v.p + v.q}; }
}  // namespace

Vertex apply_symmetry(int g, Vertex v) {
    if (g < 0 || g >= 12) throw GeometryError("symmetry index out of range");
    if (g >= 6) v = {v.q, v.p};
    for (int k = 0; k < g % 6; ++k) v = rot(v);
    return v;
}

Cell apply_symmetry(int g, const Cell& t) {
    auto v = cell_vertices(t);
    for (auto& x : v) x = apply_symmetry(g, x);
    return cell_from_vertices(v);
}

SymCenter apply_symmetry(int g, const SymCenter& c) {
    Vertex v = apply_symmetry(g, Vertex{c.cp2, c.cq2});
    return {v.p, v.q};
}

Region apply_symmetry(int g, const Region& r) {
    std::vector<Cell> cs;
    cs.reserve(r.cells.size());
    for (const Cell& c : r.cells) cs.push_back(apply_symmetry(g, c));
    std::optional<SymCenter> cen;
    if (r.center) cen = apply_symmetry(g, *r.center);
    return make_region(std::move(cs), cen);
}

Region make_region(std::vector<Cell> cells, std::optional<SymCenter> center) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return Region{std::move(cells), center};
}

Region translate(const Region& r, int dp, int dq) {
    Region out = r;
    for (auto& c : out.cells) {
        c.p += dp;
        c.q += dq;
    }
    if (out.center) {
        out.center->cp2 += 2 * dp;
        out.center->cq2 += 2 * dq;
    }
    return out;
}

std::string to_string(const Cell& t) {
    return std::string(t.up() ? "U(" : "D(") + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
}

}  // namespace ferncore
