#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ferncore {

// Oblique coordinates: vertex (p,q) sits at p*e1 + q*e2, e1 and e2 at 60 degrees.
struct Vertex {
    int p = 0, q = 0;
    auto operator<=>(const Vertex&) const = default;
};

enum class Orient : std::uint8_t { Up = 0, Down = 1 };

// Up(p,q)   = {(p,q), (p+1,q), (p,q+1)}
// Down(p,q) = {(p+1,q), (p,q+1), (p+1,q+1)}
struct Cell {
    int p = 0, q = 0;
    Orient o = Orient::Up;

    bool up() const { return o == Orient::Up; }
    // row-major: q, then p, Up before Down. Every counter relies on this order.
    auto operator<=>(const Cell& b) const {
        if (auto c = q <=> b.q; c != 0) return c;
        if (auto c = p <=> b.p; c != 0) return c;
        return o <=> b.o;
    }
    bool operator==(const Cell&) const = default;
};

inline Cell Up(int p, int q) { return {p, q, Orient::Up}; }
inline Cell Down(int p, int q) { return {p, q, Orient::Down}; }

// A point in doubled coordinates, (cp2/2, cq2/2).
struct SymCenter {
    int cp2 = 0, cq2 = 0;
    bool operator==(const SymCenter&) const = default;
};

struct Region {
    std::vector<Cell> cells;  // sorted, unique
    std::optional<SymCenter> center;

    std::size_t size() const { return cells.size(); }
    bool contains(const Cell& c) const;
    long index_of(const Cell& c) const;  // -1 if absent
    int ups() const;
    int downs() const { return int(cells.size()) - ups(); }
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<Vertex, 3> cell_vertices(const Cell& t);
Cell cell_from_vertices(std::array<Vertex, 3> v);  // throws if not a unit triangle

Cell reflect_cell(const Cell& t, const SymCenter& c);
Vertex reflect_vertex(const Vertex& v, const SymCenter& c);
std::array<Cell, 3> cell_neighbors(const Cell& t);  // Up: D(p,q), D(p-1,q), D(p,q-1); Down: U(p,q), U(p+1,q), U(p,q+1)
bool adjacent(const Cell& a, const Cell& b);

bool is_centrally_symmetric(const Region& r);  // throws when r.center is absent

// Lattice symmetries: rotation by k*60 degrees (about the origin), optionally
// preceded by the reflection (p,q) -> (q,p). 12 elements, index 0..11.
Vertex apply_symmetry(int g, Vertex v);
Cell apply_symmetry(int g, const Cell& t);
SymCenter apply_symmetry(int g, const SymCenter& c);
Region apply_symmetry(int g, const Region& r);

Region make_region(std::vector<Cell> cells, std::optional<SymCenter> center = std::nullopt);
Region translate(const Region& r, int dp, int dq);

std::string to_string(const Cell& t);

}  // namespace ferncore
