#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "ferncore/lattice.hpp"

namespace ferncore {

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FernSpec {
    std::vector<int> lobes;  // a_1..a_k, first lobe points up
    int o() const;           // a1 + a3 + ...
    int e() const;           // a2 + a4 + ...
    int width() const { return o() + e(); }
};

// Hexagon sides clockwise from the top: t, ne, se, b, sw, nw.
using Sides = std::array<int, 6>;

namespace spec {
struct Hexagon { int x, y, z; };
struct SemiHexagon { std::vector<int> b; };
struct Trapezoid { int m, n; std::vector<int> positions; };
struct FernCored { int x, y, z; FernSpec fern; };
struct FernCoredPrime { int x, y, z; FernSpec half; };
struct MultiFern { int x, y, z; std::vector<int> gaps; std::vector<FernSpec> ferns; };
}  // namespace spec

using RegionSpec = std::variant<spec::Hexagon, spec::SemiHexagon, spec::Trapezoid, spec::FernCored,
                                spec::FernCoredPrime, spec::MultiFern>;

// A region together with the construction data that downstream checks need.
struct Built {
    Region region;
    bool has_sides = false;
    Sides sides{};
    // one entry per removed fern: the vertices of its cells plus the points of its base line
    std::vector<std::vector<Vertex>> holes;
};

Sides multifern_sides(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns);
std::vector<Cell> hexagon_cells(const Sides& s);
SymCenter hexagon_center(const Sides& s);
Vertex aux_base(int x, int y, int z);

std::vector<Cell> build_fern(const FernSpec& f, Vertex base);
int fern_end(const FernSpec& f, Vertex base);  // p-coordinate of the rightmost point

Region build_hexagon(int x, int y, int z);
Region build_fern_cored(int x, int y, int z, const FernSpec& f);
Region build_fern_cored_prime(int x, int y, int z, const FernSpec& half);
Region build_multi_fern(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns);
Region build_semihexagon(const std::vector<int>& b);
Region build_trapezoid(int m, int n, const std::vector<int>& positions);

Built build(const RegionSpec& s);

// Trapezoid parameters equivalent to S(b): m = intact total, n = removed total.
spec::Trapezoid semihexagon_as_trapezoid(const std::vector<int>& b);

std::string describe(const RegionSpec& s);

}  // namespace ferncore
