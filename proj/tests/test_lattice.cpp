#include <doctest.h>

#include <set>

#include <random>

#include "ferncore/lattice.hpp"
#include "ferncore/regions.hpp"

using namespace ferncore;

TEST_CASE("reflection through a lattice point follows the vertex sets") {
    // (0,0),(1,0),(0,1) turned about (1,1) -> (2,2),(1,2),(2,1), i.e. Down(1,1)
    CHECK(reflect_cell(Up(0, 0), SymCenter{2, 2}) == Down(1, 1));
    CHECK(reflect_cell(Down(1, 1), SymCenter{2, 2}) == Up(0, 0));
}

TEST_CASE("reflection through an edge midpoint gives the lozenge partner") {
    CHECK(reflect_cell(Up(0, 0), SymCenter{1, 1}) == Down(0, 0));
    CHECK(reflect_vertex({0, 0}, SymCenter{1, 1}) == Vertex{1, 1});
}

TEST_CASE("reflection is an orientation-flipping involution") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
        Cell t{d(rng), d(rng), i % 2 ? Orient::Up : Orient::Down};
        SymCenter c{d(rng), d(rng)};
        Cell r = reflect_cell(t, c);
        CHECK(r.up() != t.up());
        CHECK(reflect_cell(r, c) == t);
    }
}

TEST_CASE("neighbours") {
    auto n = cell_neighbors(Up(0, 0));
    CHECK(n[0] == Down(0, 0));
    CHECK(n[1] == Down(-1, 0));
    CHECK(n[2] == Down(0, -1));
    auto m = cell_neighbors(Down(0, 0));
    CHECK(m[0] == Up(0, 0));
    CHECK(m[1] == Up(1, 0));
    CHECK(m[2] == Up(0, 1));
    for (const Cell& c : n) CHECK(adjacent(c, Up(0, 0)));
    CHECK_FALSE(adjacent(Up(0, 0), Up(1, 0)));
    CHECK_FALSE(adjacent(Up(0, 0), Down(1, 0)));
}

TEST_CASE("vertex round trip") {
    for (Cell c : {Up(3, -2), Down(-1, 4)}) CHECK(cell_from_vertices(cell_vertices(c)) == c);
    CHECK_THROWS_AS(cell_from_vertices({Vertex{0, 0}, Vertex{2, 0}, Vertex{0, 1}}), GeometryError);
}

TEST_CASE("central symmetry test") {
    CHECK_FALSE(is_centrally_symmetric(make_region({Up(0, 0)}, SymCenter{1, 1})));
    CHECK(is_centrally_symmetric(make_region({Up(0, 0), Down(0, 0)}, SymCenter{1, 1})));
    CHECK(is_centrally_symmetric(build_fern_cored(2, 2, 2, FernSpec{{1, 1}})));
    CHECK_THROWS_WITH_AS(is_centrally_symmetric(make_region({Up(0, 0)})), "no center declared", GeometryError);
}

TEST_CASE("lattice symmetries preserve adjacency and form a group of 12") {
    Region h = build_hexagon(2, 1, 3);
    std::set<std::vector<Cell>> images;
    for (int g = 0; g < 12; ++g) {
        Region r = apply_symmetry(g, h);
        CHECK(r.size() == h.size());
        images.insert(r.cells);
        for (const Cell& c : h.cells)
            for (const Cell& n : cell_neighbors(c)) CHECK(adjacent(apply_symmetry(g, c), apply_symmetry(g, n)));
    }
    CHECK(images.size() == 12);
}
