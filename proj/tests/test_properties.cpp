#include <doctest.h>

#include <random>
#include <set>

#include "ferncore/counting.hpp"
#include "ferncore/regions.hpp"
#include "oracle.hpp"

using namespace ferncore;

namespace {

// a hexagon with a random handful of cells knocked out, optionally in symmetric pairs
Region random_region(std::mt19937_64& rng, bool symmetric) {
    std::uniform_int_distribution<int> side(0, 3);
    int x = side(rng), y = side(rng), z = side(rng);
    Region h = build_hexagon(x, y, z);
    if (h.size() == 0) return h;
    std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
    std::vector<Cell> gone;
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < k; ++i) {
        Cell c = h.cells[pick(rng)];
        gone.push_back(c);
        if (symmetric) gone.push_back(reflect_cell(c, *h.center));
    }
    return remove_cells(h, gone);
}

}  // namespace

TEST_CASE("all counters agree with the oracle on random regions") {
    std::mt19937_64 rng(20261017);
    for (int i = 0; i < 250; ++i) {
        Region r = random_region(rng, false);
        CAPTURE(i);
        BigInt m = count_tilings(r);
        CHECK(m == oracle::count(r));
        CHECK(count_matchings_dual(r) == m);
    }
}

TEST_CASE("symmetric counts agree with the oracle and with M mod 2") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 250; ++i) {
        Region r = random_region(rng, true);
        CAPTURE(i);
        REQUIRE(is_centrally_symmetric(r));
        BigInt m = count_tilings(r), s = count_symmetric_tilings(r);
        CHECK(s == oracle::count_symmetric(r));
        CHECK(s <= m);
        // non-symmetric tilings come in reflected pairs
        CHECK(BigInt(m - s) % 2 == 0);
    }
}

TEST_CASE("counts are invariant under the 12 lattice symmetries") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        Region r = random_region(rng, true);
        BigInt m = count_tilings(r), s = count_symmetric_tilings(r);
        for (int g = 0; g < 12; ++g) {
            Region t = apply_symmetry(g, r);
            CHECK(count_tilings(t) == m);
            CHECK(count_symmetric_tilings(t) == s);
        }
    }
}

TEST_CASE("enumerated tilings are valid and distinct") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Region r = random_region(rng, false);
        auto ts = enumerate_tilings(r, 100000);
        CHECK(BigInt(ts.size()) == count_tilings(r));
        std::set<Tiling> uniq(ts.begin(), ts.end());
        CHECK(uniq.size() == ts.size());
        for (const auto& t : ts) {
            std::set<Cell> covered;
            for (const auto& l : t) {
                CHECK(adjacent(l.up, l.down));
                covered.insert(l.up);
                covered.insert(l.down);
            }
            CHECK(covered.size() == r.size());
        }
    }
}
