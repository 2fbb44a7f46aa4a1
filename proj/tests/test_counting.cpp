#include <doctest.h>

#include <random>

#include "ferncore/counting.hpp"
#include "ferncore/formulas.hpp"
#include "ferncore/regions.hpp"
#include "oracle.hpp"

using namespace ferncore;

namespace {

struct Frozen {
    const char* name;
    Region region;
    unsigned long m, msym;  // msym only meaningful when the region has a centre
};

// values produced by the brute-force oracle in oracle.hpp
std::vector<Frozen> frozen() {
    return {
        {"hex(1,1,1)", build_hexagon(1, 1, 1), 2, 0},
        {"hex(2,2,2)", build_hexagon(2, 2, 2), 20, 4},
        {"hex(1,2,3)", build_hexagon(1, 2, 3), 10, 2},
        {"hex(0,2,3)", build_hexagon(0, 2, 3), 1, 1},
        {"FC222(1,1)", build_fern_cored(2, 2, 2, FernSpec{{1, 1}}), 336, 18},
        {"FC222(0,1,1,0)", build_fern_cored(2, 2, 2, FernSpec{{0, 1, 1, 0}}), 336, 18},
        {"FC222(2,2)", build_fern_cored(2, 2, 2, FernSpec{{2, 2}}), 6480, 80},
        {"FC111(1,1)", build_fern_cored(1, 1, 1, FernSpec{{1, 1}}), 4, 0},
        {"FC111(2)", build_fern_cored(1, 1, 1, FernSpec{{2}}), 2, 0},
        {"FC'111(1)", build_fern_cored_prime(1, 1, 1, FernSpec{{1}}), 7, 1},
        {"FC'-133(1)", build_fern_cored_prime(-1, 3, 3, FernSpec{{1}}), 16, 4},
        {"FC'133(1)", build_fern_cored_prime(1, 3, 3, FernSpec{{1}}), 4424, 40},
        {"S(1,1,1)", build_semihexagon({1, 1, 1}), 2, 0},
        {"T12(1,3)", build_trapezoid(1, 2, {1, 3}), 2, 0},
        {"T22(1,4)", build_trapezoid(2, 2, {1, 4}), 3, 0},
        {"MF111(1)|1|(1)", build_multi_fern(1, 1, 1, {1}, {FernSpec{{1}}, FernSpec{{1}}}), 7, 0},
    };
}

}  // namespace

TEST_CASE("frozen oracle values") {
    for (const auto& f : frozen()) {
        CAPTURE(f.name);
        CHECK(count_tilings(f.region) == f.m);
        CHECK(count_matchings_dual(f.region) == f.m);
        CHECK(enumerate_tilings(f.region, 100000).size() == f.m);
        if (f.region.center && is_centrally_symmetric(f.region)) CHECK(count_symmetric_tilings(f.region) == f.msym);
    }
}

TEST_CASE("oracle agreement on the small frozen regions") {
    for (const auto& f : frozen()) {
        if (f.m > 10000) continue;
        CAPTURE(f.name);
        CHECK(oracle::count(f.region) == f.m);
        if (f.region.center && is_centrally_symmetric(f.region)) CHECK(oracle::count_symmetric(f.region) == f.msym);
    }
}

TEST_CASE("degenerate regions") {
    CHECK(count_tilings(Region{}) == 1);
    CHECK(count_matchings_dual(Region{}) == 1);
    CHECK(enumerate_tilings(Region{}, 10).size() == 1);
    CHECK(count_tilings(make_region({Up(0, 0)})) == 0);
    CHECK(count_matchings_dual(make_region({Up(0, 0)})) == 0);
    CHECK(count_tilings(make_region({Up(0, 0), Down(3, 3)})) == 0);
}

TEST_CASE("S(b) has the s-value number of tilings") {
    CHECK(count_tilings(build_semihexagon({3, 3, 2, 5, 4})) == BigInt(s_value({3, 3, 2, 5, 4})));
    CHECK(count_tilings(build_semihexagon({3})) == 1);
}

TEST_CASE("symmetric counting demands a symmetric region") {
    CHECK_THROWS(count_symmetric_tilings(build_semihexagon({1, 1, 1})));
    Region lopsided = make_region({Up(0, 0), Down(0, 0), Up(1, 0)}, SymCenter{1, 1});
    CHECK_THROWS(count_symmetric_tilings(lopsided));
}

TEST_CASE("the central lozenge of FC'(-1,...) is a fixed orbit") {
    Region r = build_fern_cored_prime(-1, 3, 3, FernSpec{{4, 1}});
    BigInt total = count_symmetric_tilings(r);
    bool found = false;
    for (const auto& u : lozenge_usage(r, true))
        if (reflect_cell(u.loz.up, *r.center) == u.loz.down) {
            found = true;
            CHECK(u.tilings == total);
        }
    CHECK(found);
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_WITH(enumerate_tilings(build_hexagon(3, 3, 3), 10), "enumeration too large");
}

TEST_CASE("lozenge usage sums to the number of tilings per cell") {
    Region r = build_fern_cored(2, 1, 3, FernSpec{{1, 2}});
    BigInt total = count_tilings(r);
    auto use = lozenge_usage(r, false);
    for (const Cell& c : r.cells) {
        BigInt s = 0;
        for (const auto& u : use)
            if (u.loz.up == c || u.loz.down == c) s += u.tilings;
        CHECK(s == total);
    }
}

TEST_CASE("dual graph carries the reflection") {
    Region r = build_fern_cored(2, 2, 2, FernSpec{{1, 1}});
    MatchingGraph g = dual_graph(r);
    REQUIRE(int(g.involution.size()) == g.n);
    for (int v = 0; v < g.n; ++v) CHECK(g.involution[g.involution[v]] == v);
    CHECK(count_perfect_matchings(g) == count_tilings(r));
    CHECK(count_symmetric_matchings(g) == count_symmetric_tilings(r));
}

TEST_CASE("removing a forced lozenge leaves the count alone") {
    // in S(2,1), the leftmost Down cell has a single Up neighbour left
    Region r = build_semihexagon({2, 1, 1});
    BigInt before = count_tilings(r);
    for (const Cell& c : r.cells) {
        int nb = 0;
        Cell only{};
        for (const Cell& n : cell_neighbors(c))
            if (r.contains(n)) ++nb, only = n;
        if (nb == 1) {
            CHECK(count_tilings(remove_cells(r, {c, only})) == before);
            break;
        }
    }
}
