#include <doctest.h>

#include "ferncore/counting.hpp"
#include "ferncore/formulas.hpp"
#include "ferncore/regions.hpp"

using namespace ferncore;

TEST_CASE("hexagon sizes") {
    Region h = build_hexagon(1, 1, 1);
    CHECK(h.size() == 6);
    CHECK(h.ups() == 3);
    Region d = build_hexagon(0, 2, 3);
    CHECK(d.ups() == 6);
    CHECK(d.downs() == 6);
    Region b = build_hexagon(2, 2, 2);
    CHECK(b.size() == 24);
    CHECK(b.center == SymCenter{4, 0});
    CHECK(is_centrally_symmetric(b));
    CHECK_THROWS_AS(build_hexagon(-1, 2, 2), SpecError);
}

TEST_CASE("ferns") {
    CHECK(build_fern(FernSpec{{1}}, {0, 0}) == std::vector<Cell>{Up(0, 0)});
    CHECK(build_fern(FernSpec{{0, 1}}, {0, 0}) == std::vector<Cell>{Down(0, -1)});
    FernSpec f{{1, 2, 6, 3}};
    CHECK(f.o() == 7);
    CHECK(f.e() == 5);
    CHECK(fern_end(f, {0, 0}) == 12);
    CHECK(build_fern(f, {0, 0}).size() == 1 + 4 + 36 + 9);
}

TEST_CASE("a four-lobe fern in FC(2,6,4)") {
    Built b = build(spec::FernCored{2, 6, 4, FernSpec{{1, 2, 6, 3}}});
    CHECK(b.sides == Sides{7, 13, 9, 9, 11, 11});
    CHECK(b.region.ups() == b.region.downs());
}

TEST_CASE("fern-cored hexagons") {
    CHECK(build_fern_cored(2, 3, 1, FernSpec{}).cells == build_hexagon(2, 3, 1).cells);
    Region r = build_fern_cored(2, 2, 2, FernSpec{{1, 1}});
    CHECK(r.center.has_value());
    CHECK(is_centrally_symmetric(r));
    CHECK(build_fern_cored(2, 2, 2, FernSpec{{0, 0}}).cells == build_hexagon(2, 2, 2).cells);
    // the parity shifts keep the region balanced
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                Region s = build_fern_cored(x, y, z, FernSpec{{2, 1, 0, 1}});
                CHECK(s.ups() == s.downs());
            }
}

TEST_CASE("FC' regions") {
    Region h = build_fern_cored_prime(1, 3, 1, FernSpec{{0}});
    CHECK(h.cells == build_hexagon(2, 3, 1).cells);
    Region fig4 = build_fern_cored_prime(-1, 3, 3, FernSpec{{4, 1}});
    CHECK(fig4.center.has_value());
    CHECK(is_centrally_symmetric(fig4));
    CHECK(fig4.ups() == fig4.downs());
    // the two ferns are one unit apart, centred on the centre of H
    CHECK(fig4.center->cq2 % 2 == 0);
    CHECK(fig4.center->cp2 % 2 == 1);
    CHECK(is_centrally_symmetric(build_fern_cored_prime(0, 4, 2, FernSpec{{4, 1}})));
    CHECK_THROWS_AS(build_fern_cored_prime(-2, 2, 2, FernSpec{{1}}), SpecError);
    CHECK_THROWS_AS(build_fern_cored_prime(0, 1, 2, FernSpec{{1}}), SpecError);
}

TEST_CASE("FC' is a two-fern system with gap 1") {
    for (auto half : std::vector<std::vector<int>>{{1}, {2, 1}, {1, 0, 2}, {0, 1}})
        for (auto [x, y, z] : std::vector<std::array<int, 3>>{{0, 2, 0}, {1, 1, 3}, {2, 0, 2}, {1, 3, 1}}) {
            FernSpec a{pad_even(half)};
            std::vector<int> rev(a.lobes.rbegin(), a.lobes.rend());
            Region fm = build_multi_fern(x, y, z, {1}, {a, FernSpec{rev}});
            Region fp = build_fern_cored_prime(x, y, z, FernSpec{half});
            CHECK(fm.cells == fp.cells);
        }
}

TEST_CASE("multi-fern regions") {
    CHECK(build_multi_fern(2, 1, 3, {}, {FernSpec{{1, 2}}}).cells == build_fern_cored(2, 1, 3, FernSpec{{1, 2}}).cells);
    CHECK(build_multi_fern(1, 1, 1, {2}, {FernSpec{{0, 0}}, FernSpec{{0}}}).cells == build_hexagon(3, 1, 1).cells);
    CHECK_THROWS_AS(build_multi_fern(1, 1, 1, {}, {FernSpec{{1}}, FernSpec{{1}}}), SpecError);
    CHECK_THROWS_AS(build_multi_fern(1, 1, 1, {-1}, {FernSpec{{1}}, FernSpec{{1}}}), SpecError);
}

TEST_CASE("semihexagons and trapezoids") {
    CHECK(build_semihexagon({0}).size() == 0);
    Region s3 = build_semihexagon({3});
    CHECK(s3.ups() == s3.downs());
    CHECK(count_tilings(s3) == 1);
    auto t = semihexagon_as_trapezoid({3, 3, 2, 5, 4});
    CHECK(t.n == 9);
    CHECK(t.m == 8);
    CHECK(build_semihexagon({3, 3, 2, 5, 4}).cells == build_trapezoid(t.m, t.n, t.positions).cells);
    CHECK(build_trapezoid(0, 3, {1, 2, 3}).size() == 6);
    CHECK(count_tilings(build_trapezoid(0, 3, {1, 2, 3})) == 1);
    CHECK(count_tilings(build_trapezoid(3, 0, {})) == 1);
    CHECK_THROWS_AS(build_trapezoid(1, 2, {1, 1}), SpecError);
    CHECK_THROWS_AS(build_trapezoid(1, 2, {1, 4}), SpecError);
    CHECK_THROWS_AS(build_trapezoid(1, 2, {1}), SpecError);
}

TEST_CASE("removing the forced part of S(b_1..b_2l) leaves S(b_1..b_2l-1)") {
    // the trailing intact run only adds a strip of forced lozenges
    for (auto b : std::vector<std::vector<int>>{{1, 2}, {2, 1, 1, 3}, {3, 3, 2, 5}})
        CHECK(count_tilings(build_semihexagon(b)) == count_tilings(build_semihexagon({b.begin(), b.end() - 1})));
}

TEST_CASE("describe round trip text") {
    CHECK(describe(spec::FernCoredPrime{-1, 3, 3, FernSpec{{4, 1}}}) == "fcp:x=-1,y=3,z=3,a=4,1");
    CHECK(describe(spec::Hexagon{1, 2, 3}) == "hex:x=1,y=2,z=3");
}
