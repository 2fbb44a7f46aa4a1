#include <doctest.h>

#include "ferncore/verify.hpp"

using namespace ferncore;

namespace {
bool all_asserted_hold(const VerificationReport& r) {
    for (const auto& i : r.identities)
        if (i.asserted && !i.holds) return false;
    return !r.identities.empty();
}
}  // namespace

TEST_CASE("symmetric ratios") {
    auto r = theorem1_check(2, 2, 2, {1});
    CHECK(r.status() == Status::Pass);
    CHECK(theorem1_check(0, 2, 4, {1, 2}).status() == Status::Pass);
    CHECK(theorem2_check(1, 3, 3, {1, 1}).status() == Status::Pass);
    CHECK(theorem2_check(-1, 3, 3, {4, 1}).status() == Status::Pass);
    CHECK(theorem2_check(-1, 3, 3, {4, 1}).counts.at("Msym(FC'(a))") == "11880");
    CHECK(theorem2_check(-1, 3, 3, {4, 1}).counts.at("Msym(FC'(a))_norm") == "792");
}

TEST_CASE("single fern slice passes, the printed product does not") {
    auto r = conjecture1_single_check(2, 2, 2, {1, 1, 1});
    CHECK(r.identities[0].asserted);
    CHECK(r.identities[0].holds);
    CHECK_FALSE(r.identities[1].asserted);
    CHECK(r.status() != Status::Fail);
}

TEST_CASE("conjectural identities are never asserted") {
    auto m = conjecture1_multi_check(1, 1, 1, {1}, {FernSpec{{1}}, FernSpec{{1}}});
    for (const auto& i : m.identities) CHECK_FALSE(i.asserted);
    auto c = conjecture2_check(2, 2, 2, {1}, {FernSpec{{1}}});
    for (const auto& i : c.identities) CHECK_FALSE(i.asserted);
    CHECK(c.status() != Status::Fail);
}

TEST_CASE("empty symmetric normaliser is an error, not a verdict") {
    CHECK_THROWS_AS(conjecture2_check(1, 1, 1, {0}, {FernSpec{{1}}}), CountError);
}

TEST_CASE("condensation on both placements") {
    Built central = build(spec::FernCored{2, 2, 2, FernSpec{{1, 1}}});
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto r = kuo_region_check(central, Placement::CentralFace, seed);
        CHECK(r.status() == Status::Pass);
    }
    Built adj = build(spec::FernCoredPrime{1, 3, 3, FernSpec{{1}}});
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto r = kuo_region_check(adj, Placement::AdjacentFaces, seed);
        CHECK(r.status() == Status::Pass);
    }
}

TEST_CASE("invalid surgeries are rejected") {
    Region r = build_fern_cored(2, 2, 2, FernSpec{{1, 1}});
    DualGraph g = dual_of(r);
    SurgerySpec bad;
    bad.a = {0, 1};  // almost certainly not images of each other
    bad.b = {2, 3};
    bad.c = {4, 5};
    bad.d = {6, 7};
    CHECK_THROWS_AS(kuo_identity_check(g, bad), SpecError);
    SurgerySpec range;
    range.a = {-1, 0};
    CHECK_THROWS_AS(kuo_identity_check(g, range), SpecError);
    CHECK_THROWS_AS(dual_of(build_semihexagon({1, 1, 1})), SpecError);
}

TEST_CASE("recurrences: symmetric first term holds, plain first term does not") {
    auto a = recurrence_check_fc(2, 2, 2, {1});
    CHECK(a.identities[0].holds);
    CHECK_FALSE(a.identities[1].holds);
    CHECK(a.status() == Status::Counterexample);
    auto b = recurrence_check_fc_prime(1, 3, 3, {1});
    CHECK(b.identities[0].holds);
    CHECK(recurrence_check_fc_prime(2, 2, 2, {}).identities[0].holds);
    CHECK_THROWS_AS(recurrence_check_fc(1, 2, 2, {1}), SpecError);
    CHECK_THROWS_AS(recurrence_check_fc_prime(1, 2, 2, {1}), SpecError);
}

TEST_CASE("FC'(1,1,1;1) is not centrally symmetric in the expected way") {
    // the odd region has symmetric tilings, but the normaliser has none
    CHECK(count_symmetric_tilings(build_fern_cored_prime(1, 1, 1, FernSpec{{1}})) == 1);
}

TEST_CASE("base cases reduce to trapezoids") {
    struct C {
        BaseKind k;
        int x, y, z;
        std::vector<int> h;
    };
    for (const C& c : std::vector<C>{{BaseKind::FC_x0, 0, 2, 4, {4, 1}},
                                     {BaseKind::FC_z0, 4, 4, 0, {4, 1}},
                                     {BaseKind::FCp_xm1, -1, 3, 3, {4, 1}},
                                     {BaseKind::FCp_x0, 0, 4, 2, {4, 1}},
                                     {BaseKind::FCp_z0, 4, 6, 0, {3, 1}},
                                     {BaseKind::FCp_z1, 3, 3, 1, {4, 1}},
                                     {BaseKind::FC_x0, 0, 2, 2, {1}},
                                     {BaseKind::FCp_x0, 0, 2, 2, {1, 1}}}) {
        CAPTURE(to_string(c.k));
        auto r = base_case_check(c.k, c.x, c.y, c.z, c.h);
        CHECK(all_asserted_hold(r));
        CHECK(r.status() == Status::Pass);
    }
    CHECK_THROWS_AS(base_case_check(BaseKind::FC_x0, 2, 2, 2, {1}), SpecError);
    CHECK(base_kind_from_string("fcp-z1") == BaseKind::FCp_z1);
    CHECK_THROWS(base_kind_from_string("nope"));
}

TEST_CASE("trapezoid recogniser finds a bare trapezoid") {
    Region t = build_trapezoid(2, 2, {1, 4});
    auto m = recognise_trapezoid(t);
    REQUIRE(m.has_value());
    CHECK(count_tilings(m->trapezoid) == 3);
    CHECK(trapezoid_count(m->m, m->n, m->positions) == 3);
}
