#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ferncore/verify.hpp"

namespace ferncore {

DualGraph dual_of(const Region& r) {
    DualGraph d;
    d.graph = dual_graph(r);
    if (d.graph.involution.empty()) throw SpecError("dual graph needs a centrally symmetric region");
    for (const Cell& c : r.cells) d.color.push_back(c.up() ? 0 : 1);
    return d;
}

namespace {

MatchingGraph delete_vertices(const MatchingGraph& g, const std::vector<int>& gone) {
    std::vector<int> label(g.n, 0);
    for (int v : gone) label[v] = -1;
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (label[v] == 0) label[v] = k++;
        else label[v] = -1;
    MatchingGraph h;
    h.n = k;
    for (auto [a, b] : g.edges)
        if (label[a] >= 0 && label[b] >= 0) h.edges.push_back({label[a], label[b]});
    if (!g.involution.empty()) {
        h.involution.resize(k);
        for (int v = 0; v < g.n; ++v)
            if (label[v] >= 0) {
                int w = g.involution[v];
                if (label[w] < 0) throw SpecError("deletion set is not symmetric");
                h.involution[label[v]] = label[w];
            }
    }
    return h;
}

}  // namespace

VerificationReport kuo_identity_check(const DualGraph& g, const SurgerySpec& s) {
    const auto& inv = g.graph.involution;
    if (int(inv.size()) != g.graph.n) throw SpecError("invalid surgery: graph has no involution");
    std::set<int> all;
    for (auto* p : {&s.a, &s.b, &s.c, &s.d}) {
        for (int v : *p) {
            if (v < 0 || v >= g.graph.n) throw SpecError("invalid surgery: vertex out of range");
            all.insert(v);
        }
        if (inv[(*p)[0]] != (*p)[1]) throw SpecError("invalid surgery: pair is not symmetric");
    }
    if (all.size() != 8) throw SpecError("invalid surgery: vertices not distinct");
    std::array<int, 6> cyc{s.a[0], s.b[0], s.c[0], s.a[1], s.b[1], s.c[1]};
    for (int i = 0; i < 6; ++i)
        if (g.color[cyc[i]] == g.color[cyc[(i + 1) % 6]]) throw SpecError("invalid surgery: outer vertices do not alternate in colour");

    auto M = [&](std::initializer_list<const std::array<int, 2>*> pairs) {
        std::vector<int> gone;
        for (auto* p : pairs) gone.insert(gone.end(), p->begin(), p->end());
        return count_symmetric_matchings(delete_vertices(g.graph, gone));
    };
    BigInt m0 = M({}), mabcd = M({&s.a, &s.b, &s.c, &s.d});
    BigInt mab = M({&s.a, &s.b}), mcd = M({&s.c, &s.d});
    BigInt mac = M({&s.a, &s.c}), mbd = M({&s.b, &s.d});
    BigInt mad = M({&s.a, &s.d}), mbc = M({&s.b, &s.c});

    VerificationReport r;
    r.family = "kuo";
    r.cells = g.graph.n;
    r.counts = {{"G", str(m0)},     {"G-abcd", str(mabcd)}, {"G-ab", str(mab)}, {"G-cd", str(mcd)},
                {"G-ac", str(mac)}, {"G-bd", str(mbd)},     {"G-ad", str(mad)}, {"G-bc", str(mbc)}};
    r.identities.push_back(identity("condensation", Ratio(m0 * mabcd), Ratio(mab * mcd + mac * mbd + mad * mbc)));
    return r;
}

std::optional<SurgerySpec> preset_surgery(const Built& b, Placement where, std::uint64_t seed) {
    const Region& R = b.region;
    if (!b.has_sides || !R.center) throw SpecError("surgery presets need a symmetric fern-cored region");
    auto [t, ne, se, bo, sw, nw] = b.sides;
    const int qb = -sw, P = t + ne, S = t + nw;
    std::vector<int> bottom, southeast, northeast, hole;
    std::set<Vertex> hv;
    if (where == Placement::CentralFace) {
        for (auto& h : b.holes) hv.insert(h.begin(), h.end());
        if (b.holes.empty()) hv.insert({R.center->cp2 / 2, R.center->cq2 / 2});
    } else {
        if (b.holes.size() < 2) throw SpecError("adjacent-face placement needs two ferns");
        hv.insert(b.holes[0].begin(), b.holes[0].end());
    }
    for (int i = 0; i < int(R.size()); ++i) {
        const Cell& c = R.cells[i];
        if (c.up() && c.q == qb) bottom.push_back(i);
        if (!c.up() && c.p + 1 == P) southeast.push_back(i);
        if (c.up() && c.p + c.q + 1 == S) northeast.push_back(i);
        for (const Vertex& v : cell_vertices(c))
            if (hv.count(v)) {
                hole.push_back(i);
                break;
            }
    }
    if (bottom.empty() || southeast.empty() || northeast.empty() || hole.empty()) return std::nullopt;
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<int>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    auto img = [&](int i) { return int(R.index_of(reflect_cell(R.cells[i], *R.center))); };
    for (int attempt = 0; attempt < 64; ++attempt) {
        SurgerySpec s;
        int a = pick(bottom), bb = pick(southeast), c = pick(northeast), d = pick(hole);
        s.a = {a, img(a)};
        s.b = {bb, img(bb)};
        s.c = {c, img(c)};
        s.d = {d, img(d)};
        std::set<int> all{s.a[0], s.a[1], s.b[0], s.b[1], s.c[0], s.c[1], s.d[0], s.d[1]};
        if (all.size() == 8) return s;
    }
    return std::nullopt;
}

VerificationReport kuo_region_check(const Built& b, Placement where, std::uint64_t seed) {
    auto s = preset_surgery(b, where, seed);
    if (!s) throw SpecError("no admissible surgery for this region");
    VerificationReport r = kuo_identity_check(dual_of(b.region), *s);
    const auto& cs = b.region.cells;
    r.params = std::string(where == Placement::CentralFace ? "central" : "adjacent");
    r.counts["surgery"] = "a1=" + to_string(cs[s->a[0]]) + " b1=" + to_string(cs[s->b[0]]) +
                          " c1=" + to_string(cs[s->c[0]]) + " d1=" + to_string(cs[s->d[0]]);
    return r;
}

// ---------------------------------------------------------------------------

std::vector<int> mirror_full(const std::vector<int>& half) {
    std::vector<int> f = half;
    f.insert(f.end(), half.rbegin(), half.rend());
    return f;
}

namespace {

std::vector<int> bump_first(std::vector<int> h) {
    if (h.empty()) h.push_back(0);
    h[0] += 1;
    return h;
}

template <class Build>
VerificationReport recurrence(const char* fam, int x, int y, int z, const std::vector<int>& A, const std::vector<int>& B,
                              Build build) {
    auto S = [&](int a, int b, int c, const std::vector<int>& f) { return count_symmetric_tilings(build(a, b, c, f)); };
    auto Mp = [&](int a, int b, int c, const std::vector<int>& f) { return count_tilings(build(a, b, c, f)); };
    VerificationReport r;
    r.family = fam;
    r.cells = int(build(x, y, z, A).size());
    BigInt l1 = S(x, y, z, A), l2 = S(x - 2, y - 2, z - 2, B);
    BigInt s1 = S(x, y, z - 2, A), s2 = S(x - 2, y - 2, z, B);
    BigInt m1 = Mp(x, y, z - 2, A), m2 = Mp(x - 2, y - 2, z, B);
    BigInt u1 = S(x - 2, y, z, A), u2 = S(x, y - 2, z - 2, B);
    BigInt v1 = S(x - 2, y, z - 2, B), v2 = S(x, y - 2, z, A);
    r.counts = {{"S(x,y,z;a)", str(l1)},         {"S(x-2,y-2,z-2;a+)", str(l2)}, {"S(x,y,z-2;a)", str(s1)},
                {"S(x-2,y-2,z;a+)", str(s2)},     {"M(x,y,z-2;a)", str(m1)},      {"M(x-2,y-2,z;a+)", str(m2)},
                {"S(x-2,y,z;a)", str(u1)},        {"S(x,y-2,z-2;a+)", str(u2)},   {"S(x-2,y,z-2;a+)", str(v1)},
                {"S(x,y-2,z;a)", str(v2)}};
    Ratio lhs(l1 * l2), rest(u1 * u2 + v1 * v2);
    r.identities.push_back(identity("symmetric first term", lhs, Ratio(s1 * s2) + rest));
    r.identities.push_back(identity("printed (plain M first term)", lhs, Ratio(m1 * m2) + rest, false));
    return r;
}

std::string tuple_str(int x, int y, int z, const std::vector<int>& h) {
    std::string s = "x=" + std::to_string(x) + ",y=" + std::to_string(y) + ",z=" + std::to_string(z) + ",a=";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
    return s;
}

}  // namespace

VerificationReport recurrence_check_fc(int x, int y, int z, const std::vector<int>& half) {
    if (x < 2 || y < 2 || z < 2 || x % 2 || y % 2 || z % 2) throw SpecError("FC recurrence needs even x, y, z >= 2");
    std::vector<int> h = half.empty() ? std::vector<int>{0} : half;
    auto r = recurrence("recurrence-fc", x, y, z, mirror_full(h), mirror_full(bump_first(h)),
                        [](int a, int b, int c, const std::vector<int>& f) { return build_fern_cored(a, b, c, FernSpec{f}); });
    r.params = tuple_str(x, y, z, half);
    return r;
}

VerificationReport recurrence_check_fc_prime(int x, int y, int z, const std::vector<int>& half) {
    if (x < 1 || y < 2 || z < 2) throw SpecError("FC' recurrence needs x >= 1 and y, z >= 2");
    if ((x - y) % 2 || (x - z) % 2) throw SpecError("FC' recurrence needs x, y, z of the same parity");
    std::vector<int> h = half.empty() ? std::vector<int>{0} : half;
    auto r = recurrence("recurrence-fcp", x, y, z, h, bump_first(h), [](int a, int b, int c, const std::vector<int>& f) {
        return build_fern_cored_prime(a, b, c, FernSpec{f});
    });
    r.params = tuple_str(x, y, z, half);
    return r;
}

}  // namespace ferncore
