#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "ferncore/verify.hpp"

namespace ferncore {

namespace {

constexpr const char* kind_names[] = {"fc-x0", "fc-z0", "fcp-xm1", "fcp-x0", "fcp-z0", "fcp-z1"};

struct Bounds {
    int qmin = 1 << 30, qmax = -(1 << 30), pmin = 1 << 30, smax = -(1 << 30);
};

Bounds vertex_bounds(const std::vector<Cell>& cells) {
    Bounds b;
    for (const Cell& c : cells)
        for (const Vertex& v : cell_vertices(c)) {
            b.qmin = std::min(b.qmin, v.q);
            b.qmax = std::max(b.qmax, v.q);
            b.pmin = std::min(b.pmin, v.p);
            b.smax = std::max(b.smax, v.p + v.q);
        }
    return b;
}

// connected components of `cells` under the given lozenges
std::vector<std::vector<Cell>> components(const std::vector<Cell>& cells, const std::vector<Lozenge>& loz) {
    std::map<Cell, int> id;
    for (const Cell& c : cells) id.emplace(c, int(id.size()));
    std::vector<int> parent(cells.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Lozenge& l : loz) {
        auto a = id.find(l.up), b = id.find(l.down);
        if (a != id.end() && b != id.end()) parent[find(a->second)] = find(b->second);
    }
    std::map<int, std::vector<Cell>> groups;
    for (const auto& [c, i] : id) groups[find(i)].push_back(c);
    std::vector<std::vector<Cell>> out;
    for (auto& [k, g] : groups) out.push_back(std::move(g));
    return out;
}

long long weight(const std::vector<Cell>& cs) {
    long long w = 0;
    for (const Cell& c : cs) w += 2 * c.q + (c.up() ? 0 : 1);
    return w;
}

}  // namespace

const char* to_string(BaseKind k) { return kind_names[int(k)]; }

BaseKind base_kind_from_string(const std::string& s) {
    for (int i = 0; i < 6; ++i)
        if (s == kind_names[i]) return BaseKind(i);
    throw SpecError("unknown base-case kind '" + s + "'");
}

std::optional<TrapezoidMatch> recognise_trapezoid(const Region& live) {
    if (live.size() == 0) return TrapezoidMatch{0, 0, 0, {}, Region{}};
    const BigInt target = count_tilings(live);
    for (int g = 0; g < 12; ++g) {
        std::vector<Cell> I;
        for (const Cell& c : live.cells) I.push_back(apply_symmetry(g, c));
        std::sort(I.begin(), I.end());
        Bounds B = vertex_bounds(I);
        for (int q0 = B.qmin - 1; q0 <= B.qmin; ++q0)
            for (int top = B.qmax; top <= B.qmax + 1; ++top)
                for (int p0 = B.pmin - 1; p0 <= B.pmin; ++p0)
                    for (int s1 = B.smax; s1 <= B.smax + 1; ++s1) {
                        const int n = top - q0, L = s1 - p0 - q0, m = L - n;
                        if (n < 0 || m < 0) continue;
                        // full trapezoid; base Ups outside the live part are the removed ones
                        std::vector<Cell> T;
                        std::vector<int> pos;
                        for (int q = q0; q < top; ++q)
                            for (int p = p0; p + q < s1; ++p) {
                                Cell u = Up(p, q);
                                if (q == q0 && !std::binary_search(I.begin(), I.end(), u)) pos.push_back(p - p0 + 1);
                                else T.push_back(u);
                                if (p + q + 1 < s1) T.push_back(Down(p, q));
                            }
                        if (int(pos.size()) != n) continue;
                        std::sort(T.begin(), T.end());
                        if (!std::includes(T.begin(), T.end(), I.begin(), I.end())) continue;
                        Region tr = make_region(T);
                        if (count_tilings(tr) != target) continue;
                        // the rest of the trapezoid must be rigid and never interact with the live part
                        std::vector<Cell> extra;
                        std::set_difference(T.begin(), T.end(), I.begin(), I.end(), std::back_inserter(extra));
                        if (count_tilings(make_region(extra)) != 1) continue;
                        bool crosses = false;
                        for (const auto& u : lozenge_usage(tr, false))
                            if (u.tilings > 0 && std::binary_search(I.begin(), I.end(), u.loz.up) !=
                                                     std::binary_search(I.begin(), I.end(), u.loz.down))
                                crosses = true;
                        if (crosses) continue;
                        return TrapezoidMatch{g, m, n, pos, std::move(tr)};
                    }
    }
    return std::nullopt;
}

BaseCaseAnalysis analyse_base_case(const Region& whole) {
    BaseCaseAnalysis a;
    a.whole = whole;
    a.whole_sym = count_symmetric_tilings(whole);
    if (a.whole_sym == 0) {
        a.problem = "region has no centrally symmetric tiling";
        return a;
    }
    std::vector<Lozenge> live;
    for (const auto& u : lozenge_usage(whole, true)) {
        if (u.tilings == a.whole_sym) a.forced.push_back(u.loz);
        else if (u.tilings > 0) live.push_back(u.loz);
    }
    std::set<Cell> forced_cells;
    for (const Lozenge& l : a.forced) forced_cells.insert({l.up, l.down});
    std::vector<Cell> rest;
    for (const Cell& c : whole.cells)
        if (!forced_cells.count(c)) rest.push_back(c);

    auto comps = components(rest, live);
    std::vector<Cell> upper;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (seen.count(i)) continue;
        std::vector<Cell> img;
        for (const Cell& c : comps[i]) img.push_back(reflect_cell(c, *whole.center));
        std::sort(img.begin(), img.end());
        std::size_t j = i;
        for (std::size_t k = 0; k < comps.size(); ++k)
            if (comps[k] == img) j = k;
        if (j == i) {
            a.problem = "a live component is mapped to itself by the central reflection";
            return a;
        }
        seen.insert(j);
        const auto& up = weight(comps[i]) >= weight(comps[j]) ? comps[i] : comps[j];
        upper.insert(upper.end(), up.begin(), up.end());
    }
    a.sub = make_region(std::move(upper));
    a.sub_count = count_tilings(a.sub);
    a.match = recognise_trapezoid(a.sub);
    if (!a.match) a.problem = "shaded region is not a trapezoid";
    return a;
}

VerificationReport base_case_check(BaseKind kind, int x, int y, int z, const std::vector<int>& half) {
    bool prime = kind != BaseKind::FC_x0 && kind != BaseKind::FC_z0;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw SpecError(std::string("not a base case: ") + what);
    };
    switch (kind) {
        case BaseKind::FC_x0: need(x == 0 && y % 2 == 0 && z % 2 == 0 && y >= 0 && z >= 0, "need x=0, even y,z"); break;
        case BaseKind::FC_z0: need(z == 0 && x % 2 == 0 && y % 2 == 0 && x >= 0 && y >= 0, "need z=0, even x,y"); break;
        case BaseKind::FCp_xm1: need(x == -1, "need x=-1"); break;
        case BaseKind::FCp_x0: need(x == 0, "need x=0"); break;
        case BaseKind::FCp_z0: need(z == 0, "need z=0"); break;
        case BaseKind::FCp_z1: need(z == 1, "need z=1"); break;
    }
    Region whole = prime ? build_fern_cored_prime(x, y, z, FernSpec{half})
                         : build_fern_cored(x, y, z, FernSpec{mirror_full(half)});
    if (!whole.center) throw SpecError("base-case region is not centrally symmetric");
    BaseCaseAnalysis an = analyse_base_case(whole);

    VerificationReport r;
    r.family = "basecase";
    r.params = std::string(to_string(kind)) + " x=" + std::to_string(x) + ",y=" + std::to_string(y) +
               ",z=" + std::to_string(z) + ",a=";
    for (std::size_t i = 0; i < half.size(); ++i) r.params += (i ? "," : "") + std::to_string(half[i]);
    r.cells = int(whole.size());
    r.counts = {{"Msym(W)", str(an.whole_sym)},
                {"M(R)", str(an.sub_count)},
                {"forced lozenges", std::to_string(an.forced.size())},
                {"|R|", std::to_string(an.sub.size())}};
    if (!an.problem.empty()) r.counts["problem"] = an.problem;
    // R is only meaningful when the live cells split into swapped pairs
    bool paired = an.problem.empty() || (an.match == std::nullopt && an.sub_count > 0);
    Identity it = identity("Msym(W) = M(R)", Ratio(an.whole_sym), Ratio(an.sub_count));
    it.holds = it.holds && paired;
    r.identities.push_back(it);
    if (an.match) {
        r.counts["trapezoid"] = "m=" + std::to_string(an.match->m) + ",n=" + std::to_string(an.match->n);
        BigInt mt = count_tilings(an.match->trapezoid);
        r.identities.push_back(identity("M(R) = trapezoid formula", Ratio(mt),
                                        trapezoid_count(an.match->m, an.match->n, an.match->positions)));
        r.identities.push_back(identity("M(trapezoid) = Msym(W)", Ratio(mt), Ratio(an.whole_sym)));
    } else {
        Identity miss{"M(R) = trapezoid formula", str(an.sub_count), "no trapezoid", false, true};
        r.identities.push_back(miss);
    }
    if (kind == BaseKind::FCp_xm1) {
        const SymCenter& c = *whole.center;
        bool central = false;
        for (const Lozenge& l : an.forced)
            if (reflect_cell(l.up, c) == l.down) central = true;
        r.identities.push_back(Identity{"central lozenge forced", central ? "forced" : "not forced", "forced", central, true});
    }
    return r;
}

}  // namespace ferncore
