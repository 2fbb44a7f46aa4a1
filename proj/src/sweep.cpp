#include "ferncore/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "ferncore/regions.hpp"

namespace ferncore {

IntRange parse_range(const std::string& s) {
    auto num = [&](const std::string& t) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size() || t.empty()) throw SpecError("bad range '" + s + "' (expected N or A..B)");
        return v;
    };
    auto dots = s.find("..");
    IntRange r;
    if (dots == std::string::npos) r.lo = r.hi = num(s);
    else {
        r.lo = num(s.substr(0, dots));
        r.hi = num(s.substr(dots + 2));
    }
    if (r.lo > r.hi) throw SpecError("empty range '" + s + "'");
    return r;
}

const std::vector<std::string>& sweep_families() {
    static const std::vector<std::string> f{"macmahon",    "semihex",     "trapezoid", "theorem1",   "theorem2",
                                            "conjecture1", "conjecture2", "kuo",       "recurrence", "basecase"};
    return f;
}

int default_budget() {
    if (const char* e = std::getenv("FERNCORE_BUDGET")) {
        try {
            int v = std::stoi(e);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 400;
}

std::vector<std::vector<int>> lobe_lists(int max_len, int min_sum, int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int len, int left) -> void {
        if (int(cur.size()) == len) {
            int s = max_sum - left;
            if (s >= min_sum) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, len, left - v);
            cur.pop_back();
        }
    };
    for (int len = 1; len <= max_len; ++len) rec(rec, len, max_sum);
    return out;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string xyz(int x, int y, int z) {
    return "x=" + std::to_string(x) + ",y=" + std::to_string(y) + ",z=" + std::to_string(z);
}

std::vector<int> values(const std::optional<IntRange>& r, int lo, int hi) {
    IntRange use = r.value_or(IntRange{lo, hi});
    std::vector<int> v;
    for (int i = use.lo; i <= use.hi; ++i) v.push_back(i);
    return v;
}

bool even(int v) { return v % 2 == 0; }
bool same_parity(int a, int b, int c) { return (a - b) % 2 == 0 && (a - c) % 2 == 0; }

struct Planner {
    const SweepConfig& cfg;
    std::vector<Instance> out;

    // `make` builds the largest region (for the budget); `run` performs the check.
    template <class Make, class Run>
    void add(std::string params, Make make, Run run) {
        Instance in;
        in.family = cfg.family;
        in.params = std::move(params);
        try {
            in.cells = int(make().size());
        } catch (const std::exception& e) {
            in.skip = std::string("infeasible spec: ") + e.what();
        }
        in.run = run;
        out.push_back(std::move(in));
    }

    std::vector<int> X(int lo, int hi) const { return values(cfg.x, lo, hi); }
    std::vector<int> Y(int lo, int hi) const { return values(cfg.y, lo, hi); }
    std::vector<int> Z(int lo, int hi) const { return values(cfg.z, lo, hi); }
    int lobes(int def) const { return cfg.lobes_sum_max >= 0 ? cfg.lobes_sum_max : def; }
    int gaps(int def) const { return cfg.gaps_max >= 0 ? cfg.gaps_max : def; }
    int max(int def) const { return cfg.max >= 0 ? cfg.max : def; }
};

VerificationReport counted(const char* family, std::string params, const Region& r, const Ratio& formula,
                           const char* formula_name) {
    VerificationReport rep;
    rep.family = family;
    rep.params = std::move(params);
    rep.cells = int(r.size());
    BigInt m = count_tilings(r), d = count_matchings_dual(r);
    rep.counts = {{"M", str(m)}, {"M_dual", str(d)}};
    rep.identities.push_back(identity(std::string("M = ") + formula_name, Ratio(m), formula));
    rep.identities.push_back(identity("M = dual profile count", Ratio(m), Ratio(d)));
    return rep;
}

void plan_macmahon(Planner& P) {
    int mx = P.max(4);
    for (int x : P.X(0, mx))
        for (int y : P.Y(0, mx))
            for (int z : P.Z(0, mx)) {
                std::string ps = xyz(x, y, z);
                P.add(ps, [=] { return build_hexagon(x, y, z); },
                      [=] { return counted("macmahon", ps, build_hexagon(x, y, z), Ratio(macmahon(x, y, z)), "macmahon"); });
            }
}

void plan_semihex(Planner& P) {
    for (const auto& b : lobe_lists(5, 0, P.max(8))) {
        std::string ps = "b=" + join(b);
        P.add(ps, [=] { return build_semihexagon(b); },
              [=] { return counted("semihex", ps, build_semihexagon(b), s_value(b), "s"); });
    }
}

void plan_trapezoid(Planner& P) {
    int mx = P.max(7);
    for (int total = 0; total <= mx; ++total)
        for (int n = 0; n <= total; ++n) {
            int m = total - n;
            // all n-subsets of 1..total in lexicographic order
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[i] = i + 1;
            while (true) {
                std::string ps = "m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",pos=" + join(pos);
                P.add(ps, [=] { return build_trapezoid(m, n, pos); },
                      [=] { return counted("trapezoid", ps, build_trapezoid(m, n, pos), trapezoid_count(m, n, pos), "trapezoid formula"); });
                int i = n - 1;
                while (i >= 0 && pos[i] == total - n + i + 1) --i;
                if (i < 0) break;
                ++pos[i];
                for (int j = i + 1; j < n; ++j) pos[j] = pos[j - 1] + 1;
            }
        }
}

void plan_theorem1(Planner& P) {
    auto halves = lobe_lists(3, 1, P.lobes(3));
    for (int x : P.X(0, 4))
        for (int y : P.Y(0, 4))
            for (int z : P.Z(0, 4)) {
                if (!even(x) || !even(y) || !even(z) || x < 0 || y < 0 || z < 0) continue;
                for (const auto& h : halves)
                    P.add(xyz(x, y, z) + ",a=" + join(h), [=] { return build_fern_cored(x, y, z, FernSpec{mirror_full(h)}); },
                          [=] { return theorem1_check(x, y, z, h); });
            }
}

void plan_theorem2(Planner& P) {
    auto halves = lobe_lists(3, 1, P.lobes(3));
    for (int x : P.X(-1, 3))
        for (int y : P.Y(0, 5))
            for (int z : P.Z(0, 5)) {
                if (x < -1 || y < 0 || z < 0 || !same_parity(x, y, z)) continue;
                for (const auto& h : halves)
                    P.add(xyz(x, y, z) + ",a=" + join(h), [=] { return build_fern_cored_prime(x, y, z, FernSpec{h}); },
                          [=] { return theorem2_check(x, y, z, h); });
            }
}

std::vector<std::pair<std::vector<FernSpec>, std::string>> fern_pairs(int max_len, int total) {
    std::vector<std::pair<std::vector<FernSpec>, std::string>> out;
    auto lists = lobe_lists(max_len, 1, total);
    for (const auto& a : lists)
        for (const auto& b : lists) {
            int s = 0;
            for (int v : a) s += v;
            for (int v : b) s += v;
            if (s <= total) out.push_back({{FernSpec{a}, FernSpec{b}}, join(a) + "/" + join(b)});
        }
    return out;
}

void plan_conjecture1(Planner& P) {
    int S = P.lobes(2), G = P.gaps(2);
    auto xs = P.X(0, 3), ys = P.Y(0, 3), zs = P.Z(0, 3);
    // the proved single-fern slice
    for (int x : xs)
        for (int y : ys)
            for (int z : zs) {
                if (x < 0 || y < 0 || z < 0) continue;
                for (const auto& f : lobe_lists(4, 1, S))
                    P.add(xyz(x, y, z) + ",g=,f=" + join(f), [=] { return build_fern_cored(x, y, z, FernSpec{f}); },
                          [=] { return conjecture1_single_check(x, y, z, f); });
            }
    for (int x : xs)
        for (int y : ys)
            for (int z : zs) {
                if (x < 0 || y < 0 || z < 0) continue;
                for (int g = 0; g <= G; ++g)
                    for (const auto& [ferns, label] : fern_pairs(3, S)) {
                        std::vector<int> gaps{g};
                        P.add(xyz(x, y, z) + ",g=" + std::to_string(g) + ",f=" + label,
                              [=] { return build_multi_fern(x, y, z, gaps, ferns); },
                              [=] { return conjecture1_multi_check(x, y, z, gaps, ferns); });
                    }
            }
}

void plan_conjecture2(Planner& P) {
    int S = P.lobes(2), G = P.gaps(2);
    for (int x : P.X(0, 2))
        for (int y : P.Y(0, 2))
            for (int z : P.Z(0, 2)) {
                if (x < 0 || y < 0 || z < 0 || !same_parity(x, y, z)) continue;
                auto add = [&](std::vector<int> gaps, std::vector<FernSpec> ferns, std::string label) {
                    P.add(xyz(x, y, z) + ",g=" + join(gaps) + ",f=" + label,
                          [=] {
                              auto sys = symmetric_system(gaps, ferns);
                              Region r = build_multi_fern(x, y, z, sys.gaps, sys.ferns);
                              if (!r.center) throw SpecError("fern system is not centrally symmetric");
                              return r;
                          },
                          [=] { return conjecture2_check(x, y, z, gaps, ferns); });
                };
                for (int g = 0; g <= G; ++g)
                    for (const auto& f : lobe_lists(3, 1, S)) add({g}, {FernSpec{f}}, join(f));
                for (int g1 = 0; g1 <= G; ++g1)
                    for (int g2 = 0; g2 <= G; ++g2)
                        for (const auto& [ferns, label] : fern_pairs(2, S)) add({g1, g2}, ferns, label);
            }
}

void plan_kuo(Planner& P) {
    auto halves = lobe_lists(2, 1, P.lobes(2));
    for (int x : P.X(0, 2))
        for (int y : P.Y(0, 2))
            for (int z : P.Z(0, 2)) {
                if (x < 0 || y < 0 || z < 0 || !even(x) || !even(y) || !even(z)) continue;
                for (const auto& h : halves)
                    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
                        spec::FernCored sp{x, y, z, FernSpec{mirror_full(h)}};
                        P.add("fc:" + xyz(x, y, z) + ",a=" + join(mirror_full(h)) + " seed=" + std::to_string(seed),
                              [=] { return build(sp).region; },
                              [=] { return kuo_region_check(build(sp), Placement::CentralFace, seed); });
                    }
            }
    for (int x : P.X(-1, 3))
        for (int y : P.Y(0, 3))
            for (int z : P.Z(0, 3)) {
                if (x < -1 || y < 0 || z < 0 || !same_parity(x, y, z)) continue;
                for (const auto& h : halves)
                    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
                        spec::FernCoredPrime sp{x, y, z, FernSpec{h}};
                        P.add("fcp:" + xyz(x, y, z) + ",a=" + join(h) + " seed=" + std::to_string(seed),
                              [=] { return build(sp).region; },
                              [=] { return kuo_region_check(build(sp), Placement::AdjacentFaces, seed); });
                    }
            }
}

void plan_recurrence(Planner& P) {
    auto halves = lobe_lists(2, 0, P.lobes(2));
    for (int x : P.X(2, 4))
        for (int y : P.Y(2, 4))
            for (int z : P.Z(2, 4)) {
                if (x < 2 || y < 2 || z < 2 || !even(x) || !even(y) || !even(z)) continue;
                for (const auto& h : halves)
                    P.add("fc:" + xyz(x, y, z) + ",a=" + join(h),
                          [=] { return build_fern_cored(x, y, z, FernSpec{mirror_full(h)}); },
                          [=] { return recurrence_check_fc(x, y, z, h); });
            }
    for (int x : P.X(1, 4))
        for (int y : P.Y(2, 4))
            for (int z : P.Z(2, 4)) {
                if (x < 1 || y < 2 || z < 2 || !same_parity(x, y, z)) continue;
                for (const auto& h : halves)
                    P.add("fcp:" + xyz(x, y, z) + ",a=" + join(h),
                          [=] { return build_fern_cored_prime(x, y, z, FernSpec{h}); },
                          [=] { return recurrence_check_fc_prime(x, y, z, h); });
            }
}

struct BaseInstance {
    BaseKind kind;
    int x, y, z;
    std::vector<int> half;
};

// hand-picked base-case regions, one or two per kind
const std::vector<BaseInstance>& named_base_cases() {
    static const std::vector<BaseInstance> v{
        {BaseKind::FC_x0, 0, 2, 4, {4, 1}},   {BaseKind::FC_z0, 4, 4, 0, {4, 1}},   {BaseKind::FCp_xm1, -1, 3, 3, {4, 1}},
        {BaseKind::FCp_x0, 0, 4, 2, {4, 1}},  {BaseKind::FCp_z0, 4, 6, 0, {3, 1}},  {BaseKind::FCp_z1, 3, 3, 1, {4, 1}},
    };
    return v;
}

void plan_basecase(Planner& P) {
    std::vector<BaseInstance> all = named_base_cases();
    auto halves = lobe_lists(2, 1, P.lobes(2));
    auto xs = P.X(-1, 4), ys = P.Y(0, 4), zs = P.Z(0, 4);
    auto in = [](const std::vector<int>& v, int a) { return std::find(v.begin(), v.end(), a) != v.end(); };
    for (int a : ys)
        for (int b : zs)
            for (const auto& h : halves) {
                // (a,b) play the two free parameters of each kind
                if (even(a) && even(b) && in(xs, 0)) all.push_back({BaseKind::FC_x0, 0, a, b, h});
                if (even(a) && even(b) && in(zs, 0)) all.push_back({BaseKind::FC_z0, b, a, 0, h});
                if (!even(a) && !even(b) && in(xs, -1)) all.push_back({BaseKind::FCp_xm1, -1, a, b, h});
                if (even(a) && even(b) && in(xs, 0)) all.push_back({BaseKind::FCp_x0, 0, a, b, h});
                if (even(a) && even(b) && in(zs, 0)) all.push_back({BaseKind::FCp_z0, b, a, 0, h});
                if (!even(a) && !even(b) && in(zs, 1)) all.push_back({BaseKind::FCp_z1, b, a, 1, h});
            }
    for (const auto& bi : all) {
        bool prime = bi.kind != BaseKind::FC_x0 && bi.kind != BaseKind::FC_z0;
        P.add(std::string(to_string(bi.kind)) + " " + xyz(bi.x, bi.y, bi.z) + ",a=" + join(bi.half),
              [=] {
                  return prime ? build_fern_cored_prime(bi.x, bi.y, bi.z, FernSpec{bi.half})
                               : build_fern_cored(bi.x, bi.y, bi.z, FernSpec{mirror_full(bi.half)});
              },
              [=] { return base_case_check(bi.kind, bi.x, bi.y, bi.z, bi.half); });
    }
}

}  // namespace

std::vector<Instance> plan_sweep(const SweepConfig& cfg) {
    Planner P{cfg, {}};
    const std::string& f = cfg.family;
    if (f == "macmahon") plan_macmahon(P);
    else if (f == "semihex") plan_semihex(P);
    else if (f == "trapezoid") plan_trapezoid(P);
    else if (f == "theorem1") plan_theorem1(P);
    else if (f == "theorem2") plan_theorem2(P);
    else if (f == "conjecture1") plan_conjecture1(P);
    else if (f == "conjecture2") plan_conjecture2(P);
    else if (f == "kuo") plan_kuo(P);
    else if (f == "recurrence") plan_recurrence(P);
    else if (f == "basecase") plan_basecase(P);
    else throw SpecError("unknown family '" + f + "'");
    const int width = std::max<int>(4, int(std::to_string(P.out.size()).size()));
    for (std::size_t i = 0; i < P.out.size(); ++i) {
        std::string n = std::to_string(i + 1);
        P.out[i].id = f + "-" + std::string(width - n.size(), '0') + n;
    }
    return std::move(P.out);
}

int SweepResult::count(Status s) const {
    return int(std::count_if(reports.begin(), reports.end(), [&](const auto& r) { return r.status() == s; }));
}

SweepResult run_instances(const SweepConfig& cfg, std::vector<Instance> plan) {
    SweepResult res;
    res.config = cfg;
    if (res.config.budget <= 0) res.config.budget = default_budget();
    const int budget = res.config.budget;
    res.reports.resize(plan.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < plan.size();) {
            const Instance& in = plan[i];
            VerificationReport rep;
            auto t0 = std::chrono::steady_clock::now();
            if (!in.skip.empty()) rep.skip_reason = in.skip;
            else if (in.cells > budget)
                rep.skip_reason = "budget: " + std::to_string(in.cells) + " cells > " + std::to_string(budget);
            else {
                try {
                    rep = in.run();
                } catch (const std::exception& e) {
                    rep = VerificationReport{};
                    rep.skip_reason = std::string("error: ") + e.what();
                }
            }
            rep.id = in.id;
            rep.family = in.family;
            rep.params = in.params;
            if (rep.cells == 0) rep.cells = in.cells;
            rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            res.reports[i] = std::move(rep);
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, unsigned(plan.size() ? plan.size() : 1)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(res.reports.begin(), res.reports.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return res;
}

SweepResult run_sweep(const SweepConfig& cfg) { return run_instances(cfg, plan_sweep(cfg)); }

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["family"] = r.family;
    j["params"] = r.params;
    j["status"] = to_string(r.status());
    j["cells"] = r.cells;
    if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    j["counts"] = counts;
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (const auto& i : r.identities)
        ids.push_back({{"name", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"holds", i.holds}, {"asserted", i.asserted}});
    j["identities"] = ids;
    if (timings && r.millis) j["millis"] = std::round(*r.millis * 1000) / 1000;
    return j;
}

nlohmann::ordered_json to_json(const SweepResult& s) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tool"] = "ferncore";
    j["family"] = s.config.family;
    nlohmann::ordered_json cfg;
    auto range = [](const std::optional<IntRange>& r) -> nlohmann::ordered_json {
        if (!r) return nullptr;
        return {r->lo, r->hi};
    };
    cfg["x"] = range(s.config.x);
    cfg["y"] = range(s.config.y);
    cfg["z"] = range(s.config.z);
    cfg["lobes_sum_max"] = s.config.lobes_sum_max;
    cfg["gaps_max"] = s.config.gaps_max;
    cfg["max"] = s.config.max;
    cfg["budget"] = s.config.budget;
    j["config"] = cfg;
    j["summary"] = {{"instances", s.reports.size()},
                    {"pass", s.count(Status::Pass)},
                    {"fail", s.count(Status::Fail)},
                    {"counterexample", s.count(Status::Counterexample)},
                    {"skipped", s.count(Status::Skipped)}};
    nlohmann::ordered_json cex = nlohmann::ordered_json::array();
    for (const auto& r : s.reports)
        for (const auto& i : r.identities)
            if (!i.holds)
                cex.push_back({{"id", r.id},
                               {"params", r.params},
                               {"identity", i.name},
                               {"asserted", i.asserted},
                               {"lhs", i.lhs},
                               {"rhs", i.rhs}});
    j["violations"] = cex;
    nlohmann::ordered_json inst = nlohmann::ordered_json::array();
    for (const auto& r : s.reports) inst.push_back(to_json(r, s.config.timings));
    j["instances"] = inst;
    return j;
}

namespace {
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}
}  // namespace

std::string to_csv(const SweepResult& s) {
    std::ostringstream o;
    o << "instance_id,family,params,lhs,rhs,equal,cells,millis\n";
    for (const auto& r : s.reports) {
        const Identity* p = r.primary();
        std::string equal = r.status() == Status::Skipped ? "skipped" : (p && p->holds ? "true" : "false");
        std::string millis;
        if (s.config.timings && r.millis) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", *r.millis);
            millis = buf;
        }
        o << csv_field(r.id) << ',' << csv_field(r.family) << ',' << csv_field(r.params) << ','
          << csv_field(p ? p->lhs : "") << ',' << csv_field(p ? p->rhs : "") << ',' << equal << ',' << r.cells << ','
          << millis << '\n';
    }
    return o.str();
}

}  // namespace ferncore
