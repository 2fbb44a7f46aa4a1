#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "ferncore/render.hpp"
#include "ferncore/specparse.hpp"
#include "ferncore/sweep.hpp"

using namespace ferncore;

namespace {

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

std::vector<FernSpec> ferns_of(const ParsedSpec& p) {
    std::vector<FernSpec> out;
    for (const auto& g : p.groups("f")) out.push_back({g});
    return out;
}

Ratio evaluate(const ParsedSpec& p) {
    const std::string& f = p.family;
    auto X = [&] { return p.integer("x"); };
    auto Y = [&] { return p.integer("y"); };
    auto Z = [&] { return p.integer("z"); };
    Form form = p.integer_or("printed", 0) ? Form::Printed : Form::Corrected;
    if (f == "h") return Ratio(hyperfactorial(p.integer("n")));
    if (f == "macmahon") return Ratio(macmahon(X(), Y(), Z()));
    if (f == "s") return s_value(p.list("b"));
    if (f == "t") return trapezoid_count(p.integer("m"), p.integer("n"), p.list("pos"));
    if (f == "theorem1") return theorem1_rhs(X(), Y(), Z(), p.list("a"));
    if (f == "theorem2") return theorem2_rhs(X(), Y(), Z(), p.list("a"));
    if (f == "singlefern") return singlefern_rhs(X(), Y(), Z(), p.list("a"), form);
    if (f == "twolobe") return twolobe_rhs(X(), Y(), Z(), p.list("a"));
    if (f == "conjecture1") return conjecture1_rhs(X(), Y(), Z(), p.list("g"), ferns_of(p), form);
    if (f == "conjecture2") {
        if (form == Form::Printed) return conjecture2_rhs(X(), Y(), Z(), p.list("g"), ferns_of(p));
        return conjecture2_rhs_normalized(X(), Y(), Z(), p.list("g"), ferns_of(p));
    }
    throw SpecError("unknown formula '" + f +
                    "' (h, macmahon, s, t, theorem1, theorem2, singlefern, twolobe, conjecture1, conjecture2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ferncore: lozenge tilings of fern-cored hexagons, counted exactly"};
    app.require_subcommand(1);

    std::string spec_text, json_out, svg_out, method = "frontier";
    long tiling_index = -1;
    bool symmetric = false;

    auto* build_cmd = app.add_subcommand("build", "build a region and describe it");
    build_cmd->add_option("spec", spec_text, "region spec, e.g. fc:x=2,y=6,z=4,a=1,2,6,3")->required();
    build_cmd->add_option("--json", json_out, "write the JSON description here ('-' = stdout, the default)");
    build_cmd->add_option("--svg", svg_out, "write an SVG rendering here");
    build_cmd->add_option("--tiling", tiling_index, "draw the N-th tiling (0-based, enumeration order)");

    auto* count_cmd = app.add_subcommand("count", "count lozenge tilings exactly");
    count_cmd->add_option("spec", spec_text, "region spec")->required();
    count_cmd->add_flag("--symmetric", symmetric, "count centrally symmetric tilings");
    count_cmd->add_option("--method", method, "frontier | profile | enumerate")
        ->check(CLI::IsMember({"frontier", "profile", "enumerate"}));

    std::string expr;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a product formula, e.g. theorem1:x=2,y=2,z=2,a=1,1");
    eval_cmd->add_option("formula", expr, "formula spec")->required();

    SweepConfig cfg;
    std::string xs, ys, zs, format = "json", out;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("family", cfg.family, "family")->required()->check(CLI::IsMember(sweep_families()));
    verify_cmd->add_option("--x", xs, "x range, N or A..B");
    verify_cmd->add_option("--y", ys, "y range");
    verify_cmd->add_option("--z", zs, "z range");
    verify_cmd->add_option("--lobes-sum-max", cfg.lobes_sum_max, "maximum total lobe size");
    verify_cmd->add_option("--gaps-max", cfg.gaps_max, "maximum gap");
    verify_cmd->add_option("--max", cfg.max, "size bound for macmahon / semihex / trapezoid");
    verify_cmd->add_option("--budget", cfg.budget, "per-instance cell budget (default $FERNCORE_BUDGET or 400)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", out, "report path ('-' = stdout)");
    verify_cmd->add_flag("--timings", cfg.timings, "include wall times (makes reports non-deterministic)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build_cmd) {
            Built b = build(parse_region_spec(spec_text));
            std::string json = region_json(spec_text, b).dump(2) + "\n";
            if (!svg_out.empty()) {
                std::optional<Tiling> t;
                if (tiling_index >= 0) {
                    auto all = enumerate_tilings(b.region, std::size_t(tiling_index) + 1);
                    if (all.size() <= std::size_t(tiling_index)) throw CountError("region has fewer tilings than requested");
                    t = all[tiling_index];
                }
                write_out(svg_out, region_svg(b.region, t));
            }
            if (!json_out.empty() || svg_out.empty()) write_out(json_out, json);
            return 0;
        }
        if (*count_cmd) {
            Region r = build(parse_region_spec(spec_text)).region;
            if (symmetric) {
                if (!r.center || !is_centrally_symmetric(r)) {
                    std::cerr << "error: region is not centrally symmetric\n";
                    return 2;
                }
                if (method == "enumerate") {
                    std::size_t n = 0;
                    for (const auto& t : enumerate_tilings(r, 1000000))
                        if (reflect_tiling(t, *r.center) == t) ++n;
                    std::cout << n << "\n";
                } else if (method == "profile") {
                    std::cerr << "error: the profile counter has no symmetric mode\n";
                    return 1;
                } else {
                    std::cout << count_symmetric_tilings(r) << "\n";
                }
                return 0;
            }
            if (method == "profile") std::cout << count_matchings_dual(r) << "\n";
            else if (method == "enumerate") std::cout << enumerate_tilings(r, 1000000).size() << "\n";
            else std::cout << count_tilings(r) << "\n";
            return 0;
        }
        if (*eval_cmd) {
            std::cout << evaluate(parse_spec(expr)) << "\n";
            return 0;
        }
        if (*verify_cmd) {
            if (!xs.empty()) cfg.x = parse_range(xs);
            if (!ys.empty()) cfg.y = parse_range(ys);
            if (!zs.empty()) cfg.z = parse_range(zs);
            SweepResult res = run_sweep(cfg);
            write_out(out, format == "csv" ? to_csv(res) : to_json(res).dump(2) + "\n");
            std::cerr << cfg.family << ": " << res.reports.size() << " instances, " << res.count(Status::Pass) << " pass, "
                      << res.count(Status::Fail) << " fail, " << res.count(Status::Counterexample) << " counterexample, "
                      << res.count(Status::Skipped) << " skipped\n";
            int shown = 0, hidden = 0;
            for (const auto& r : res.reports)
                for (const auto& i : r.identities) {
                    if (i.holds || r.status() == Status::Skipped) continue;
                    if (shown++ >= 20) {
                        ++hidden;
                        continue;
                    }
                    std::cerr << "  " << (i.asserted ? "FAIL " : "counterexample ") << r.id << " [" << r.params
                              << "] " << i.name << ": " << i.lhs << " != " << i.rhs << "\n";
                }
            if (hidden) std::cerr << "  ... " << hidden << " more in the report\n";
            return res.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
