#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "ferncore/specparse.hpp"
#include "ferncore/sweep.hpp"

using namespace ferncore;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(FERNCORE_CLI) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p.get())) > 0) out.append(buf, n);
    int st = pclose(p.release());
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("spec parser") {
    auto p = parse_spec("fc:x=2,y=6,z=4,a=1,2,6,3");
    CHECK(p.family == "fc");
    CHECK(p.integer("x") == 2);
    CHECK(p.list("a") == std::vector<int>{1, 2, 6, 3});
    auto q = parse_spec("mf:x=1,y=1,z=1,g=2,f=1,1/2");
    CHECK(q.groups("f") == std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(parse_spec("fcp:x=-1,y=3,z=3,a=4,1").integer("x") == -1);
}

TEST_CASE("spec parser errors carry a position") {
    try {
        parse_spec("fc:x=2,y=;z=1");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position == 9);
    }
    CHECK_THROWS_AS(parse_spec("fc"), ParseError);
    CHECK_THROWS_AS(parse_spec("fc:x=a"), ParseError);
    CHECK_THROWS_AS(parse_region_spec("fc:x=2,y=2,z=2,q=1"), SpecError);
    CHECK_THROWS_AS(parse_region_spec("hex:x=-1,y=2,z=2"), SpecError);
    CHECK_THROWS_AS(parse_region_spec("zzz:x=1"), SpecError);
}

TEST_CASE("ranges") {
    CHECK(parse_range("3").lo == 3);
    CHECK(parse_range("0..4").hi == 4);
    CHECK(parse_range("-1..3").lo == -1);
    CHECK_THROWS(parse_range("4..0"));
    CHECK_THROWS(parse_range("x"));
}

TEST_CASE("reports are deterministic without timings") {
    SweepConfig c;
    c.family = "macmahon";
    c.max = 2;
    c.jobs = 1;
    std::string a = to_json(run_sweep(c)).dump();
    c.jobs = 4;
    std::string b = to_json(run_sweep(c)).dump();
    CHECK(a == b);
    CHECK(a.find("millis") == std::string::npos);
    std::string csv = to_csv(run_sweep(c));
    CHECK(csv.rfind("instance_id,family,params,lhs,rhs,equal,cells,millis\n", 0) == 0);
}

TEST_CASE("budget skips carry a reason") {
    SweepConfig c;
    c.family = "macmahon";
    c.max = 3;
    c.budget = 10;
    auto r = run_sweep(c);
    CHECK(r.count(Status::Skipped) > 0);
    for (const auto& rep : r.reports)
        if (rep.status() == Status::Skipped) CHECK(rep.skip_reason.rfind("budget: ", 0) == 0);
}

TEST_CASE("command line") {
    CHECK(run("count hex:x=2,y=2,z=2").out == "20\n");
    CHECK(run("count hex:x=2,y=2,z=2 --symmetric").out == "4\n");
    CHECK(run("count hex:x=2,y=2,z=2 --method profile").out == "20\n");
    CHECK(run("count s:b=1,1,1").out == "2\n");
    CHECK(run("count s:b=1,1,1 --symmetric").code == 2);
    CHECK(run("count fc:x=2,y=").code == 1);
    CHECK(run("eval h:n=5").out == "288\n");
    CHECK(run("verify macmahon --max 2 --format csv").code == 0);
    Run b = run("build hex:x=1,y=1,z=1");
    CHECK(b.code == 0);
    CHECK(b.out.find("\"cell_count\": 6") != std::string::npos);
}
