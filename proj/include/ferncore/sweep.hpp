#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ferncore/verify.hpp"

namespace ferncore {

struct IntRange {
    int lo = 0, hi = 0;
    bool contains(int v) const { return lo <= v && v <= hi; }
};
IntRange parse_range(const std::string& s);  // "3" or "0..4"

struct SweepConfig {
    std::string family;
    std::optional<IntRange> x, y, z;  // family defaults when absent
    int lobes_sum_max = -1;           // -1: family default
    int gaps_max = -1;
    int max = -1;
    int budget = 0;                   // 0: FERNCORE_BUDGET or 400
    unsigned jobs = 1;
    bool timings = false;
};

const std::vector<std::string>& sweep_families();
int default_budget();

// One planned instance. `cells` is the size of the largest region involved (for the budget);
// a non-empty `skip` means the spec itself is infeasible.
struct Instance {
    std::string id, family, params;
    int cells = 0;
    std::string skip;
    std::function<VerificationReport()> run;
};

std::vector<Instance> plan_sweep(const SweepConfig& cfg);

struct SweepResult {
    SweepConfig config;
    std::vector<VerificationReport> reports;  // sorted by id

    int count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
};

SweepResult run_sweep(const SweepConfig& cfg);
SweepResult run_instances(const SweepConfig& cfg, std::vector<Instance> plan);

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings);
nlohmann::ordered_json to_json(const SweepResult& s);
std::string to_csv(const SweepResult& s);

// all lists of non-negative integers with 1..max_len entries and sum in [min_sum, max_sum]
std::vector<std::vector<int>> lobe_lists(int max_len, int min_sum, int max_sum);

}  // namespace ferncore
