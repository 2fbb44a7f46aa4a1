#pragma once

#include <gmpxx.h>

#include <vector>

#include "ferncore/counting.hpp"
#include "ferncore/regions.hpp"

namespace ferncore {

using Ratio = mpq_class;

struct FormulaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt hyperfactorial(int n);  // 0!1!...(n-1)!, cached
BigInt macmahon(int x, int y, int z);
Ratio s_value(const std::vector<int>& b);
Ratio trapezoid_count(int m, int n, const std::vector<int>& positions);

// Half-lobe evaluators: callers pass a_1..a_k, the mirroring happens inside.
Ratio theorem1_rhs(int x, int y, int z, const std::vector<int>& half);
Ratio theorem2_rhs(int x, int y, int z, const std::vector<int>& half);

// Printed: the displayed product as it stands (normaliser = one single-lobe fern
// per fern). Corrected: ceil factor of the even-index product inverted; the
// identity then holds as rhs(ferns) / rhs(two-lobe normalisers).
enum class Form { Printed, Corrected };

Ratio conjecture1_rhs(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns,
                      Form form = Form::Printed);
Ratio singlefern_rhs(int x, int y, int z, const std::vector<int>& lobes, Form form = Form::Printed);
Ratio twolobe_rhs(int x, int y, int z, const std::vector<int>& lobes);

// gaps = g_1..g_n, ferns = a^(1)..a^(n); the b^(i) and mirrored gaps are added here.
Ratio conjecture2_rhs(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns);
// conjecture2_rhs divided by its value on the normalising system (a_0, b_0).
Ratio conjecture2_rhs_normalized(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns);

// The full mirrored fern system: gap list and fern list for MultiFern.
struct FernSystem {
    std::vector<int> gaps;
    std::vector<FernSpec> ferns;
};
FernSystem symmetric_system(const std::vector<int>& gaps, const std::vector<FernSpec>& ferns);

enum class Origin { AuxCenter, SystemLeft };
struct LobeGeometry {
    std::vector<int> r;
    int k = 0;
};
LobeGeometry lobe_geometry(const std::vector<int>& gaps, const std::vector<FernSpec>& ferns, Origin origin);

std::vector<int> pad_even(std::vector<int> lobes);
std::vector<int> pad_odd(std::vector<int> lobes);

bool is_integer(const Ratio& r);

}  // namespace ferncore
