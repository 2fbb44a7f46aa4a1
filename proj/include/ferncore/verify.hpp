#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ferncore/counting.hpp"
#include "ferncore/formulas.hpp"
#include "ferncore/regions.hpp"

namespace ferncore {

// One equation checked on one instance. `asserted` identities decide pass/fail;
// the others are reported (a failing one makes the instance a counterexample).
struct Identity {
    std::string name;
    std::string lhs, rhs;
    bool holds = false;
    bool asserted = true;
};

enum class Status { Pass, Fail, Counterexample, Skipped };
const char* to_string(Status s);

struct VerificationReport {
    std::string id;
    std::string family;
    std::string params;
    std::vector<Identity> identities;
    std::map<std::string, std::string> counts;  // named exact counts, decimal
    int cells = 0;
    std::optional<double> millis;
    std::string skip_reason;

    Status status() const;
    const Identity* primary() const;
};

std::string str(const BigInt& v);
std::string str(const Ratio& v);
Identity identity(std::string name, const Ratio& lhs, const Ratio& rhs, bool asserted = true);

// ---- Kuo condensation -------------------------------------------------------

struct DualGraph {
    MatchingGraph graph;      // involution required
    std::vector<int> color;   // 0 = Up, 1 = Down
};
DualGraph dual_of(const Region& r);

struct SurgerySpec {
    std::array<int, 2> a{}, b{}, c{}, d{};  // vertex ids; second of each pair is the image of the first
};

enum class Placement { CentralFace, AdjacentFaces };

VerificationReport kuo_identity_check(const DualGraph& g, const SurgerySpec& s);

// Preset surgery on a fern-cored region: a1 on the bottom side, b1 on SE, c1 on NE,
// a2,b2,c2 their central images; d1 touches the hole (all ferns for CentralFace,
// fern 1 only for AdjacentFaces). `seed` picks among the admissible cells.
std::optional<SurgerySpec> preset_surgery(const Built& b, Placement where, std::uint64_t seed);
VerificationReport kuo_region_check(const Built& b, Placement where, std::uint64_t seed);

// ---- recurrences --------------------------------------------------------------

VerificationReport recurrence_check_fc(int x, int y, int z, const std::vector<int>& half);
VerificationReport recurrence_check_fc_prime(int x, int y, int z, const std::vector<int>& half);

// ---- base cases ---------------------------------------------------------------

enum class BaseKind { FC_x0, FC_z0, FCp_xm1, FCp_x0, FCp_z0, FCp_z1 };
const char* to_string(BaseKind k);
BaseKind base_kind_from_string(const std::string& s);

struct TrapezoidMatch {
    int symmetry = 0;
    int m = 0, n = 0;
    std::vector<int> positions;
    Region trapezoid;  // in the transformed frame
};

struct BaseCaseAnalysis {
    Region whole;
    Region sub;                  // live cells on the upper side of the centre
    std::vector<Lozenge> forced; // in every centrally symmetric tiling
    BigInt whole_sym, sub_count;
    std::optional<TrapezoidMatch> match;
    std::string problem;
};

BaseCaseAnalysis analyse_base_case(const Region& whole);
// Finds a trapezoid T_{m,n}(positions), up to a lattice symmetry, that contains `live`,
// whose other cells are tiled rigidly and independently of it.
std::optional<TrapezoidMatch> recognise_trapezoid(const Region& live);
VerificationReport base_case_check(BaseKind kind, int x, int y, int z, const std::vector<int>& half);

// ---- theorem / conjecture instances --------------------------------------------

VerificationReport theorem1_check(int x, int y, int z, const std::vector<int>& half);
VerificationReport theorem2_check(int x, int y, int z, const std::vector<int>& half);
// proved single-fern slice: M(FC(a))/M(FC(o,e)) against the corrected product
VerificationReport conjecture1_single_check(int x, int y, int z, const std::vector<int>& lobes);
VerificationReport conjecture1_multi_check(int x, int y, int z, const std::vector<int>& gaps,
                                           const std::vector<FernSpec>& ferns);
VerificationReport conjecture2_check(int x, int y, int z, const std::vector<int>& gaps,
                                     const std::vector<FernSpec>& ferns);

std::vector<int> mirror_full(const std::vector<int>& half);  // a_1..a_k, a_k..a_1

}  // namespace ferncore
