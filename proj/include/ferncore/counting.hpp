#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "ferncore/lattice.hpp"

namespace ferncore {

using BigInt = mpz_class;

struct CountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Lozenge {
    Cell up, down;
    auto operator<=>(const Lozenge&) const = default;
};
using Tiling = std::vector<Lozenge>;  // sorted

// Abstract graph for the matching kernels. `involution`, when non-empty, must be a
// fixed-point-free involution that maps edges to edges.
struct MatchingGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> involution;
};

MatchingGraph dual_graph(const Region& r);  // vertices in r.cells order; involution iff r.center

BigInt count_perfect_matchings(const MatchingGraph& g);
BigInt count_symmetric_matchings(const MatchingGraph& g);

BigInt count_tilings(const Region& r);
BigInt count_symmetric_tilings(const Region& r);
BigInt count_matchings_dual(const Region& r);  // column profile DP, independent of the above

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit);
Tiling reflect_tiling(const Tiling& t, const SymCenter& c);

// How many (symmetric) tilings contain each lozenge of r. Used for forced-lozenge analysis.
struct LozengeUse {
    Lozenge loz;
    BigInt tilings;
};
std::vector<LozengeUse> lozenge_usage(const Region& r, bool symmetric);

std::vector<Lozenge> region_lozenges(const Region& r);
Region remove_cells(const Region& r, const std::vector<Cell>& cells);  // keeps the center

}  // namespace ferncore
