#pragma once

#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"
#include "tangle/untangle.hpp"

namespace tangle {

struct OracleReport {
    CrossingCount optimum;
    Layout witness;
    long long examined = 0;  // full search-space size for the query
};

// Exact crossing number by sweeping all flip combinations of both trees.
// Refuses instances larger than `max_size` (2^(n-1) x 2^(n-1) layouts).
OracleReport brute_crossing_number(const Tanglegram& tg, int max_size = 10);

// Exact optimum over all layouts whose restriction to `active` has zero
// crossings. Throws PreconditionError if no layout restricts planar.
OracleReport brute_insertion_optimum(const Tanglegram& tg, const IndexSet& active,
                                     int max_size = 8);

// Every zero-crossing layout, by the same sweep. Input must be planar.
std::vector<Layout> brute_planar_layouts(const Tanglegram& tg, int max_size = 10);

// All leaf-matched pairs by direct leaf-set comparison over all internal
// vertex pairs. Polynomial; no size guard.
PairList brute_leaf_matched_pairs(const Tanglegram& tg);

// Leaf-matched pairs of the subtanglegram induced by `active`, expressed as
// (reduced) vertices of the original trees. Definition-driven; used to
// cross-check reduce_pairs and to seed insertion tests.
PairList brute_induced_leaf_matched_pairs(const Tanglegram& tg, const IndexSet& active);

}  // namespace tangle
