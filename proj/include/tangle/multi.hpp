#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"
#include "tangle/untangle.hpp"

namespace tangle {

// Element of the decision poset: a leaf-matched pair of the residual
// subtanglegram, or a single inserted internal vertex of T or S.
struct PosetElement {
    enum class Kind { Pair, VertexT, VertexS };
    Kind kind = Kind::Pair;
    VertexId t_vertex = -1;  // Pair: both set; VertexT: t only; VertexS: s only
    VertexId s_vertex = -1;
    auto operator<=>(const PosetElement&) const = default;

    static PosetElement pair(VertexPair p) {
        return {Kind::Pair, p.t_vertex, p.s_vertex};
    }
    static PosetElement vertex_t(VertexId v) { return {Kind::VertexT, v, -1}; }
    static PosetElement vertex_s(VertexId v) { return {Kind::VertexS, -1, v}; }
};

// The four-way partitions of L(I) and M(I) plus the per-inserted-label
// parents P(.) and anchors A(.) they are defined from.
struct MultiPartition {
    IndexSet active;
    PairList lI;
    std::vector<VertexPair> l0, lT, lS, l1;
    std::vector<VertexId> m0_t, m0_s;  // M(I)_0, split by side
    std::vector<VertexId> mT, mS;      // M(I)_T lives in T, M(I)_S in S
    std::vector<VertexId> m1_t, m1_s;  // M(I)_1, split by side
    std::map<Label, std::pair<VertexId, VertexId>> parents;  // i -> (P(t_i), P(s_phi_i))
    std::map<Label, std::pair<VertexId, VertexId>> anchors;  // i -> (A(t_i), A(s_phi_i))
    std::map<VertexId, Label> owner_t, owner_s;  // classified M vertices -> their label i
    // per inserted edge, the residual pairs strictly above its S endpoint but
    // not its T endpoint, sorted ascending (and the mirror chain); the
    // single-insertion machinery runs along these
    std::map<Label, std::vector<VertexPair>> chain_s, chain_t;
    // for M(I)_0 owners: true when the chain hangs under the T parent (the
    // dominated case), false for the mirror orientation
    std::map<Label, bool> m0_toward_s;
};

// Partial order on L(I)_T + L(I)_S + L(I)_1 + M(I) with a deterministic
// linear extension (ascending; process from the back for ancestors-first).
struct DecisionPoset {
    std::vector<PosetElement> elements;
    std::vector<std::vector<int>> covers;     // covers[e] = elements covered by e
    std::vector<int> extension;               // indices, minimal elements first
    std::vector<std::vector<char>> leq;       // closure: leq[a][b] iff a <= b
};

struct CrossSet {
    PosetElement owner;
    std::vector<std::pair<Label, Label>> pairs;  // (inserted edge i, residual edge j)
};

MultiPartition partition_sets(const Tanglegram& tg, const IndexSet& active);
DecisionPoset build_poset(const Tanglegram& tg, const MultiPartition& mp);
std::map<PosetElement, CrossSet> cross_sets(const Tanglegram& tg, const MultiPartition& mp,
                                            const DecisionPoset& poset);

// Algorithm-7 style insertion of all missing edges one at a time; the output
// restricts to a planar layout of the residual and carries at most
// (n - |I|)(n + |I| - 5)/2 crossings. When `step_counts` is given it receives
// the crossing count of each intermediate layout, starting at zero.
Layout iterated_insertion(const Tanglegram& tg, const IndexSet& active,
                          std::vector<CrossingCount>* step_counts = nullptr);

struct MultiResult {
    Layout layout;
    CrossingCount crossings;
    // Subset C of L(I)_1 + M(I)_1 whose iteration produced the minimum, when
    // some iteration beat the starting layout.
    std::optional<std::vector<PosetElement>> chosen;
};

// Exact multiple edge insertion (exponential only in |L(I)_1 + M(I)_1|).
MultiResult multi_insertion(const Tanglegram& tg, const IndexSet& active);

namespace detail {

// One pass of the MultiInsertion inner loop from a given start layout with a
// fixed forced subset C; exposed for fixture tests.
Layout multi_process_subset(const Tanglegram& tg, const MultiPartition& mp,
                            const DecisionPoset& poset,
                            const std::map<PosetElement, CrossSet>& crosses,
                            const std::vector<char>& in_c, Layout start);

}  // namespace detail

}  // namespace tangle
