#pragma once

#include <cstdint>
#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

// Reachability table P: P[u,v] is true iff some leaf under u is matched by
// the (possibly restricted) bijection to a leaf under v.
class BoolTable {
public:
    BoolTable(const Tanglegram& tg, const IndexSet& active);
    bool get(VertexId t_vertex, VertexId s_vertex) const {
        return bits_[static_cast<size_t>(t_vertex) * words_ + (s_vertex >> 6)] >>
                   (s_vertex & 63) &
               1ULL;
    }

private:
    size_t words_;
    std::vector<uint64_t> bits_;
};

// A pair of vertices (u in T, v in S) recorded by ModifiedUntangle, or a
// leaf-matched pair in general.
struct VertexPair {
    VertexId t_vertex;
    VertexId s_vertex;
    auto operator<=>(const VertexPair&) const = default;
};

using PairList = std::vector<VertexPair>;

// Ordered vertex lists mid-refinement. Every leaf of each tree lies under
// exactly one listed vertex of its side; the bipartite edges are the pairs
// related by the table.
struct PartialLayout {
    std::vector<VertexId> x;  // T vertices
    std::vector<VertexId> y;  // S vertices
    bool operator==(const PartialLayout&) const = default;
};

std::vector<VertexPair> partial_edges(const BoolTable& table, const PartialLayout& pl);

// One Refine step: replaces internal vertex u by its two children, ordered so
// that the refined bipartite drawing stays crossing-free (a child whose last
// neighbor lies below the other child's first neighbor goes on top; a child
// with no neighbors goes second; ties keep the stored order).
PartialLayout refine(const Tanglegram& tg, const BoolTable& table, const PartialLayout& pl,
                     VertexRef u);

struct UntangleResult {
    Layout layout;
    PairList pairs;
};

// ModifiedUntangle on (T, S, phi|_active): refines the root pair of vertex
// lists, always at a vertex of highest degree in the bipartite graph induced
// by P, recording (u, v) whenever the refined vertex has degree one. For a
// planar tanglegram and the full set, the layout has zero crossings and the
// pairs are exactly the leaf-matched pairs.
UntangleResult modified_untangle(const Tanglegram& tg, const IndexSet& active);
UntangleResult modified_untangle(const Tanglegram& tg);

// Whether the full run produces a zero-crossing layout.
bool is_planar(const Tanglegram& tg);

// Reduction of the recorded pairs to the leaf-matched pairs of the
// subtanglegram induced by `active`: keeps pairs with more than one active
// leaf on each side and descends each endpoint to the deepest vertex with the
// same active leaf set. Deduplicates while preserving first-seen order.
PairList reduce_pairs(const PairList& pairs, const Tanglegram& tg, const IndexSet& active);

}  // namespace tangle
