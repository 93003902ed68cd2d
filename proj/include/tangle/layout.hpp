#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

// A layout given by its pair of top-to-bottom leaf orders: X lists T-leaf
// labels, Y lists S-leaf labels. Crossing counts depend only on these lists.
struct Layout {
    std::vector<Label> x_order;
    std::vector<Label> y_order;

    auto operator<=>(const Layout&) const = default;
};

struct CrossingCount {
    long long value = 0;
    auto operator<=>(const CrossingCount&) const = default;
};

enum class Side { T, S };

// A vertex of one of the two trees.
struct VertexRef {
    Side side;
    VertexId id;
};

// Number of crossing pairs among the between-tree edges, computed as the
// inversion count of the induced permutation (O(n log n)).
CrossingCount count_crossings(const Tanglegram& tg, const Layout& ly);

// O(n^2) pairwise reference used by tests.
CrossingCount count_crossings_pairwise(const Tanglegram& tg, const Layout& ly);

// Reverses the leaf block of the subtree rooted at v. v must be internal.
Layout apply_flip(const Tanglegram& tg, const Layout& ly, VertexRef v);

// Simultaneous flip at a leaf-matched pair (u in T, v in S).
Layout apply_paired_flip(const Tanglegram& tg, const Layout& ly, VertexId u, VertexId v);

// Exchanges the two child blocks of v, preserving each block's inner order.
Layout apply_subtree_switch(const Tanglegram& tg, const Layout& ly, VertexRef v);

// Sub-lists of the orders restricted to `labels` (T side) and phi(labels).
Layout restrict_layout(const Tanglegram& tg, const Layout& ly, const IndexSet& labels);

// How many of the listed unordered edge pairs (named by T-labels) cross.
CrossingCount crossings_involving(const Tanglegram& tg, const Layout& ly,
                                  const std::vector<std::pair<Label, Label>>& edge_pairs);

// True iff both orders are permutations of the right label sets and every
// subtree's leaves form a contiguous block. The master layout invariant.
bool is_tree_consistent(const Tanglegram& tg, const Layout& ly);

// --- helpers shared with the insertion machinery; orders may be partial ---
namespace detail {

// Reverses the contiguous block of entries of `order` lying under `v`.
// Entries of `order` must be a subset of the tree's labels; the members
// under v must be contiguous (throws std::invalid_argument otherwise).
// A block of size <= 1 is a no-op.
void reverse_block(const Tree& tree, VertexId v, std::vector<Label>& order);

// Exchanges the child blocks of internal vertex v within `order`. Works on
// partial orders: a child with no present leaves contributes an empty block.
void switch_child_blocks(const Tree& tree, VertexId v, std::vector<Label>& order);

// Whether edges (i, phi(i)) and (j, phi(j)) cross in the given orders.
// Positions are taken from prebuilt label->position maps.
struct PositionIndex {
    std::vector<int> x_pos_of;  // indexed by T label
    std::vector<int> y_pos_of;  // indexed by S label
    void build(const Tanglegram& tg, const std::vector<Label>& x, const std::vector<Label>& y);
    bool crosses(const Tanglegram& tg, Label i, Label j) const;
};

}  // namespace detail

}  // namespace tangle
