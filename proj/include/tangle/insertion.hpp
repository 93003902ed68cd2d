#pragma once

#include <optional>
#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"
#include "tangle/untangle.hpp"

namespace tangle {

// Which of the three single-edge-insertion cases applies.
enum class InsertionCase {
    SDominant,  // L(I)_S nonempty and u0 above u_Smax
    TDominant,  // L(I)_T nonempty and v0 above v_Tmax (mirror case)
    General,
};

// Everything the insertion step decides from: the inserted label, the parents
// of its two leaf endpoints, the leaf-matched pairs of the residual
// subtanglegram split into the two chains, the chain maxima, and the E sets
// driving each flip/switch decision (stored as T-labels of between-tree
// edges, aligned with the sorted chains).
struct InsertionContext {
    Label i = 0;
    VertexId u0 = -1;  // parent of t_i in T
    VertexId v0 = -1;  // parent of s_phi(i) in S
    PairList lI;
    std::vector<VertexPair> lT, lS;  // chains, sorted ascending (deepest first)
    std::optional<VertexPair> u_smax_pair, v_tmax_pair;
    InsertionCase dispatch = InsertionCase::General;
    std::vector<std::vector<Label>> e_lT, e_lS;  // aligned with lT / lS
    std::vector<Label> e_u0, e_v0;
};

// Builds the context for inserting edge i into the planar subtanglegram on
// [n] minus i. Throws PreconditionError if that residual is not planar.
InsertionContext build_context(const Tanglegram& tg, Label i);

// Optimal single edge insertion: a layout restricting to a planar layout of
// the residual subtanglegram with the minimum number of crossings.
Layout insert_edge(const Tanglegram& tg, Label i);

// Crossing count of insert_edge's output.
CrossingCount crtei(const Tanglegram& tg, Label i);

// Minimum of crtei over all labels whose residual is planar; empty when no
// label qualifies.
std::optional<CrossingCount> crtei_min(const Tanglegram& tg);

namespace detail {

// The insertion step shared with IteratedInsertion: plans case dispatch and
// E sets from arbitrary chain lists and reduced parents, over the edge
// universe `edges` (T-labels of the residual's between-tree edges), then
// applies the flip/switch decisions to the (possibly partial) orders.
InsertionContext plan_insertion_step(const Tanglegram& tg, Label i,
                                     std::vector<VertexPair> lT, std::vector<VertexPair> lS,
                                     VertexId u0, VertexId v0, const IndexSet& edges,
                                     bool check_disjoint);

void apply_insertion_step(const Tanglegram& tg, const InsertionContext& ctx,
                          std::vector<Label>& x, std::vector<Label>& y);

// Seam for fixture tests: run the planned step from a given start layout.
Layout insert_edge_from(const Tanglegram& tg, const InsertionContext& ctx, Layout start);

}  // namespace detail

}  // namespace tangle
