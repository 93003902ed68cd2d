#include "tangle/insertion.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangle/errors.hpp"

namespace tangle {

namespace detail {

namespace {

// sorted T-labels under a T vertex, clipped to the universe, minus i
std::vector<Label> t_edge_set(const Tanglegram& tg, VertexId u, const IndexSet& edges, Label i) {
    std::vector<Label> out;
    for (Label l : tg.t().labels_below(u))
        if (l != i && edges.contains(l)) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

// sorted T-labels whose partner lies under an S vertex, clipped, minus i
std::vector<Label> s_edge_set(const Tanglegram& tg, VertexId v, const IndexSet& edges, Label i) {
    std::vector<Label> out;
    for (Label l : tg.s().labels_below(v)) {
        Label j = tg.phi_inv(l);
        if (j != i && edges.contains(j)) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Label> set_minus(const std::vector<Label>& a, const std::vector<Label>& b) {
    std::vector<Label> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const std::vector<Label>& a, const std::vector<Label>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

// sorts a chain so the deepest vertex comes first; verifies linear order
void sort_chain(const Tree& tree, std::vector<VertexPair>& chain, bool by_t) {
    std::sort(chain.begin(), chain.end(), [&](const VertexPair& a, const VertexPair& b) {
        VertexId va = by_t ? a.t_vertex : a.s_vertex;
        VertexId vb = by_t ? b.t_vertex : b.s_vertex;
        return tree.is_strict_ancestor(vb, va);
    });
    for (size_t k = 1; k < chain.size(); ++k) {
        VertexId lo = by_t ? chain[k - 1].t_vertex : chain[k - 1].s_vertex;
        VertexId hi = by_t ? chain[k].t_vertex : chain[k].s_vertex;
        if (!tree.is_strict_ancestor(hi, lo))
            throw std::logic_error("insertion chain vertices are not linearly ordered");
    }
}

int count_eset_crossings(const Tanglegram& tg, const PositionIndex& idx, Label i,
                         const std::vector<Label>& eset) {
    int total = 0;
    for (Label j : eset)
        if (idx.crosses(tg, i, j)) ++total;
    return total;
}

bool more_than_half(const Tanglegram& tg, const std::vector<Label>& x,
                    const std::vector<Label>& y, Label i, const std::vector<Label>& eset) {
    if (eset.empty()) return false;
    PositionIndex idx;
    idx.build(tg, x, y);
    return 2 * count_eset_crossings(tg, idx, i, eset) > static_cast<int>(eset.size());
}

// inversion count of the present edges (partial layouts allowed)
long long partial_crossings_fast(const Tanglegram& tg, const std::vector<Label>& x,
                                 const std::vector<Label>& y) {
    PositionIndex idx;
    idx.build(tg, x, y);
    std::vector<int> seq;
    seq.reserve(x.size());
    for (Label l : x) seq.push_back(idx.y_pos_of[tg.phi(l)]);
    // merge-sort inversion count
    std::vector<int> tmp(seq.size());
    struct Rec {
        static long long go(std::vector<int>& s, std::vector<int>& t, int lo, int hi) {
            if (hi - lo <= 1) return 0;
            int mid = (lo + hi) / 2;
            long long inv = go(s, t, lo, mid) + go(s, t, mid, hi);
            int a = lo, b = mid, out = lo;
            while (a < mid && b < hi)
                if (s[a] <= s[b])
                    t[out++] = s[a++];
                else {
                    inv += mid - a;
                    t[out++] = s[b++];
                }
            while (a < mid) t[out++] = s[a++];
            while (b < hi) t[out++] = s[b++];
            std::copy(t.begin() + lo, t.begin() + hi, s.begin() + lo);
            return inv;
        }
    };
    return Rec::go(seq, tmp, 0, static_cast<int>(seq.size()));
}

}  // namespace

// One side of the problem, so the dominated case and its mirror share a
// single implementation: "own" is the side carrying the chain.
struct SideView {
    const Tanglegram& tg;
    bool own_is_s;  // chain measured on S when true

    VertexId chain_vertex(const VertexPair& p) const { return own_is_s ? p.s_vertex : p.t_vertex; }
    VertexId other_vertex(const VertexPair& p) const { return own_is_s ? p.t_vertex : p.s_vertex; }
    std::vector<Label> edge_set(VertexId v, const IndexSet& edges, Label i) const {
        return own_is_s ? s_edge_set(tg, v, edges, i) : t_edge_set(tg, v, edges, i);
    }
    std::vector<Label> other_edge_set(VertexId v, const IndexSet& edges, Label i) const {
        return own_is_s ? t_edge_set(tg, v, edges, i) : s_edge_set(tg, v, edges, i);
    }
};

// chain E sets: each pair weighs the leaves it adds over its predecessor,
// with the parent of the inserted leaf as the base of the chain
std::vector<std::vector<Label>> chain_esets(const SideView& view,
                                            const std::vector<VertexPair>& chain,
                                            std::vector<Label> base, const IndexSet& edges,
                                            Label i) {
    std::vector<std::vector<Label>> out;
    for (const VertexPair& p : chain) {
        std::vector<Label> cur = view.edge_set(view.chain_vertex(p), edges, i);
        out.push_back(set_minus(cur, base));
        base = std::move(cur);
    }
    return out;
}

InsertionContext plan_insertion_step(const Tanglegram& tg, Label i, std::vector<VertexPair> lT,
                                     std::vector<VertexPair> lS, VertexId u0, VertexId v0,
                                     const IndexSet& edges, bool check_disjoint) {
    InsertionContext ctx;
    ctx.i = i;
    ctx.u0 = u0;
    ctx.v0 = v0;
    sort_chain(tg.t(), lT, /*by_t=*/true);
    sort_chain(tg.s(), lS, /*by_t=*/false);
    ctx.lT = std::move(lT);
    ctx.lS = std::move(lS);
    if (!ctx.lT.empty()) ctx.v_tmax_pair = ctx.lT.back();
    if (!ctx.lS.empty()) ctx.u_smax_pair = ctx.lS.back();

    if (ctx.u_smax_pair && tg.t().is_strict_ancestor(u0, ctx.u_smax_pair->t_vertex))
        ctx.dispatch = InsertionCase::SDominant;
    else if (ctx.v_tmax_pair && tg.s().is_strict_ancestor(v0, ctx.v_tmax_pair->s_vertex))
        ctx.dispatch = InsertionCase::TDominant;
    else
        ctx.dispatch = InsertionCase::General;

    if (ctx.dispatch != InsertionCase::General) {
        // the dominated case and its mirror, through one parameterized path
        bool own_is_s = ctx.dispatch == InsertionCase::SDominant;
        SideView view{tg, own_is_s};
        const std::vector<VertexPair>& chain = own_is_s ? ctx.lS : ctx.lT;
        VertexId own0 = own_is_s ? v0 : u0;
        VertexId other0 = own_is_s ? u0 : v0;
        std::vector<Label> e_other0 =
            set_minus(view.other_edge_set(other0, edges, i),
                      view.other_edge_set(view.other_vertex(chain.back()), edges, i));
        std::vector<Label> e_own0 = view.edge_set(own0, edges, i);
        auto chain_sets = chain_esets(view, chain, e_own0, edges, i);
        if (own_is_s) {
            ctx.e_u0 = std::move(e_other0);
            ctx.e_v0 = std::move(e_own0);
            ctx.e_lS = std::move(chain_sets);
        } else {
            ctx.e_v0 = std::move(e_other0);
            ctx.e_u0 = std::move(e_own0);
            ctx.e_lT = std::move(chain_sets);
        }
        return ctx;
    }

    ctx.e_u0 = t_edge_set(tg, u0, edges, i);
    ctx.e_v0 = s_edge_set(tg, v0, edges, i);
    ctx.e_lT = chain_esets(SideView{tg, false}, ctx.lT, ctx.e_u0, edges, i);
    ctx.e_lS = chain_esets(SideView{tg, true}, ctx.lS, ctx.e_v0, edges, i);
    if (check_disjoint) {
        // disjointness of the E sets across sides (can fail only at (u0, v0))
        for (size_t a = 0; a < ctx.e_lT.size(); ++a) {
            for (size_t b = 0; b < ctx.e_lS.size(); ++b)
                if (intersects(ctx.e_lT[a], ctx.e_lS[b]))
                    throw std::logic_error("E sets of the two chains intersect");
            if (intersects(ctx.e_lT[a], ctx.e_v0))
                throw std::logic_error("chain E set intersects the S parent's set");
        }
        for (size_t b = 0; b < ctx.e_lS.size(); ++b)
            if (intersects(ctx.e_u0, ctx.e_lS[b]))
                throw std::logic_error("chain E set intersects the T parent's set");
    }
    return ctx;
}

void apply_insertion_step(const Tanglegram& tg, const InsertionContext& ctx,
                          std::vector<Label>& x, std::vector<Label>& y) {
    Label i = ctx.i;
    auto flip_pair = [&](const VertexPair& p) {
        reverse_block(tg.t(), p.t_vertex, x);
        reverse_block(tg.s(), p.s_vertex, y);
    };

    // shared body for the dominated case and its mirror: switch at the
    // dominating parent first, walk the chain from its top, then decide the
    // other parent's switch
    auto run_dominated = [&](bool own_is_s) {
        const std::vector<VertexPair>& chain = own_is_s ? ctx.lS : ctx.lT;
        const std::vector<std::vector<Label>>& esets = own_is_s ? ctx.e_lS : ctx.e_lT;
        const std::vector<Label>& e_other0 = own_is_s ? ctx.e_u0 : ctx.e_v0;
        const std::vector<Label>& e_own0 = own_is_s ? ctx.e_v0 : ctx.e_u0;
        VertexId other0 = own_is_s ? ctx.u0 : ctx.v0;
        VertexId own0 = own_is_s ? ctx.v0 : ctx.u0;
        const Tree& other_tree = own_is_s ? tg.t() : tg.s();
        const Tree& own_tree = own_is_s ? tg.s() : tg.t();
        std::vector<Label>& other_order = own_is_s ? x : y;
        std::vector<Label>& own_order = own_is_s ? y : x;

        if (more_than_half(tg, x, y, i, e_other0))
            switch_child_blocks(other_tree, other0, other_order);
        for (int j = static_cast<int>(chain.size()) - 1; j >= 0; --j)
            if (more_than_half(tg, x, y, i, esets[j])) flip_pair(chain[j]);
        if (more_than_half(tg, x, y, i, e_own0)) switch_child_blocks(own_tree, own0, own_order);
    };

    switch (ctx.dispatch) {
        case InsertionCase::SDominant: {
            run_dominated(true);
            break;
        }
        case InsertionCase::TDominant: {
            run_dominated(false);
            break;
        }
        case InsertionCase::General: {
            for (int j = static_cast<int>(ctx.lT.size()) - 1; j >= 0; --j)
                if (more_than_half(tg, x, y, i, ctx.e_lT[j])) flip_pair(ctx.lT[j]);
            for (int j = static_cast<int>(ctx.lS.size()) - 1; j >= 0; --j)
                if (more_than_half(tg, x, y, i, ctx.e_lS[j])) flip_pair(ctx.lS[j]);
            if (!intersects(ctx.e_u0, ctx.e_v0)) {
                if (more_than_half(tg, x, y, i, ctx.e_u0)) switch_child_blocks(tg.t(), ctx.u0, x);
                if (more_than_half(tg, x, y, i, ctx.e_v0)) switch_child_blocks(tg.s(), ctx.v0, y);
            } else {
                // interacting switches: try all four combinations, keep the first best
                std::vector<Label> xs = x;
                std::vector<Label> ys = y;
                switch_child_blocks(tg.t(), ctx.u0, xs);
                switch_child_blocks(tg.s(), ctx.v0, ys);
                struct Option {
                    const std::vector<Label>*px, *py;
                } options[4] = {{&x, &y}, {&xs, &y}, {&x, &ys}, {&xs, &ys}};
                int best = 0;
                long long best_cost = -1;
                for (int k = 0; k < 4; ++k) {
                    long long cost = partial_crossings_fast(tg, *options[k].px, *options[k].py);
                    if (best_cost < 0 || cost < best_cost) {
                        best_cost = cost;
                        best = k;
                    }
                }
                std::vector<Label> nx = *options[best].px;
                std::vector<Label> ny = *options[best].py;
                x = std::move(nx);
                y = std::move(ny);
            }
            break;
        }
    }
}

Layout insert_edge_from(const Tanglegram& tg, const InsertionContext& ctx, Layout start) {
    apply_insertion_step(tg, ctx, start.x_order, start.y_order);
    return start;
}

}  // namespace detail

namespace {

// classify the residual pairs into the two one-sided chains
void split_chains(const Tanglegram& tg, Label i, const PairList& lI, std::vector<VertexPair>& lT,
                  std::vector<VertexPair>& lS) {
    VertexId ti = tg.t().leaf_vertex(i);
    VertexId si = tg.s().leaf_vertex(tg.phi(i));
    for (const VertexPair& p : lI) {
        bool above_t = tg.t().is_strict_ancestor(p.t_vertex, ti);
        bool above_s = tg.s().is_strict_ancestor(p.s_vertex, si);
        if (above_t && !above_s) lT.push_back(p);
        if (!above_t && above_s) lS.push_back(p);
    }
}

struct Prepared {
    Layout start;
    InsertionContext ctx;
};

Prepared prepare(const Tanglegram& tg, Label i) {
    if (tg.size() < 2) throw PreconditionError("insertion needs a tanglegram of size >= 2");
    if (!tg.t().has_label(i))
        throw std::invalid_argument("unknown label " + std::to_string(i));
    IndexSet active = tg.all_but(i);
    UntangleResult res = modified_untangle(tg, active);
    Layout restricted = restrict_layout(tg, res.layout, active);
    Tanglegram sub = induced_subtanglegram(tg, active);
    if (count_crossings(sub, restricted).value != 0)
        throw PreconditionError("residual subtanglegram on [n] minus " + std::to_string(i) +
                                " is not planar");
    PairList lI = reduce_pairs(res.pairs, tg, active);
    std::vector<VertexPair> lT, lS;
    split_chains(tg, i, lI, lT, lS);
    VertexId u0 = tg.t().parent(tg.t().leaf_vertex(i));
    VertexId v0 = tg.s().parent(tg.s().leaf_vertex(tg.phi(i)));
    InsertionContext ctx = detail::plan_insertion_step(tg, i, std::move(lT), std::move(lS), u0, v0,
                                                       active, /*check_disjoint=*/true);
    ctx.lI = std::move(lI);
    return Prepared{std::move(res.layout), std::move(ctx)};
}

}  // namespace

InsertionContext build_context(const Tanglegram& tg, Label i) { return prepare(tg, i).ctx; }

Layout insert_edge(const Tanglegram& tg, Label i) {
    Prepared p = prepare(tg, i);
    return detail::insert_edge_from(tg, p.ctx, std::move(p.start));
}

CrossingCount crtei(const Tanglegram& tg, Label i) {
    return count_crossings(tg, insert_edge(tg, i));
}

std::optional<CrossingCount> crtei_min(const Tanglegram& tg) {
    std::optional<CrossingCount> best;
    for (Label i : tg.t_labels()) {
        try {
            CrossingCount c = crtei(tg, i);
            if (!best || c < *best) best = c;
        } catch (const PreconditionError&) {
            continue;  // residual not planar for this i
        }
    }
    return best;
}

}  // namespace tangle
