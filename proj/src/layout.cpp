#include "tangle/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangle {

namespace {

void check_layout(const Tanglegram& tg, const Layout& ly) {
    std::vector<Label> x = ly.x_order, y = ly.y_order;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != tg.t_labels()) throw std::invalid_argument("x order is not a permutation of T labels");
    if (y != tg.s_labels()) throw std::invalid_argument("y order is not a permutation of S labels");
}

// indices in `order` of the entries lying under v; verifies contiguity
std::pair<int, int> block_range(const Tree& tree, VertexId v, const std::vector<Label>& order) {
    int lo = -1, hi = -1, count = 0;
    for (int p = 0; p < static_cast<int>(order.size()); ++p) {
        Label lab = order[p];
        if (!tree.has_label(lab)) continue;
        if (tree.is_ancestor_or_equal(v, tree.leaf_vertex(lab))) {
            if (lo < 0) lo = p;
            hi = p;
            ++count;
        }
    }
    if (count == 0) return {0, 0};
    if (hi - lo + 1 != count)
        throw std::invalid_argument("subtree leaves do not form a contiguous block");
    return {lo, hi + 1};
}

long long merge_count(std::vector<int>& seq, std::vector<int>& tmp, int lo, int hi) {
    if (hi - lo <= 1) return 0;
    int mid = (lo + hi) / 2;
    long long inv = merge_count(seq, tmp, lo, mid) + merge_count(seq, tmp, mid, hi);
    int a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (seq[a] <= seq[b]) {
            tmp[out++] = seq[a++];
        } else {
            inv += mid - a;
            tmp[out++] = seq[b++];
        }
    }
    while (a < mid) tmp[out++] = seq[a++];
    while (b < hi) tmp[out++] = seq[b++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, seq.begin() + lo);
    return inv;
}

}  // namespace

namespace detail {

void PositionIndex::build(const Tanglegram& tg, const std::vector<Label>& x,
                          const std::vector<Label>& y) {
    Label max_t = tg.t_labels().empty() ? 0 : tg.t_labels().back();
    Label max_s = tg.s_labels().empty() ? 0 : tg.s_labels().back();
    x_pos_of.assign(max_t + 1, -1);
    y_pos_of.assign(max_s + 1, -1);
    for (int p = 0; p < static_cast<int>(x.size()); ++p) x_pos_of[x[p]] = p;
    for (int p = 0; p < static_cast<int>(y.size()); ++p) y_pos_of[y[p]] = p;
}

bool PositionIndex::crosses(const Tanglegram& tg, Label i, Label j) const {
    int xi = x_pos_of[i], xj = x_pos_of[j];
    int yi = y_pos_of[tg.phi(i)], yj = y_pos_of[tg.phi(j)];
    if (xi < 0 || xj < 0 || yi < 0 || yj < 0)
        throw std::invalid_argument("edge label missing from the layout");
    return (xi < xj) != (yi < yj);
}

void reverse_block(const Tree& tree, VertexId v, std::vector<Label>& order) {
    auto [lo, hi] = block_range(tree, v, order);
    std::reverse(order.begin() + lo, order.begin() + hi);
}

void switch_child_blocks(const Tree& tree, VertexId v, std::vector<Label>& order) {
    if (tree.is_leaf(v)) throw std::invalid_argument("subtree switch at a leaf");
    auto [alo, ahi] = block_range(tree, tree.left(v), order);
    auto [blo, bhi] = block_range(tree, tree.right(v), order);
    if (ahi == alo || bhi == blo) return;  // one block absent: nothing to exchange
    if (blo < alo) {
        std::swap(alo, blo);
        std::swap(ahi, bhi);
    }
    if (ahi != blo)
        throw std::invalid_argument("child blocks are not adjacent");
    std::vector<Label> merged;
    merged.reserve(bhi - alo);
    merged.insert(merged.end(), order.begin() + blo, order.begin() + bhi);
    merged.insert(merged.end(), order.begin() + alo, order.begin() + ahi);
    std::copy(merged.begin(), merged.end(), order.begin() + alo);
}

}  // namespace detail

CrossingCount count_crossings(const Tanglegram& tg, const Layout& ly) {
    check_layout(tg, ly);
    int n = tg.size();
    detail::PositionIndex idx;
    idx.build(tg, ly.x_order, ly.y_order);
    std::vector<int> seq(n), tmp(n);
    for (int p = 0; p < n; ++p) seq[p] = idx.y_pos_of[tg.phi(ly.x_order[p])];
    return CrossingCount{merge_count(seq, tmp, 0, n)};
}

CrossingCount count_crossings_pairwise(const Tanglegram& tg, const Layout& ly) {
    check_layout(tg, ly);
    detail::PositionIndex idx;
    idx.build(tg, ly.x_order, ly.y_order);
    long long total = 0;
    int n = tg.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (idx.crosses(tg, ly.x_order[a], ly.x_order[b])) ++total;
    return CrossingCount{total};
}

Layout apply_flip(const Tanglegram& tg, const Layout& ly, VertexRef v) {
    check_layout(tg, ly);
    const Tree& tree = v.side == Side::T ? tg.t() : tg.s();
    if (tree.is_leaf(v.id)) throw std::invalid_argument("flip at a leaf vertex");
    Layout out = ly;
    detail::reverse_block(tree, v.id, v.side == Side::T ? out.x_order : out.y_order);
    return out;
}

// The pair may be leaf-matched in the tanglegram itself or in an induced
// subtanglegram (the reduction maps such pairs to full-tree vertices), so
// only vertex validity and block contiguity are enforced here.
Layout apply_paired_flip(const Tanglegram& tg, const Layout& ly, VertexId u, VertexId v) {
    check_layout(tg, ly);
    if (u < 0 || u >= tg.t().vertex_count() || v < 0 || v >= tg.s().vertex_count() ||
        tg.t().is_leaf(u) || tg.s().is_leaf(v))
        throw std::invalid_argument("paired flip needs two internal vertices");
    Layout out = ly;
    detail::reverse_block(tg.t(), u, out.x_order);
    detail::reverse_block(tg.s(), v, out.y_order);
    return out;
}

Layout apply_subtree_switch(const Tanglegram& tg, const Layout& ly, VertexRef v) {
    check_layout(tg, ly);
    const Tree& tree = v.side == Side::T ? tg.t() : tg.s();
    if (tree.is_leaf(v.id)) throw std::invalid_argument("subtree switch at a leaf vertex");
    Layout out = ly;
    detail::switch_child_blocks(tree, v.id, v.side == Side::T ? out.x_order : out.y_order);
    return out;
}

Layout restrict_layout(const Tanglegram& tg, const Layout& ly, const IndexSet& labels) {
    std::vector<Label> ys = tg.phi_of(labels.members);
    Layout out;
    for (Label l : ly.x_order)
        if (labels.contains(l)) out.x_order.push_back(l);
    for (Label l : ly.y_order)
        if (std::binary_search(ys.begin(), ys.end(), l)) out.y_order.push_back(l);
    return out;
}

CrossingCount crossings_involving(const Tanglegram& tg, const Layout& ly,
                                  const std::vector<std::pair<Label, Label>>& edge_pairs) {
    check_layout(tg, ly);
    detail::PositionIndex idx;
    idx.build(tg, ly.x_order, ly.y_order);
    long long total = 0;
    for (auto [i, j] : edge_pairs) {
        if (!tg.t().has_label(i) || !tg.t().has_label(j))
            throw std::invalid_argument("edge pair names an unknown T label");
        if (i != j && idx.crosses(tg, i, j)) ++total;
    }
    return CrossingCount{total};
}

bool is_tree_consistent(const Tanglegram& tg, const Layout& ly) {
    try {
        check_layout(tg, ly);
        for (VertexId v : tg.t().internal_vertices()) {
            Layout probe = ly;
            detail::reverse_block(tg.t(), v, probe.x_order);  // throws if not contiguous
        }
        for (VertexId v : tg.s().internal_vertices()) {
            Layout probe = ly;
            detail::reverse_block(tg.s(), v, probe.y_order);
        }
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

}  // namespace tangle
