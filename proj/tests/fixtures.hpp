#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle::fixtures {

// The five-leaf running example: planar, with a six-crossing identity layout.
inline Tanglegram five_leaf_example() {
    return Tanglegram::from_phi_row(Tree::parse("(((1,2),3),(4,5))"),
                                    Tree::parse("(((1,(2,3)),4),5)"), {4, 2, 5, 1, 3});
}

// Size-6 instance with crossing number 2 whose residual is planar only when
// edge 2 is removed; reinserting edge 2 optimally costs 3 crossings.
inline Tanglegram gap_instance() {
    return Tanglegram::from_phi_row(Tree::parse("((((1,2),(3,4)),5),6)"),
                                    Tree::parse("(1,(2,((3,4),(5,6))))"), {1, 5, 2, 3, 4, 6});
}

// Size-8 identity-matched instance with a leaf-matched pair over {1,2,3,4}.
inline Tanglegram matched_pair_example() {
    return Tanglegram::from_phi_row(Tree::parse("(((1,2),(3,4)),(5,(6,(7,8))))"),
                                    Tree::parse("(((((1,2),3),4),(5,6)),(7,8))"),
                                    {1, 2, 3, 4, 5, 6, 7, 8});
}

// Size-4 instance whose restricted run records a pair above the residual's
// root, exercising vertex reduction.
inline Tanglegram reduction_example() {
    return Tanglegram::from_phi_row(Tree::parse("(((1,2),3),4)"), Tree::parse("(((1,2),3),4)"),
                                    {1, 3, 4, 2});
}

// Size-9 instance for the s-dominant insertion case: removing edge 3 leaves a
// planar residual, the start layout is the identity, and the optimum is one
// crossing.
inline Tanglegram s_dominant_example() {
    return Tanglegram::from_phi_row(Tree::parse("((1,2),(3,((4,5),((6,(7,8)),9))))"),
                                    Tree::parse("((((1,2),3),4),(5,(((6,7),8),9)))"),
                                    {1, 2, 6, 3, 4, 5, 7, 8, 9});
}

// Size-9 instance where the parent of the removed T leaf dominates the whole
// S-side chain (removing edge 5).
inline Tanglegram s_dominant_case9() {
    return Tanglegram::from_phi_row(Tree::parse("(((1,2),(3,4)),(5,(6,(7,(8,9)))))"),
                                    Tree::parse("(((((1,2),3),4),(5,6)),((7,8),9))"),
                                    {1, 2, 3, 4, 8, 5, 6, 7, 9});
}

// Size-9 instance where neither chain maximum is dominated (removing edge 3).
inline Tanglegram general_case9() {
    return Tanglegram::from_phi_row(Tree::parse("(((1,2),(3,(4,5))),(6,(7,(8,9))))"),
                                    Tree::parse("(((((1,2),3),4),(5,6)),((7,8),9))"),
                                    {1, 2, 8, 3, 4, 5, 6, 7, 9});
}

// Size-11 worked example for multiple insertion; keep {1,2,4,5,8,9,10,11}.
inline Tanglegram multi_example() {
    return Tanglegram::from_phi_row(
        Tree::parse("(((((1,2),3),(4,5)),(6,7)),(8,(9,(10,11))))"),
        Tree::parse("(((((1,(2,3)),4),5),(6,(7,8))),(9,(10,11)))"),
        {1, 3, 6, 4, 5, 2, 10, 7, 8, 9, 11});
}

inline IndexSet multi_example_keep() { return IndexSet::of({1, 2, 4, 5, 8, 9, 10, 11}); }

// Size-11 companion instance for the inserted-vertex partition; keep
// {1,2,3,4,6,7,10,11}.
inline Tanglegram partition_example() {
    return Tanglegram::from_phi_row(
        Tree::parse("((((1,2),(3,4)),5),(6,(7,((8,9),(10,11)))))"),
        Tree::parse("(((((1,(2,3)),4),5),(6,(7,8))),(9,(10,11)))"),
        {1, 3, 4, 5, 2, 7, 8, 6, 10, 9, 11});
}

inline IndexSet partition_example_keep() { return IndexSet::of({1, 2, 3, 4, 6, 7, 10, 11}); }

// --- construction helpers ---

// vertex whose leaf label set is exactly `labels`; throws if absent
inline VertexId vertex_over(const Tree& tree, std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
        std::vector<Label> below = tree.labels_below(v);
        std::sort(below.begin(), below.end());
        if (below == labels) return v;
    }
    throw std::invalid_argument("no vertex spans the given labels");
}

// rebuilds the tree with the subtree rooted at `flip_at` mirrored
inline Tree mirror_at(const Tree& tree, VertexId flip_at) {
    struct R {
        const Tree& t;
        VertexId at;
        Tree go(VertexId w, bool active) {
            bool act = active || w == at;
            if (t.is_leaf(w)) return Tree::leaf(t.leaf_label(w));
            Tree a = go(t.left(w), act);
            Tree b = go(t.right(w), act);
            return act ? Tree::join(b, a) : Tree::join(a, b);
        }
    };
    return R{tree, flip_at}.go(tree.root(), false);
}

// same tanglegram with every label shifted by `offset` on both sides
inline Tanglegram shift_labels(const Tanglegram& tg, Label offset) {
    struct R {
        Label off;
        Tree go(const Tree& t, VertexId w) {
            if (t.is_leaf(w)) return Tree::leaf(t.leaf_label(w) + off);
            return Tree::join(go(t, t.left(w)), go(t, t.right(w)));
        }
    } r{offset};
    std::map<Label, Label> phi;
    for (Label l : tg.t_labels()) phi[l + offset] = tg.phi(l) + offset;
    return Tanglegram(r.go(tg.t(), tg.t().root()), r.go(tg.s(), tg.s().root()), phi);
}

// replaces the matched leaf pair (t_label, phi(t_label)) by a whole
// tanglegram whose labels are shifted above the host's
inline Tanglegram substitute_leaf_pair(const Tanglegram& host, Label t_label,
                                       const Tanglegram& sub) {
    Label offset = std::max(host.t_labels().back(), host.s_labels().back());
    Tanglegram shifted = fixtures::shift_labels(sub, offset);
    struct R {
        Tree graft(const Tree& t, VertexId w, Label at, const Tree& repl) {
            if (t.is_leaf(w))
                return t.leaf_label(w) == at ? repl : Tree::leaf(t.leaf_label(w));
            return Tree::join(graft(t, t.left(w), at, repl), graft(t, t.right(w), at, repl));
        }
    } r;
    Tree t = r.graft(host.t(), host.t().root(), t_label, shifted.t());
    Tree s = r.graft(host.s(), host.s().root(), host.phi(t_label), shifted.s());
    std::map<Label, Label> phi;
    for (Label l : host.t_labels())
        if (l != t_label) phi[l] = host.phi(l);
    for (Label l : shifted.t_labels()) phi[l] = shifted.phi(l);
    return Tanglegram(std::move(t), std::move(s), phi);
}

// two tanglegrams side by side under fresh roots
inline Tanglegram tangle_union(const Tanglegram& a, const Tanglegram& b) {
    Label offset = std::max(a.t_labels().back(), a.s_labels().back());
    Tanglegram shifted = shift_labels(b, offset);
    std::map<Label, Label> phi;
    for (Label l : a.t_labels()) phi[l] = a.phi(l);
    for (Label l : shifted.t_labels()) phi[l] = shifted.phi(l);
    return Tanglegram(Tree::join(a.t(), shifted.t()), Tree::join(a.s(), shifted.s()), phi);
}

inline Tree random_shape(int n, std::mt19937& rng, Label first_label) {
    if (n == 1) return Tree::leaf(first_label);
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    Tree left = random_shape(k, rng, first_label);
    Tree right = random_shape(n - k, rng, first_label + k);
    return Tree::join(left, right);
}

inline Tanglegram random_tanglegram(int n, std::mt19937& rng) {
    Tree t = random_shape(n, rng, 1);
    Tree s = random_shape(n, rng, 1);
    std::vector<Label> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    return Tanglegram::from_phi_row(std::move(t), std::move(s), images);
}

}  // namespace tangle::fixtures
