#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tangle/tree.hpp"

namespace tangle {

// Sorted subset of a tanglegram's T-leaf labels, used to induce
// subtanglegrams and to mark the "kept" edges of insertion queries.
struct IndexSet {
    std::vector<Label> members;  // sorted, distinct

    static IndexSet of(std::vector<Label> labels);
    bool contains(Label l) const;
    size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

// Two rooted binary trees of equal leaf count plus a bijection phi from
// T-leaf labels to S-leaf labels. Immutable after construction.
class Tanglegram {
public:
    Tanglegram(Tree t, Tree s, const std::map<Label, Label>& phi);

    // phi given as the list of images of T's labels in ascending label order
    // (the `.tgl` convention).
    static Tanglegram from_phi_row(Tree t, Tree s, const std::vector<Label>& images);

    const Tree& t() const { return t_; }
    const Tree& s() const { return s_; }
    int size() const { return t_.leaf_count(); }

    Label phi(Label t_label) const;
    Label phi_inv(Label s_label) const;

    const std::vector<Label>& t_labels() const { return t_.labels(); }
    const std::vector<Label>& s_labels() const { return s_.labels(); }

    // phi images of a label set, sorted.
    std::vector<Label> phi_of(const std::vector<Label>& t_labels) const;

    // All T-labels (the full index set).
    IndexSet full_set() const { return IndexSet{t_.labels()}; }
    // The full set minus one label.
    IndexSet all_but(Label i) const;

private:
    Tree t_, s_;
    std::map<Label, Label> phi_, phi_inv_;
};

// Byte string identifying a tanglegram's isomorphism class: equal keys
// exactly for tanglegrams related by flips and consistent relabeling.
struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};

// Induced substructures: restriction to a leaf subset with degree-two suppression.
Tree induced_subtree(const Tree& tree, const IndexSet& labels);
Tanglegram induced_subtanglegram(const Tanglegram& tg, const IndexSet& labels);

// Lexicographically minimal encoding over all plane embeddings of both trees.
// Exponential in the tree sizes; meant for desk-scale sizes only.
CanonicalKey canonical_key(const Tanglegram& tg);

namespace detail {

// Plane embeddings of one tree whose shape string is lexicographically
// minimal, precomputable once per shape so enumeration sweeps can share it.
struct MinEmbeddings {
    std::string shape;
    std::vector<std::vector<Label>> orders;
};

MinEmbeddings minimal_embeddings(const Tree& tree);
CanonicalKey canonical_key_from(const Tanglegram& tg, const MinEmbeddings& et,
                                const MinEmbeddings& es);

}  // namespace detail

}  // namespace tangle
