#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tangle {

using Label = int;     // user-facing positive leaf label
using VertexId = int;  // dense per-tree vertex id, reassigned on every construction

// Immutable rooted binary tree. Every internal vertex has exactly two
// (ordered) children; leaves carry distinct positive integer labels. The
// stored child order fixes a reference plane embedding: listing leaves
// left-to-right in that embedding gives the tree's leaf order.
class Tree {
public:
    // Parses nested-parentheses notation, e.g. "(((1,2),3),(4,5))".
    // `line` is used for error reporting only.
    static Tree parse(const std::string& text, int line = 1);

    // Builds a single-leaf tree.
    static Tree leaf(Label label);

    // Joins two trees under a fresh root, left subtree first.
    static Tree join(const Tree& left, const Tree& right);

    int vertex_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return (vertex_count() + 1) / 2; }
    VertexId root() const { return root_; }

    bool is_leaf(VertexId v) const { return nodes_[v].left < 0; }
    VertexId left(VertexId v) const { return nodes_[v].left; }
    VertexId right(VertexId v) const { return nodes_[v].right; }
    VertexId parent(VertexId v) const { return nodes_[v].parent; }
    Label leaf_label(VertexId v) const { return nodes_[v].label; }

    // Leaf vertex carrying `label`; throws std::invalid_argument if absent.
    VertexId leaf_vertex(Label label) const;
    bool has_label(Label label) const;

    // All leaf labels, sorted ascending.
    const std::vector<Label>& labels() const { return labels_sorted_; }

    // Number of leaves in the subtree rooted at v.
    int leaves_below(VertexId v) const { return leaf_count_[v]; }

    // Labels of the leaves under v, in the reference embedding's order.
    std::vector<Label> labels_below(VertexId v) const;

    // True iff `anc` is an ancestor of `desc` (strictly above it).
    bool is_strict_ancestor(VertexId anc, VertexId desc) const;
    // True iff `anc` is an ancestor of `desc` or equal to it.
    bool is_ancestor_or_equal(VertexId anc, VertexId desc) const;

    // Internal vertices in preorder.
    std::vector<VertexId> internal_vertices() const;

    // Leaf order of the reference embedding.
    std::vector<Label> leaf_order() const { return labels_below(root_); }

    // Leaf order after flipping exactly the internal vertices whose bit is set
    // in `mask` (bit i = i-th internal vertex in preorder).
    std::vector<Label> leaf_order_flipped(unsigned long long mask) const;

    // Shape string of the reference embedding ("x" for a leaf,
    // "(A,B)" for an internal vertex), optionally under a flip mask.
    std::string shape_string(unsigned long long mask = 0) const;

    // Nested-parentheses text with labels, inverse of parse().
    std::string to_string() const;

    // Minimal subtree spanning `keep` with degree-two suppression; surviving
    // leaves keep their labels. Throws std::invalid_argument if `keep` is
    // empty or mentions an unknown label.
    Tree induced(const std::vector<Label>& keep) const;

    // Copy in which each subtree rooted at a key of `replacements` becomes a
    // single leaf with the mapped label. Keys must be pairwise incomparable.
    Tree contract(const std::map<VertexId, Label>& replacements) const;

private:
    struct Node {
        VertexId left = -1;
        VertexId right = -1;
        VertexId parent = -1;
        Label label = 0;
    };

    Tree() = default;
    void finish();  // validates and builds derived data

    std::vector<Node> nodes_;
    VertexId root_ = -1;
    std::vector<Label> labels_sorted_;
    std::vector<int> leaf_count_;
    std::vector<int> tin_, tout_;  // preorder intervals for ancestor tests
    std::map<Label, VertexId> label_to_vertex_;
};

}  // namespace tangle
