#include "tangle/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        std::string token = pos < text.size() ? std::string(1, text[pos]) : "<end>";
        throw ParseError(line, token, what);
    }

    Label number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a leaf label");
        long value = std::stol(text.substr(start, pos - start));
        if (value <= 0 || value > 1000000000)
            throw ParseError(line, text.substr(start, pos - start),
                             "leaf labels must be positive integers");
        return static_cast<Label>(value);
    }
};

}  // namespace

Tree Tree::parse(const std::string& text, int line) {
    Parser p{text, 0, line};
    std::function<VertexId(std::vector<Node>&)> sub = [&](std::vector<Node>& nodes) -> VertexId {
        p.skip_ws();
        if (p.pos < p.text.size() && p.text[p.pos] == '(') {
            ++p.pos;
            VertexId l = sub(nodes);
            p.skip_ws();
            if (p.pos >= p.text.size() || p.text[p.pos] != ',') p.fail("expected ','");
            ++p.pos;
            VertexId r = sub(nodes);
            p.skip_ws();
            if (p.pos >= p.text.size() || p.text[p.pos] != ')') p.fail("expected ')'");
            ++p.pos;
            VertexId v = static_cast<VertexId>(nodes.size());
            nodes.push_back(Node{l, r, -1, 0});
            nodes[l].parent = v;
            nodes[r].parent = v;
            return v;
        }
        Label lab = p.number();
        VertexId v = static_cast<VertexId>(nodes.size());
        nodes.push_back(Node{-1, -1, -1, lab});
        return v;
    };

    Tree t;
    t.root_ = sub(t.nodes_);
    p.skip_ws();
    if (p.pos != p.text.size()) p.fail("trailing characters after tree");
    t.finish();
    return t;
}

Tree Tree::leaf(Label label) {
    if (label <= 0) throw std::invalid_argument("leaf labels must be positive");
    Tree t;
    t.nodes_.push_back(Node{-1, -1, -1, label});
    t.root_ = 0;
    t.finish();
    return t;
}

Tree Tree::join(const Tree& left, const Tree& right) {
    Tree t;
    std::function<VertexId(const Tree&, VertexId)> copy = [&](const Tree& src,
                                                              VertexId v) -> VertexId {
        if (src.is_leaf(v)) {
            VertexId n = static_cast<VertexId>(t.nodes_.size());
            t.nodes_.push_back(Node{-1, -1, -1, src.leaf_label(v)});
            return n;
        }
        VertexId l = copy(src, src.left(v));
        VertexId r = copy(src, src.right(v));
        VertexId n = static_cast<VertexId>(t.nodes_.size());
        t.nodes_.push_back(Node{l, r, -1, 0});
        t.nodes_[l].parent = n;
        t.nodes_[r].parent = n;
        return n;
    };
    VertexId l = copy(left, left.root());
    VertexId r = copy(right, right.root());
    t.root_ = static_cast<VertexId>(t.nodes_.size());
    t.nodes_.push_back(Node{l, r, -1, 0});
    t.nodes_[l].parent = t.root_;
    t.nodes_[r].parent = t.root_;
    t.finish();
    return t;
}

void Tree::finish() {
    int n = vertex_count();
    leaf_count_.assign(n, 0);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    label_to_vertex_.clear();
    labels_sorted_.clear();

    int timer = 0;
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        tin_[v] = timer++;
        if (is_leaf(v)) {
            leaf_count_[v] = 1;
            if (!label_to_vertex_.emplace(nodes_[v].label, v).second)
                throw std::invalid_argument("duplicate leaf label " +
                                            std::to_string(nodes_[v].label));
            labels_sorted_.push_back(nodes_[v].label);
        } else {
            dfs(nodes_[v].left);
            dfs(nodes_[v].right);
            leaf_count_[v] = leaf_count_[nodes_[v].left] + leaf_count_[nodes_[v].right];
        }
        tout_[v] = timer;
    };
    dfs(root_);
    if (timer != n) throw std::invalid_argument("tree vertices are not connected to the root");
    std::sort(labels_sorted_.begin(), labels_sorted_.end());
}

VertexId Tree::leaf_vertex(Label label) const {
    auto it = label_to_vertex_.find(label);
    if (it == label_to_vertex_.end())
        throw std::invalid_argument("unknown leaf label " + std::to_string(label));
    return it->second;
}

bool Tree::has_label(Label label) const { return label_to_vertex_.count(label) > 0; }

std::vector<Label> Tree::labels_below(VertexId v) const {
    std::vector<Label> out;
    out.reserve(leaf_count_[v]);
    std::function<void(VertexId)> dfs = [&](VertexId w) {
        if (is_leaf(w)) {
            out.push_back(nodes_[w].label);
        } else {
            dfs(nodes_[w].left);
            dfs(nodes_[w].right);
        }
    };
    dfs(v);
    return out;
}

bool Tree::is_strict_ancestor(VertexId anc, VertexId desc) const {
    return anc != desc && tin_[anc] <= tin_[desc] && tout_[desc] <= tout_[anc];
}

bool Tree::is_ancestor_or_equal(VertexId anc, VertexId desc) const {
    return tin_[anc] <= tin_[desc] && tout_[desc] <= tout_[anc];
}

std::vector<VertexId> Tree::internal_vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count() - leaf_count());
    std::vector<std::pair<VertexId, bool>> order(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) order[v] = {v, is_leaf(v)};
    std::sort(order.begin(), order.end(),
              [&](auto& a, auto& b) { return tin_[a.first] < tin_[b.first]; });
    for (auto& [v, leafp] : order)
        if (!leafp) out.push_back(v);
    return out;
}

std::vector<Label> Tree::leaf_order_flipped(unsigned long long mask) const {
    std::vector<VertexId> internals = internal_vertices();
    std::vector<char> flip(vertex_count(), 0);
    for (size_t i = 0; i < internals.size(); ++i)
        if (mask >> i & 1ULL) flip[internals[i]] = 1;

    std::vector<Label> out;
    out.reserve(leaf_count());
    // a vertex is drawn mirrored iff an odd number of its ancestors-or-self are flipped
    std::function<void(VertexId, bool)> dfs = [&](VertexId v, bool mirrored) {
        if (is_leaf(v)) {
            out.push_back(nodes_[v].label);
            return;
        }
        bool m = mirrored ^ (flip[v] != 0);
        VertexId first = m ? nodes_[v].right : nodes_[v].left;
        VertexId second = m ? nodes_[v].left : nodes_[v].right;
        dfs(first, m);
        dfs(second, m);
    };
    dfs(root_, false);
    return out;
}

std::string Tree::shape_string(unsigned long long mask) const {
    std::vector<VertexId> internals = internal_vertices();
    std::vector<char> flip(vertex_count(), 0);
    for (size_t i = 0; i < internals.size(); ++i)
        if (mask >> i & 1ULL) flip[internals[i]] = 1;

    std::string out;
    std::function<void(VertexId, bool)> dfs = [&](VertexId v, bool mirrored) {
        if (is_leaf(v)) {
            out += 'x';
            return;
        }
        bool m = mirrored ^ (flip[v] != 0);
        out += '(';
        dfs(m ? nodes_[v].right : nodes_[v].left, m);
        out += ',';
        dfs(m ? nodes_[v].left : nodes_[v].right, m);
        out += ')';
    };
    dfs(root_, false);
    return out;
}

std::string Tree::to_string() const {
    std::string out;
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        if (is_leaf(v)) {
            out += std::to_string(nodes_[v].label);
            return;
        }
        out += '(';
        dfs(nodes_[v].left);
        out += ',';
        dfs(nodes_[v].right);
        out += ')';
    };
    dfs(root_);
    return out;
}

Tree Tree::induced(const std::vector<Label>& keep) const {
    if (keep.empty()) throw std::invalid_argument("induced subtree of an empty label set");
    std::vector<char> keep_vertex(vertex_count(), 0);
    for (Label lab : keep) keep_vertex[leaf_vertex(lab)] = 1;

    Tree t;
    // returns the new id of the reduced subtree below v, or -1 if v has no kept leaves
    std::function<VertexId(VertexId)> build = [&](VertexId v) -> VertexId {
        if (is_leaf(v)) {
            if (!keep_vertex[v]) return -1;
            VertexId n = static_cast<VertexId>(t.nodes_.size());
            t.nodes_.push_back(Node{-1, -1, -1, nodes_[v].label});
            return n;
        }
        VertexId l = build(nodes_[v].left);
        VertexId r = build(nodes_[v].right);
        if (l < 0) return r;
        if (r < 0) return l;
        VertexId n = static_cast<VertexId>(t.nodes_.size());
        t.nodes_.push_back(Node{l, r, -1, 0});
        t.nodes_[l].parent = n;
        t.nodes_[r].parent = n;
        return n;
    };
    t.root_ = build(root_);
    t.finish();
    return t;
}

Tree Tree::contract(const std::map<VertexId, Label>& replacements) const {
    Tree t;
    std::function<VertexId(VertexId)> build = [&](VertexId v) -> VertexId {
        auto it = replacements.find(v);
        if (it != replacements.end()) {
            VertexId n = static_cast<VertexId>(t.nodes_.size());
            t.nodes_.push_back(Node{-1, -1, -1, it->second});
            return n;
        }
        if (is_leaf(v)) {
            VertexId n = static_cast<VertexId>(t.nodes_.size());
            t.nodes_.push_back(Node{-1, -1, -1, nodes_[v].label});
            return n;
        }
        VertexId l = build(nodes_[v].left);
        VertexId r = build(nodes_[v].right);
        VertexId n = static_cast<VertexId>(t.nodes_.size());
        t.nodes_.push_back(Node{l, r, -1, 0});
        t.nodes_[l].parent = n;
        t.nodes_[r].parent = n;
        return n;
    };
    t.root_ = build(root_);
    t.finish();
    return t;
}

}  // namespace tangle
