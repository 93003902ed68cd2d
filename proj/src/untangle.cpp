#include "tangle/untangle.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tangle {

BoolTable::BoolTable(const Tanglegram& tg, const IndexSet& active) {
    const Tree& t = tg.t();
    const Tree& s = tg.s();
    words_ = (s.vertex_count() + 63) / 64;
    bits_.assign(static_cast<size_t>(t.vertex_count()) * words_, 0);

    auto row = [&](VertexId u) { return bits_.begin() + static_cast<size_t>(u) * words_; };

    // leaf rows: each active leaf marks the ancestor path of its partner
    for (Label i : active.members) {
        VertexId u = t.leaf_vertex(i);
        for (VertexId v = s.leaf_vertex(tg.phi(i)); v >= 0; v = s.parent(v))
            row(u)[v >> 6] |= 1ULL << (v & 63);
    }
    // internal rows in postorder: union of the children's rows
    std::vector<VertexId> order(t.vertex_count());
    for (VertexId v = 0; v < t.vertex_count(); ++v) order[v] = v;
    // postorder = process a vertex after both children; use a DFS stack
    std::vector<VertexId> stack = {t.root()}, post;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        post.push_back(v);
        if (!t.is_leaf(v)) {
            stack.push_back(t.left(v));
            stack.push_back(t.right(v));
        }
    }
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
        VertexId u = *it;
        if (t.is_leaf(u)) continue;
        auto dst = row(u);
        auto a = row(t.left(u));
        auto b = row(t.right(u));
        for (size_t w = 0; w < words_; ++w) dst[w] |= a[w] | b[w];
    }
}

namespace {

// whether the first-stored child stays on top, from its edge extent against
// the other child's in the current other-side order
bool first_child_on_top(int deg1, int deg2, int last1, int first2) {
    if (deg1 == 0 && deg2 == 0) return true;
    if (deg1 == 0) return false;
    if (deg2 == 0) return true;
    return last1 <= first2;
}

}  // namespace

std::vector<VertexPair> partial_edges(const BoolTable& table, const PartialLayout& pl) {
    std::vector<VertexPair> out;
    for (VertexId u : pl.x)
        for (VertexId v : pl.y)
            if (table.get(u, v)) out.push_back({u, v});
    return out;
}

PartialLayout refine(const Tanglegram& tg, const BoolTable& table, const PartialLayout& pl,
                     VertexRef u) {
    const Tree& tree = u.side == Side::T ? tg.t() : tg.s();
    if (u.id < 0 || u.id >= tree.vertex_count() || tree.is_leaf(u.id))
        throw std::invalid_argument("refine needs an internal vertex");
    PartialLayout out = pl;
    std::vector<VertexId>& own = u.side == Side::T ? out.x : out.y;
    const std::vector<VertexId>& other = u.side == Side::T ? out.y : out.x;
    auto at = std::find(own.begin(), own.end(), u.id);
    if (at == own.end()) throw std::invalid_argument("vertex is not in the partial layout");

    VertexId u1 = tree.left(u.id), u2 = tree.right(u.id);
    int deg1 = 0, deg2 = 0, last1 = -1, first2 = -1;
    for (int j = 0; j < static_cast<int>(other.size()); ++j) {
        bool e1 = u.side == Side::T ? table.get(u1, other[j]) : table.get(other[j], u1);
        bool e2 = u.side == Side::T ? table.get(u2, other[j]) : table.get(other[j], u2);
        if (e1) {
            ++deg1;
            last1 = j;
        }
        if (e2) {
            ++deg2;
            if (first2 < 0) first2 = j;
        }
    }
    bool top = first_child_on_top(deg1, deg2, last1, first2);
    *at = top ? u1 : u2;
    own.insert(at + 1, top ? u2 : u1);
    return out;
}

namespace {

struct Refiner {
    const Tanglegram& tg;
    const BoolTable& table;
    std::vector<VertexId> x, y;       // partial layouts (vertex lists)
    std::vector<int> deg_t, deg_s;    // degrees in (X, E, Y), indexed by vertex id
    PairList pairs;

    explicit Refiner(const Tanglegram& tg_, const BoolTable& tbl)
        : tg(tg_), table(tbl), deg_t(tg.t().vertex_count(), 0), deg_s(tg.s().vertex_count(), 0) {
        x = {tg.t().root()};
        y = {tg.s().root()};
        if (table.get(tg.t().root(), tg.s().root())) {
            deg_t[tg.t().root()] = 1;
            deg_s[tg.s().root()] = 1;
        }
    }

    // highest-degree internal vertex, earliest in x-then-y order on ties
    std::pair<Side, int> select() const {
        int best_deg = -1;
        Side side = Side::T;
        int pos = -1;
        for (int p = 0; p < static_cast<int>(x.size()); ++p)
            if (!tg.t().is_leaf(x[p]) && deg_t[x[p]] > best_deg) {
                best_deg = deg_t[x[p]];
                side = Side::T;
                pos = p;
            }
        for (int p = 0; p < static_cast<int>(y.size()); ++p)
            if (!tg.s().is_leaf(y[p]) && deg_s[y[p]] > best_deg) {
                best_deg = deg_s[y[p]];
                side = Side::S;
                pos = p;
            }
        return {side, pos};
    }

    bool edge(VertexId t_v, VertexId s_v) const { return table.get(t_v, s_v); }

    // Refine u = list[pos], replacing it by its children in the order given
    // by the last-adjacency test against the other list.
    void refine(Side side, int pos) {
        const Tree& tree = side == Side::T ? tg.t() : tg.s();
        std::vector<VertexId>& own = side == Side::T ? x : y;
        const std::vector<VertexId>& other = side == Side::T ? y : x;
        std::vector<int>& own_deg = side == Side::T ? deg_t : deg_s;
        std::vector<int>& other_deg = side == Side::T ? deg_s : deg_t;
        VertexId u = own[pos];

        if (own_deg[u] == 1) {
            // u and its unique neighbor are adjacent degree-one vertices
            for (VertexId w : other)
                if (side == Side::T ? edge(u, w) : edge(w, u)) {
                    pairs.push_back(side == Side::T ? VertexPair{u, w} : VertexPair{w, u});
                    break;
                }
        }

        VertexId u1 = tree.left(u), u2 = tree.right(u);
        int deg1 = 0, deg2 = 0, last1 = -1, first2 = -1;
        for (int j = 0; j < static_cast<int>(other.size()); ++j) {
            VertexId b = other[j];
            bool e1 = side == Side::T ? edge(u1, b) : edge(b, u1);
            bool e2 = side == Side::T ? edge(u2, b) : edge(b, u2);
            if (e1) {
                ++deg1;
                last1 = j;
            }
            if (e2) {
                ++deg2;
                if (first2 < 0) first2 = j;
            }
            bool eu = side == Side::T ? edge(u, b) : edge(b, u);
            if (eu) other_deg[b] += (e1 ? 1 : 0) + (e2 ? 1 : 0) - 1;
        }
        own_deg[u1] = deg1;
        own_deg[u2] = deg2;

        // keep u1 on top iff that order draws without crossings: its last
        // neighbor may not lie below u2's first (sharing that boundary
        // neighbor is fine, shared endpoints cannot cross). A child with no
        // edges goes second; ties keep the stored order.
        bool first_first = first_child_on_top(deg1, deg2, last1, first2);
        own[pos] = first_first ? u1 : u2;
        own.insert(own.begin() + pos + 1, first_first ? u2 : u1);
    }

    bool has_internal() const {
        for (VertexId v : x)
            if (!tg.t().is_leaf(v)) return true;
        for (VertexId v : y)
            if (!tg.s().is_leaf(v)) return true;
        return false;
    }

    UntangleResult run() {
        while (has_internal()) {
            auto [side, pos] = select();
            refine(side, pos);
        }
        Layout ly;
        ly.x_order.reserve(x.size());
        ly.y_order.reserve(y.size());
        for (VertexId v : x) ly.x_order.push_back(tg.t().leaf_label(v));
        for (VertexId v : y) ly.y_order.push_back(tg.s().leaf_label(v));
        return {std::move(ly), std::move(pairs)};
    }
};

}  // namespace

UntangleResult modified_untangle(const Tanglegram& tg, const IndexSet& active) {
    for (Label l : active.members)
        if (!tg.t().has_label(l))
            throw std::invalid_argument("active set mentions unknown label " + std::to_string(l));
    BoolTable table(tg, active);
    Refiner r(tg, table);
    return r.run();
}

UntangleResult modified_untangle(const Tanglegram& tg) {
    return modified_untangle(tg, tg.full_set());
}

bool is_planar(const Tanglegram& tg) {
    UntangleResult res = modified_untangle(tg);
    return count_crossings(tg, res.layout).value == 0;
}

namespace {

// per-vertex counts of active leaves below, for one tree
std::vector<int> active_leaf_counts(const Tree& tree, const std::vector<Label>& active) {
    std::vector<int> cnt(tree.vertex_count(), 0);
    for (Label l : active) cnt[tree.leaf_vertex(l)] = 1;
    std::vector<VertexId> stack = {tree.root()}, post;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        post.push_back(v);
        if (!tree.is_leaf(v)) {
            stack.push_back(tree.left(v));
            stack.push_back(tree.right(v));
        }
    }
    for (auto it = post.rbegin(); it != post.rend(); ++it)
        if (!tree.is_leaf(*it)) cnt[*it] = cnt[tree.left(*it)] + cnt[tree.right(*it)];
    return cnt;
}

VertexId descend_to_reduced(const Tree& tree, VertexId v, const std::vector<int>& cnt) {
    // deepest descendant with the same active leaf set
    while (!tree.is_leaf(v)) {
        if (cnt[tree.left(v)] == cnt[v])
            v = tree.left(v);
        else if (cnt[tree.right(v)] == cnt[v])
            v = tree.right(v);
        else
            break;
    }
    return v;
}

}  // namespace

PairList reduce_pairs(const PairList& pairs, const Tanglegram& tg, const IndexSet& active) {
    std::vector<int> cnt_t = active_leaf_counts(tg.t(), active.members);
    std::vector<int> cnt_s = active_leaf_counts(tg.s(), tg.phi_of(active.members));
    PairList out;
    std::set<VertexPair> seen;
    for (const VertexPair& p : pairs) {
        int ct = cnt_t[p.t_vertex], cs = cnt_s[p.s_vertex];
        assert(ct == cs);
        if (ct <= 1 || cs <= 1) continue;
        VertexPair reduced{descend_to_reduced(tg.t(), p.t_vertex, cnt_t),
                           descend_to_reduced(tg.s(), p.s_vertex, cnt_s)};
        if (seen.insert(reduced).second) out.push_back(reduced);
    }
    return out;
}

}  // namespace tangle
