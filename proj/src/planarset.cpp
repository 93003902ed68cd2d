#include "tangle/planarset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tangle/errors.hpp"
#include "tangle/oracle.hpp"

namespace tangle {

bool FlipGraph::connected() const {
    if (nodes.empty()) return true;
    std::vector<char> seen(nodes.size(), 0);
    std::deque<int> queue = {0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adjacency[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    return reached == nodes.size();
}

std::string FlipGraph::to_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < nodes.size(); ++i) {
        out << "node " << i << ": X =";
        for (Label l : nodes[i].x_order) out << " " << l;
        out << "; Y =";
        for (Label l : nodes[i].y_order) out << " " << l;
        out << "\n";
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
        out << i << ":";
        for (int j : adjacency[i]) out << " " << j;
        out << "\n";
    }
    return out.str();
}

namespace {

FlipGraph closure(const Tanglegram& tg) {
    UntangleResult start = modified_untangle(tg);
    if (count_crossings(tg, start.layout).value != 0)
        throw PreconditionError("tanglegram is not planar");

    FlipGraph g;
    std::map<Layout, int> index;
    std::deque<int> queue;
    g.nodes.push_back(start.layout);
    g.adjacency.emplace_back();
    index[start.layout] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        for (const VertexPair& p : start.pairs) {
            Layout next = apply_paired_flip(tg, g.nodes[at], p.t_vertex, p.s_vertex);
            auto [it, inserted] = index.emplace(next, static_cast<int>(g.nodes.size()));
            if (inserted) {
                g.nodes.push_back(next);
                g.adjacency.emplace_back();
                queue.push_back(it->second);
            }
            if (it->second != at) g.adjacency[at].push_back(it->second);
        }
        auto& adj = g.adjacency[at];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return g;
}

}  // namespace

std::vector<Layout> all_planar_layouts(const Tanglegram& tg) {
    FlipGraph g = closure(tg);
    std::vector<Layout> out = std::move(g.nodes);
    std::sort(out.begin(), out.end());
    return out;
}

FlipGraph flip_graph(const Tanglegram& tg) { return closure(tg); }

bool is_irreducible(const Tanglegram& tg) {
    if (tg.size() < 2) throw std::invalid_argument("irreducibility needs size >= 2");
    PairList pairs = brute_leaf_matched_pairs(tg);
    return pairs.size() == 1 && pairs[0].t_vertex == tg.t().root() &&
           pairs[0].s_vertex == tg.s().root();
}

Tanglegram irreducible_component(const Tanglegram& tg) {
    if (tg.size() < 2) throw std::invalid_argument("irreducible component needs size >= 2");
    PairList pairs = brute_leaf_matched_pairs(tg);

    // maximal non-root pairs; contracting them removes every nested pair too
    std::vector<VertexPair> maximal;
    for (const VertexPair& p : pairs) {
        if (p.t_vertex == tg.t().root()) continue;
        bool dominated = false;
        for (const VertexPair& q : pairs) {
            if (q.t_vertex == tg.t().root() || q == p) continue;
            if (tg.t().is_strict_ancestor(q.t_vertex, p.t_vertex)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(p);
    }
    if (maximal.empty()) return tg;

    Label next = std::max(tg.t_labels().back(), tg.s_labels().back());
    std::map<VertexId, Label> t_repl, s_repl;
    std::map<Label, Label> extra_phi;
    for (const VertexPair& p : maximal) {
        ++next;
        t_repl[p.t_vertex] = next;
        s_repl[p.s_vertex] = next;
        extra_phi[next] = next;
    }
    Tree t = tg.t().contract(t_repl);
    Tree s = tg.s().contract(s_repl);
    std::map<Label, Label> phi = extra_phi;
    for (Label l : t.labels())
        if (!phi.count(l)) phi[l] = tg.phi(l);
    return Tanglegram(std::move(t), std::move(s), phi);
}

}  // namespace tangle
