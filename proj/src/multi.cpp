#include "tangle/multi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tangle/errors.hpp"
#include "tangle/insertion.hpp"

namespace tangle {

namespace {

// active-leaf counts per vertex for one tree
std::vector<int> leaf_counts_of(const Tree& tree, const std::vector<Label>& labels) {
    std::vector<int> cnt(tree.vertex_count(), 0);
    for (Label l : labels) cnt[tree.leaf_vertex(l)] = 1;
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

std::vector<Label> sorted_labels_under(const Tree& tree, VertexId v) {
    std::vector<Label> out = tree.labels_below(v);
    std::sort(out.begin(), out.end());
    return out;
}

// walks up from a leaf to the closest ancestor with a counted leaf below it
VertexId anchor_above(const Tree& tree, VertexId leaf, const std::vector<int>& cnt) {
    VertexId v = tree.parent(leaf);
    while (v >= 0 && cnt[v] == 0) v = tree.parent(v);
    if (v < 0) throw std::logic_error("no ancestor carries an active leaf");
    return v;
}

}  // namespace

MultiPartition partition_sets(const Tanglegram& tg, const IndexSet& active) {
    if (active.empty()) throw std::invalid_argument("active set must be nonempty");
    MultiPartition mp;
    mp.active = active;
    UntangleResult res = modified_untangle(tg, active);
    mp.lI = reduce_pairs(res.pairs, tg, active);

    std::vector<Label> inserted;
    for (Label l : tg.t_labels())
        if (!active.contains(l)) inserted.push_back(l);
    std::vector<Label> phi_active = tg.phi_of(active.members);
    std::vector<Label> phi_inserted = tg.phi_of(inserted);

    std::vector<int> act_t = leaf_counts_of(tg.t(), active.members);
    std::vector<int> act_s = leaf_counts_of(tg.s(), phi_active);
    std::vector<int> ins_t = leaf_counts_of(tg.t(), inserted);
    std::vector<int> ins_s = leaf_counts_of(tg.s(), phi_inserted);

    // L(I) partition
    for (const VertexPair& p : mp.lI) {
        std::vector<Label> ins_under_u, ins_under_v;
        for (Label l : tg.t().labels_below(p.t_vertex))
            if (!active.contains(l)) ins_under_u.push_back(tg.phi(l));
        for (Label l : tg.s().labels_below(p.s_vertex))
            if (std::binary_search(phi_inserted.begin(), phi_inserted.end(), l))
                ins_under_v.push_back(l);
        std::sort(ins_under_u.begin(), ins_under_u.end());
        std::sort(ins_under_v.begin(), ins_under_v.end());
        if (ins_under_u == ins_under_v)
            mp.l0.push_back(p);
        else if (ins_under_u.size() == 1 && ins_under_v.empty())
            mp.lT.push_back(p);
        else if (ins_under_u.empty() && ins_under_v.size() == 1)
            mp.lS.push_back(p);
        else
            mp.l1.push_back(p);
    }

    // M(I): internal vertices with a child that has no active leaf below it
    std::vector<VertexId> m_t, m_s;
    for (VertexId v : tg.t().internal_vertices())
        if (act_t[tg.t().left(v)] == 0 || act_t[tg.t().right(v)] == 0) m_t.push_back(v);
    for (VertexId v : tg.s().internal_vertices())
        if (act_s[tg.s().left(v)] == 0 || act_s[tg.s().right(v)] == 0) m_s.push_back(v);

    for (Label i : inserted) {
        VertexId ti = tg.t().leaf_vertex(i);
        VertexId si = tg.s().leaf_vertex(tg.phi(i));
        mp.parents[i] = {tg.t().parent(ti), tg.s().parent(si)};
        mp.anchors[i] = {anchor_above(tg.t(), ti, act_t), anchor_above(tg.s(), si, act_s)};
    }

    std::set<VertexId> taken_t, taken_s;

    // per-edge ancestor chains: every residual pair strictly above one
    // endpoint of edge i but not the other, ordered bottom-up
    for (Label i : inserted) {
        VertexId ti = tg.t().leaf_vertex(i);
        VertexId si = tg.s().leaf_vertex(tg.phi(i));
        std::vector<VertexPair> cs, ct;
        for (const VertexPair& q : mp.lI) {
            bool above_t = tg.t().is_strict_ancestor(q.t_vertex, ti);
            bool above_s = tg.s().is_strict_ancestor(q.s_vertex, si);
            if (above_s && !above_t) cs.push_back(q);
            if (above_t && !above_s) ct.push_back(q);
        }
        std::sort(cs.begin(), cs.end(), [&](const VertexPair& a, const VertexPair& b) {
            return tg.s().is_strict_ancestor(b.s_vertex, a.s_vertex);
        });
        std::sort(ct.begin(), ct.end(), [&](const VertexPair& a, const VertexPair& b) {
            return tg.t().is_strict_ancestor(b.t_vertex, a.t_vertex);
        });
        mp.chain_s[i] = std::move(cs);
        mp.chain_t[i] = std::move(ct);
    }

    // M(I)_0: both parents isolate their inserted leaf, one parent dominates
    // the other endpoint's whole chain, and that chain carries no foreign
    // inserted leaf. Those conditions make the switch at the dominating
    // parent compensable exactly as in single insertion; anything weaker
    // leaves the vertex free in M(I)_1 instead.
    auto clean_for = [&](const VertexPair& q, Label i) {
        for (Label l : tg.t().labels_below(q.t_vertex))
            if (!active.contains(l)) return false;
        for (Label l : tg.s().labels_below(q.s_vertex))
            if (std::binary_search(phi_inserted.begin(), phi_inserted.end(), l) &&
                l != tg.phi(i))
                return false;
        return true;
    };
    auto clean_for_mirror = [&](const VertexPair& q, Label i) {
        for (Label l : tg.s().labels_below(q.s_vertex))
            if (std::binary_search(phi_inserted.begin(), phi_inserted.end(), l)) return false;
        for (Label l : tg.t().labels_below(q.t_vertex))
            if (!active.contains(l) && l != i) return false;
        return true;
    };
    for (Label i : inserted) {
        auto [pt, ps] = mp.parents[i];
        if (ins_t[pt] != 1 || ins_s[ps] != 1) continue;
        const std::vector<VertexPair>& cs = mp.chain_s[i];
        const std::vector<VertexPair>& ct = mp.chain_t[i];
        bool orientation_a =
            !cs.empty() && tg.t().is_strict_ancestor(pt, cs.back().t_vertex) &&
            std::all_of(cs.begin(), cs.end(), [&](const VertexPair& q) { return clean_for(q, i); });
        bool orientation_b = !orientation_a && !ct.empty() &&
                             tg.s().is_strict_ancestor(ps, ct.back().s_vertex) &&
                             std::all_of(ct.begin(), ct.end(), [&](const VertexPair& q) {
                                 return clean_for_mirror(q, i);
                             });
        if (!orientation_a && !orientation_b) continue;
        mp.m0_t.push_back(pt);
        mp.m0_s.push_back(ps);
        mp.owner_t[pt] = i;
        mp.owner_s[ps] = i;
        mp.m0_toward_s[i] = orientation_a;
        taken_t.insert(pt);
        taken_s.insert(ps);
    }

    auto unmatched = [&](VertexId ut, VertexId vs) {
        // no active leaf below ut is matched to an active leaf below vs
        std::vector<Label> below_s = sorted_labels_under(tg.s(), vs);
        for (Label l : tg.t().labels_below(ut)) {
            if (!active.contains(l)) continue;
            if (std::binary_search(below_s.begin(), below_s.end(), tg.phi(l))) return false;
        }
        return true;
    };

    // M(I)_S: parents of inserted S leaves not yet classified
    for (Label i : inserted) {
        auto [pt, ps] = mp.parents[i];
        (void)pt;
        if (taken_s.count(ps) || ins_s[ps] != 1) continue;
        VertexId at = mp.anchors[i].first;
        bool ok = unmatched(at, ps);
        if (!ok) {
            for (const VertexPair& q : mp.lI)
                if (tg.t().is_strict_ancestor(at, q.t_vertex) &&
                    tg.s().is_strict_ancestor(q.s_vertex, ps)) {
                    ok = true;
                    break;
                }
        }
        if (ok) {
            mp.mS.push_back(ps);
            mp.owner_s[ps] = i;
            taken_s.insert(ps);
        }
    }

    // M(I)_T, the mirror
    for (Label i : inserted) {
        auto [pt, ps] = mp.parents[i];
        (void)ps;
        if (taken_t.count(pt) || ins_t[pt] != 1) continue;
        VertexId as = mp.anchors[i].second;
        bool ok = unmatched(pt, as);
        if (!ok) {
            for (const VertexPair& q : mp.lI)
                if (tg.t().is_strict_ancestor(q.t_vertex, pt) &&
                    tg.s().is_strict_ancestor(as, q.s_vertex)) {
                    ok = true;
                    break;
                }
        }
        if (ok) {
            mp.mT.push_back(pt);
            mp.owner_t[pt] = i;
            taken_t.insert(pt);
        }
    }

    for (VertexId v : m_t)
        if (!taken_t.count(v)) mp.m1_t.push_back(v);
    for (VertexId v : m_s)
        if (!taken_s.count(v)) mp.m1_s.push_back(v);
    return mp;
}

DecisionPoset build_poset(const Tanglegram& tg, const MultiPartition& mp) {
    DecisionPoset poset;
    for (const VertexPair& p : mp.lT) poset.elements.push_back(PosetElement::pair(p));
    for (const VertexPair& p : mp.lS) poset.elements.push_back(PosetElement::pair(p));
    for (const VertexPair& p : mp.l1) poset.elements.push_back(PosetElement::pair(p));
    for (VertexId v : mp.m0_t) poset.elements.push_back(PosetElement::vertex_t(v));
    for (VertexId v : mp.mT) poset.elements.push_back(PosetElement::vertex_t(v));
    for (VertexId v : mp.m1_t) poset.elements.push_back(PosetElement::vertex_t(v));
    for (VertexId v : mp.m0_s) poset.elements.push_back(PosetElement::vertex_s(v));
    for (VertexId v : mp.mS) poset.elements.push_back(PosetElement::vertex_s(v));
    for (VertexId v : mp.m1_s) poset.elements.push_back(PosetElement::vertex_s(v));
    std::sort(poset.elements.begin(), poset.elements.end());
    poset.elements.erase(std::unique(poset.elements.begin(), poset.elements.end()),
                         poset.elements.end());

    int n = static_cast<int>(poset.elements.size());
    poset.leq.assign(n, std::vector<char>(n, 0));
    auto le_t = [&](VertexId a, VertexId b) { return tg.t().is_ancestor_or_equal(b, a); };
    auto le_s = [&](VertexId a, VertexId b) { return tg.s().is_ancestor_or_equal(b, a); };
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const PosetElement& ea = poset.elements[a];
            const PosetElement& eb = poset.elements[b];
            bool rel = false;
            if (a == b) {
                rel = true;
            } else if (ea.kind == PosetElement::Kind::Pair && eb.kind == PosetElement::Kind::Pair) {
                rel = le_t(ea.t_vertex, eb.t_vertex) && le_s(ea.s_vertex, eb.s_vertex);
            } else if (ea.kind == PosetElement::Kind::Pair &&
                       eb.kind == PosetElement::Kind::VertexT) {
                rel = le_t(ea.t_vertex, eb.t_vertex);
            } else if (ea.kind == PosetElement::Kind::VertexT &&
                       eb.kind == PosetElement::Kind::Pair) {
                rel = le_t(ea.t_vertex, eb.t_vertex);
            } else if (ea.kind == PosetElement::Kind::Pair &&
                       eb.kind == PosetElement::Kind::VertexS) {
                rel = le_s(ea.s_vertex, eb.s_vertex);
            } else if (ea.kind == PosetElement::Kind::VertexS &&
                       eb.kind == PosetElement::Kind::Pair) {
                rel = le_s(ea.s_vertex, eb.s_vertex);
            } else if (ea.kind == PosetElement::Kind::VertexT &&
                       eb.kind == PosetElement::Kind::VertexT) {
                rel = le_t(ea.t_vertex, eb.t_vertex);
            } else if (ea.kind == PosetElement::Kind::VertexS &&
                       eb.kind == PosetElement::Kind::VertexS) {
                rel = le_s(ea.s_vertex, eb.s_vertex);
            }
            if (rel) poset.leq[a][b] = 1;
        }
    }
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (poset.leq[a][k])
                for (int b = 0; b < n; ++b)
                    if (poset.leq[k][b]) poset.leq[a][b] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && poset.leq[a][b] && poset.leq[b][a])
                throw std::logic_error("decision relation is not antisymmetric");

    // covers
    poset.covers.assign(n, {});
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            if (a == b || !poset.leq[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (c != a && c != b && poset.leq[a][c] && poset.leq[c][b]) direct = false;
            if (direct) poset.covers[b].push_back(a);
        }

    // Kahn linear extension; ties resolved by the elements' natural order
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && poset.leq[a][b]) ++indeg[b];
    std::vector<char> done(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int e = 0; e < n; ++e)
            if (!done[e] && indeg[e] == 0) {
                pick = e;
                break;  // elements are sorted, so the first ready one is minimal
            }
        if (pick < 0) throw std::logic_error("decision relation has a cycle");
        done[pick] = 1;
        poset.extension.push_back(pick);
        for (int b = 0; b < n; ++b)
            if (!done[b] && pick != b && poset.leq[pick][b]) --indeg[b];
    }
    return poset;
}

namespace {

std::vector<Label> active_labels_under_t(const Tanglegram& tg, VertexId u,
                                         const IndexSet& active) {
    std::vector<Label> out;
    for (Label l : tg.t().labels_below(u))
        if (active.contains(l)) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Label> active_labels_under_s(const Tanglegram& tg, VertexId v,
                                         const IndexSet& active) {
    std::vector<Label> out;
    for (Label l : tg.s().labels_below(v)) {
        Label j = tg.phi_inv(l);
        if (active.contains(j)) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Label unique_inserted_under_t(const Tanglegram& tg, VertexId u, const IndexSet& active) {
    Label found = -1;
    for (Label l : tg.t().labels_below(u))
        if (!active.contains(l)) {
            if (found >= 0) throw std::logic_error("expected exactly one inserted leaf");
            found = l;
        }
    if (found < 0) throw std::logic_error("expected an inserted leaf");
    return found;
}

Label unique_inserted_under_s(const Tanglegram& tg, VertexId v, const IndexSet& active) {
    Label found = -1;
    for (Label l : tg.s().labels_below(v)) {
        Label j = tg.phi_inv(l);
        if (!active.contains(j)) {
            if (found >= 0) throw std::logic_error("expected exactly one inserted leaf");
            found = j;
        }
    }
    if (found < 0) throw std::logic_error("expected an inserted leaf");
    return found;
}

std::vector<Label> minus_sorted(std::vector<Label> a, const std::vector<Label>& b) {
    std::vector<Label> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::map<PosetElement, CrossSet> cross_sets(const Tanglegram& tg, const MultiPartition& mp,
                                            const DecisionPoset& poset) {
    (void)poset;  // the subtractions run along the per-edge chains
    std::map<PosetElement, CrossSet> out;
    const IndexSet& active = mp.active;

    auto emit = [&](const PosetElement& owner, Label i, std::vector<Label> js) {
        CrossSet cs;
        cs.owner = owner;
        for (Label j : js) cs.pairs.push_back({i, j});
        out[owner] = std::move(cs);
    };

    // subtraction below a chain member: the next member down, or the parent
    // of the inserted leaf at the bottom
    auto chain_prev_s = [&](Label i, const VertexPair& p) {
        const std::vector<VertexPair>& chain = mp.chain_s.at(i);
        auto at = std::find(chain.begin(), chain.end(), p);
        if (at == chain.end()) throw std::logic_error("pair is not on its owner's chain");
        VertexId below = at == chain.begin() ? mp.parents.at(i).second : (at - 1)->s_vertex;
        return active_labels_under_s(tg, below, active);
    };
    auto chain_prev_t = [&](Label i, const VertexPair& p) {
        const std::vector<VertexPair>& chain = mp.chain_t.at(i);
        auto at = std::find(chain.begin(), chain.end(), p);
        if (at == chain.end()) throw std::logic_error("pair is not on its owner's chain");
        VertexId below = at == chain.begin() ? mp.parents.at(i).first : (at - 1)->t_vertex;
        return active_labels_under_t(tg, below, active);
    };

    for (const VertexPair& p : mp.lT) {
        PosetElement owner = PosetElement::pair(p);
        Label i = unique_inserted_under_t(tg, p.t_vertex, active);
        std::vector<Label> base = active_labels_under_t(tg, p.t_vertex, active);
        emit(owner, i, minus_sorted(base, chain_prev_t(i, p)));
    }
    for (const VertexPair& p : mp.lS) {
        PosetElement owner = PosetElement::pair(p);
        Label i = unique_inserted_under_s(tg, p.s_vertex, active);
        std::vector<Label> base = active_labels_under_s(tg, p.s_vertex, active);
        emit(owner, i, minus_sorted(base, chain_prev_s(i, p)));
    }
    for (VertexId w : mp.m0_t) {
        PosetElement owner = PosetElement::vertex_t(w);
        Label i = mp.owner_t.at(w);
        std::vector<Label> base = active_labels_under_t(tg, w, active);
        if (mp.m0_toward_s.at(i))
            emit(owner, i,
                 minus_sorted(base, active_labels_under_t(tg, mp.chain_s.at(i).back().t_vertex,
                                                          active)));
        else
            emit(owner, i, base);
    }
    for (VertexId w : mp.m0_s) {
        PosetElement owner = PosetElement::vertex_s(w);
        Label i = mp.owner_s.at(w);
        std::vector<Label> base = active_labels_under_s(tg, w, active);
        if (mp.m0_toward_s.at(i))
            emit(owner, i, base);
        else
            emit(owner, i,
                 minus_sorted(base, active_labels_under_s(tg, mp.chain_t.at(i).back().s_vertex,
                                                          active)));
    }
    for (VertexId w : mp.mT) {
        PosetElement owner = PosetElement::vertex_t(w);
        emit(owner, mp.owner_t.at(w), active_labels_under_t(tg, w, active));
    }
    for (VertexId w : mp.mS) {
        PosetElement owner = PosetElement::vertex_s(w);
        emit(owner, mp.owner_s.at(w), active_labels_under_s(tg, w, active));
    }
    return out;
}

namespace detail {

Layout multi_process_subset(const Tanglegram& tg, const MultiPartition& mp,
                            const DecisionPoset& poset,
                            const std::map<PosetElement, CrossSet>& crosses,
                            const std::vector<char>& in_c, Layout start) {
    auto is_in = [](const std::vector<VertexPair>& v, const PosetElement& e) {
        return std::find(v.begin(), v.end(), VertexPair{e.t_vertex, e.s_vertex}) != v.end();
    };
    auto has_vertex = [](const std::vector<VertexId>& v, VertexId w) {
        return std::find(v.begin(), v.end(), w) != v.end();
    };

    std::vector<Label>& x = start.x_order;
    std::vector<Label>& y = start.y_order;
    auto majority = [&](const PosetElement& e) {
        const CrossSet& cs = crosses.at(e);
        if (cs.pairs.empty()) return false;
        tangle::detail::PositionIndex idx;
        idx.build(tg, x, y);
        int cnt = 0;
        for (auto [i, j] : cs.pairs)
            if (idx.crosses(tg, i, j)) ++cnt;
        return 2 * cnt > static_cast<int>(cs.pairs.size());
    };

    for (int pos = static_cast<int>(poset.extension.size()) - 1; pos >= 0; --pos) {
        int e_idx = poset.extension[pos];
        const PosetElement& e = poset.elements[e_idx];
        bool forced = in_c[e_idx] != 0;
        switch (e.kind) {
            case PosetElement::Kind::Pair: {
                bool flip = (forced && is_in(mp.l1, e)) ||
                            ((is_in(mp.lT, e) || is_in(mp.lS, e)) && majority(e));
                if (flip) {
                    tangle::detail::reverse_block(tg.t(), e.t_vertex, x);
                    tangle::detail::reverse_block(tg.s(), e.s_vertex, y);
                }
                break;
            }
            case PosetElement::Kind::VertexT: {
                bool sw = (forced && has_vertex(mp.m1_t, e.t_vertex)) ||
                          ((has_vertex(mp.mT, e.t_vertex) || has_vertex(mp.m0_t, e.t_vertex)) &&
                           majority(e));
                if (sw) tangle::detail::switch_child_blocks(tg.t(), e.t_vertex, x);
                break;
            }
            case PosetElement::Kind::VertexS: {
                bool sw = (forced && has_vertex(mp.m1_s, e.s_vertex)) ||
                          ((has_vertex(mp.mS, e.s_vertex) || has_vertex(mp.m0_s, e.s_vertex)) &&
                           majority(e));
                if (sw) tangle::detail::switch_child_blocks(tg.s(), e.s_vertex, y);
                break;
            }
        }
    }
    return start;
}

}  // namespace detail

MultiResult multi_insertion(const Tanglegram& tg, const IndexSet& active) {
    if (active.empty()) throw std::invalid_argument("active set must be nonempty");
    UntangleResult res = modified_untangle(tg, active);
    Tanglegram sub = induced_subtanglegram(tg, active);
    if (count_crossings(sub, restrict_layout(tg, res.layout, active)).value != 0)
        throw PreconditionError("induced subtanglegram is not planar");

    MultiPartition mp = partition_sets(tg, active);
    DecisionPoset poset = build_poset(tg, mp);
    std::map<PosetElement, CrossSet> crosses = cross_sets(tg, mp, poset);

    // the free elements: L(I)_1 pairs plus M(I)_1 vertices
    std::vector<int> free_idx;
    for (size_t e = 0; e < poset.elements.size(); ++e) {
        const PosetElement& el = poset.elements[e];
        bool eligible = false;
        if (el.kind == PosetElement::Kind::Pair)
            eligible = std::find(mp.l1.begin(), mp.l1.end(),
                                 VertexPair{el.t_vertex, el.s_vertex}) != mp.l1.end();
        else if (el.kind == PosetElement::Kind::VertexT)
            eligible = std::find(mp.m1_t.begin(), mp.m1_t.end(), el.t_vertex) != mp.m1_t.end();
        else
            eligible = std::find(mp.m1_s.begin(), mp.m1_s.end(), el.s_vertex) != mp.m1_s.end();
        if (eligible) free_idx.push_back(static_cast<int>(e));
    }
    if (free_idx.size() > 30)
        throw SizeGuardError("multi_insertion refused: 2^" + std::to_string(free_idx.size()) +
                             " subsets");

    MultiResult best;
    best.layout = res.layout;
    best.crossings = count_crossings(tg, res.layout);
    std::vector<char> in_c(poset.elements.size(), 0);
    for (unsigned long long c = 0; c < (1ULL << free_idx.size()); ++c) {
        std::fill(in_c.begin(), in_c.end(), 0);
        for (size_t b = 0; b < free_idx.size(); ++b)
            if (c >> b & 1ULL) in_c[free_idx[b]] = 1;
        Layout ly = detail::multi_process_subset(tg, mp, poset, crosses, in_c, res.layout);
        CrossingCount cc = count_crossings(tg, ly);
        if (cc < best.crossings) {
            best.crossings = cc;
            best.layout = std::move(ly);
            std::vector<PosetElement> chosen;
            for (size_t b = 0; b < free_idx.size(); ++b)
                if (c >> b & 1ULL) chosen.push_back(poset.elements[free_idx[b]]);
            best.chosen = std::move(chosen);
        }
    }
    return best;
}

namespace {

long long crossings_of_lists(const Tanglegram& tg, const std::vector<Label>& x,
                             const std::vector<Label>& y) {
    tangle::detail::PositionIndex idx;
    idx.build(tg, x, y);
    long long total = 0;
    for (size_t a = 0; a < x.size(); ++a)
        for (size_t b = a + 1; b < x.size(); ++b)
            if (idx.crosses(tg, x[a], x[b])) ++total;
    return total;
}

}  // namespace

Layout iterated_insertion(const Tanglegram& tg, const IndexSet& active,
                          std::vector<CrossingCount>* step_counts) {
    if (active.empty()) throw std::invalid_argument("active set must be nonempty");
    UntangleResult res = modified_untangle(tg, active);
    Tanglegram sub = induced_subtanglegram(tg, active);
    Layout part = restrict_layout(tg, res.layout, active);
    if (count_crossings(sub, part).value != 0)
        throw PreconditionError("induced subtanglegram is not planar");

    std::vector<Label> x = part.x_order;
    std::vector<Label> y = part.y_order;
    PairList m = reduce_pairs(res.pairs, tg, active);
    if (step_counts) step_counts->push_back(CrossingCount{0});

    std::vector<Label> missing;
    for (Label l : tg.t_labels())
        if (!active.contains(l)) missing.push_back(l);

    IndexSet j = active;
    for (Label i : missing) {
        std::vector<int> cnt_t = leaf_counts_of(tg.t(), j.members);
        std::vector<int> cnt_s = leaf_counts_of(tg.s(), tg.phi_of(j.members));
        VertexId ti = tg.t().leaf_vertex(i);
        VertexId si = tg.s().leaf_vertex(tg.phi(i));
        VertexId u0 = anchor_above(tg.t(), ti, cnt_t);  // parent of t_i in T_{J+i}
        VertexId v0 = anchor_above(tg.s(), si, cnt_s);

        // extend: the new leaf goes directly below its sibling block
        auto insert_below = [](std::vector<Label>& order, const Tree& tree, VertexId block_root,
                               Label lab, const std::vector<char>& present) {
            int last = -1;
            for (int p = 0; p < static_cast<int>(order.size()); ++p) {
                Label l = order[p];
                if (present[l] && tree.is_ancestor_or_equal(block_root, tree.leaf_vertex(l)))
                    last = p;
            }
            order.insert(order.begin() + last + 1, lab);
        };
        Label max_t = tg.t_labels().back();
        Label max_s = tg.s_labels().back();
        std::vector<char> present_t(max_t + 1, 0), present_s(max_s + 1, 0);
        for (Label l : j.members) {
            present_t[l] = 1;
            present_s[tg.phi(l)] = 1;
        }
        insert_below(x, tg.t(), u0, i, present_t);
        insert_below(y, tg.s(), v0, tg.phi(i), present_s);

        std::vector<VertexPair> m_t, m_s;
        PairList keep;
        for (const VertexPair& p : m) {
            bool above_t = tg.t().is_strict_ancestor(p.t_vertex, ti);
            bool above_s = tg.s().is_strict_ancestor(p.s_vertex, si);
            if (above_t && !above_s)
                m_t.push_back(p);
            else if (!above_t && above_s)
                m_s.push_back(p);
            else
                keep.push_back(p);
        }
        m = std::move(keep);  // no future flips at the pairs just used

        InsertionContext ctx = tangle::detail::plan_insertion_step(
            tg, i, std::move(m_t), std::move(m_s), u0, v0, j, /*check_disjoint=*/false);
        tangle::detail::apply_insertion_step(tg, ctx, x, y);
        if (step_counts) step_counts->push_back(CrossingCount{crossings_of_lists(tg, x, y)});
        j = IndexSet::of([&] {
            std::vector<Label> members = j.members;
            members.push_back(i);
            return members;
        }());
    }
    return Layout{std::move(x), std::move(y)};
}

}  // namespace tangle
