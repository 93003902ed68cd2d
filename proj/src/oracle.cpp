#include "tangle/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

void guard(const Tanglegram& tg, int max_size, const char* what) {
    if (tg.size() > max_size)
        throw SizeGuardError(std::string(what) + " refused: size " + std::to_string(tg.size()) +
                             " exceeds the guard of " + std::to_string(max_size));
}

// calls fn(layout) for every (maskT, maskS) flip combination
template <typename Fn>
long long sweep_layouts(const Tanglegram& tg, Fn&& fn) {
    int it = tg.t().leaf_count() - 1;
    int is = tg.s().leaf_count() - 1;
    unsigned long long nt = it <= 0 ? 1 : 1ULL << it;
    unsigned long long ns = is <= 0 ? 1 : 1ULL << is;
    Layout ly;
    for (unsigned long long mt = 0; mt < nt; ++mt) {
        ly.x_order = tg.t().leaf_order_flipped(mt);
        for (unsigned long long ms = 0; ms < ns; ++ms) {
            ly.y_order = tg.s().leaf_order_flipped(ms);
            fn(ly);
        }
    }
    return static_cast<long long>(nt) * static_cast<long long>(ns);
}

}  // namespace

OracleReport brute_crossing_number(const Tanglegram& tg, int max_size) {
    guard(tg, max_size, "brute_crossing_number");
    OracleReport rep;
    bool first = true;
    rep.examined = sweep_layouts(tg, [&](const Layout& ly) {
        CrossingCount c = count_crossings(tg, ly);
        if (first || c < rep.optimum) {
            rep.optimum = c;
            rep.witness = ly;
            first = false;
        }
    });
    return rep;
}

OracleReport brute_insertion_optimum(const Tanglegram& tg, const IndexSet& active, int max_size) {
    guard(tg, max_size, "brute_insertion_optimum");
    OracleReport rep;
    bool found = false;
    Tanglegram sub = induced_subtanglegram(tg, active);
    rep.examined = sweep_layouts(tg, [&](const Layout& ly) {
        Layout restricted = restrict_layout(tg, ly, active);
        if (count_crossings(sub, restricted).value != 0) return;
        CrossingCount c = count_crossings(tg, ly);
        if (!found || c < rep.optimum) {
            rep.optimum = c;
            rep.witness = ly;
            found = true;
        }
    });
    if (!found)
        throw PreconditionError("no layout restricts to a planar layout of the subtanglegram");
    return rep;
}

std::vector<Layout> brute_planar_layouts(const Tanglegram& tg, int max_size) {
    guard(tg, max_size, "brute_planar_layouts");
    std::vector<Layout> out;
    sweep_layouts(tg, [&](const Layout& ly) {
        if (count_crossings(tg, ly).value == 0) out.push_back(ly);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw PreconditionError("tanglegram is not planar");
    return out;
}

PairList brute_leaf_matched_pairs(const Tanglegram& tg) {
    PairList out;
    for (VertexId u : tg.t().internal_vertices()) {
        std::vector<Label> image = tg.phi_of(tg.t().labels_below(u));
        for (VertexId v : tg.s().internal_vertices()) {
            if (tg.s().leaves_below(v) != static_cast<int>(image.size())) continue;
            std::vector<Label> below = tg.s().labels_below(v);
            std::sort(below.begin(), below.end());
            if (below == image) out.push_back({u, v});
        }
    }
    return out;
}

PairList brute_induced_leaf_matched_pairs(const Tanglegram& tg, const IndexSet& active) {
    std::vector<Label> phi_active = tg.phi_of(active.members);
    PairList out;
    for (VertexId u : tg.t().internal_vertices()) {
        std::vector<Label> below_t = tg.t().labels_below(u);
        std::vector<Label> active_t;
        for (Label l : below_t)
            if (active.contains(l)) active_t.push_back(l);
        if (active_t.size() <= 1) continue;
        // u must be a vertex of the induced subtree: both children keep leaves
        auto keeps = [&](VertexId c) {
            for (Label l : tg.t().labels_below(c))
                if (active.contains(l)) return true;
            return false;
        };
        if (!keeps(tg.t().left(u)) || !keeps(tg.t().right(u))) continue;
        std::vector<Label> image;
        for (Label l : active_t) image.push_back(tg.phi(l));
        std::sort(image.begin(), image.end());
        for (VertexId v : tg.s().internal_vertices()) {
            std::vector<Label> below_s = tg.s().labels_below(v);
            std::vector<Label> active_s;
            for (Label l : below_s)
                if (std::binary_search(phi_active.begin(), phi_active.end(), l))
                    active_s.push_back(l);
            if (active_s.size() != image.size()) continue;
            auto keeps_s = [&](VertexId c) {
                for (Label l : tg.s().labels_below(c))
                    if (std::binary_search(phi_active.begin(), phi_active.end(), l)) return true;
                return false;
            };
            if (!keeps_s(tg.s().left(v)) || !keeps_s(tg.s().right(v))) continue;
            std::sort(active_s.begin(), active_s.end());
            if (active_s == image) out.push_back({u, v});
        }
    }
    return out;
}

}  // namespace tangle
