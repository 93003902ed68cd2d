#include "tangle/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tangle/oracle.hpp"
#include "tangle/untangle.hpp"

namespace tangle {

namespace {

// shape strings ("x" or "(A,B)"), generated once per size
const std::vector<std::string>& shape_strings(int n) {
    static std::vector<std::vector<std::string>> memo = {{}, {"x"}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        std::vector<std::string> out;
        for (int k = 1; 2 * k <= m; ++k) {
            const auto& lefts = memo[k];
            const auto& rights = memo[m - k];
            for (size_t a = 0; a < lefts.size(); ++a) {
                size_t b0 = (2 * k == m) ? a : 0;  // unordered pair when halves tie
                for (size_t b = b0; b < rights.size(); ++b)
                    out.push_back("(" + lefts[a] + "," + rights[b] + ")");
            }
        }
        memo.push_back(std::move(out));
    }
    return memo[n];
}

Tree tree_from_shape(const std::string& shape) {
    int next = 1;
    std::string labeled;
    for (char c : shape) {
        if (c == 'x') {
            labeled += std::to_string(next++);
        } else {
            labeled += c;
        }
    }
    return Tree::parse(labeled);
}

}  // namespace

std::vector<Tree> tree_shapes(int n) {
    if (n < 1) throw std::invalid_argument("tree shapes need n >= 1");
    std::vector<Tree> out;
    for (const std::string& s : shape_strings(n)) out.push_back(tree_from_shape(s));
    return out;
}

long long wedderburn_etherington(int n) {
    return static_cast<long long>(shape_strings(n).size());
}

namespace {

std::vector<ClassRep> enumerate_classes(int n, bool planar_only, int threads) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    std::vector<Tree> shapes = tree_shapes(n);
    std::vector<detail::MinEmbeddings> embeddings;
    embeddings.reserve(shapes.size());
    for (const Tree& t : shapes) embeddings.push_back(detail::minimal_embeddings(t));

    struct Task {
        int it, is;
    };
    std::vector<Task> tasks;
    for (size_t a = 0; a < shapes.size(); ++a)
        for (size_t b = 0; b < shapes.size(); ++b)
            tasks.push_back({static_cast<int>(a), static_cast<int>(b)});

    std::mutex merge_mu;
    std::map<std::string, Tanglegram> classes;
    std::atomic<size_t> next_task{0};

    auto worker = [&]() {
        std::map<std::string, Tanglegram> local;
        for (;;) {
            size_t at = next_task.fetch_add(1);
            if (at >= tasks.size()) break;
            const Tree& ts = shapes[tasks[at].it];
            const Tree& ss = shapes[tasks[at].is];
            std::vector<Label> images(n);
            std::iota(images.begin(), images.end(), 1);
            do {
                Tanglegram tg = Tanglegram::from_phi_row(ts, ss, images);
                if (planar_only && !is_planar(tg)) continue;
                CanonicalKey key = detail::canonical_key_from(tg, embeddings[tasks[at].it],
                                                              embeddings[tasks[at].is]);
                local.emplace(key.bytes, std::move(tg));
            } while (std::next_permutation(images.begin(), images.end()));
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        for (auto& [key, tg] : local) classes.emplace(key, std::move(tg));
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<ClassRep> out;
    out.reserve(classes.size());
    for (auto& [key, tg] : classes) out.push_back(ClassRep{CanonicalKey{key}, std::move(tg)});
    return out;
}

}  // namespace

std::vector<ClassRep> enumerate_planar(int n, int threads) {
    return enumerate_classes(n, /*planar_only=*/true, threads);
}

std::vector<ClassRep> enumerate_all(int n, int threads) {
    return enumerate_classes(n, /*planar_only=*/false, threads);
}

CensusRow census(int n, int threads) {
    CensusRow row;
    row.n = n;
    for (const ClassRep& rep : enumerate_planar(n, threads)) {
        int k = static_cast<int>(brute_leaf_matched_pairs(rep.tg).size());
        ++row.counts[k];
        ++row.total;
    }
    return row;
}

namespace {

// plane-embedded tanglegram state for orbit counting: two shape strings plus
// the position matching (T position p connects to S position match[p])
struct PlaneState {
    std::string t_shape, s_shape;
    std::vector<int> match;
    auto operator<=>(const PlaneState&) const = default;
};

// small parsed form of a shape string with leaf spans
struct ShapeNode {
    int left = -1, right = -1;
    int lo = 0, hi = 0;  // leaf position span [lo, hi)
};

std::vector<ShapeNode> parse_shape(const std::string& shape) {
    std::vector<ShapeNode> nodes;
    size_t pos = 0;
    int leaf_at = 0;
    std::function<int()> sub = [&]() -> int {
        if (shape[pos] == 'x') {
            ++pos;
            nodes.push_back({-1, -1, leaf_at, leaf_at + 1});
            ++leaf_at;
            return static_cast<int>(nodes.size()) - 1;
        }
        ++pos;  // '('
        int l = sub();
        ++pos;  // ','
        int r = sub();
        ++pos;  // ')'
        nodes.push_back({l, r, nodes[l].lo, nodes[r].hi});
        return static_cast<int>(nodes.size()) - 1;
    };
    int root = sub();
    (void)root;
    return nodes;
}

std::string mirrored_shape(const std::vector<ShapeNode>& nodes, int at, int node,
                           bool inside) {
    const ShapeNode& nd = nodes[node];
    if (nd.left < 0) return "x";
    bool now = inside || node == at;
    std::string a = mirrored_shape(nodes, at, nd.left, now);
    std::string b = mirrored_shape(nodes, at, nd.right, now);
    if (now) std::swap(a, b);
    return "(" + a + "," + b + ")";
}

}  // namespace

namespace {

// all plane binary trees on m leaves (ordered children; Catalan many)
std::vector<std::string> plane_shapes(int m) {
    if (m == 1) return {"x"};
    std::vector<std::string> out;
    for (int k = 1; k < m; ++k)
        for (const std::string& a : plane_shapes(k))
            for (const std::string& b : plane_shapes(m - k))
                out.push_back("(" + a + "," + b + ")");
    return out;
}

}  // namespace

long long orbit_class_count(int n) {
    if (n > 5) throw std::invalid_argument("orbit enumeration is limited to n <= 5");
    std::vector<std::string> shapes = plane_shapes(n);

    std::set<PlaneState> remaining;
    std::vector<int> match(n);
    std::iota(match.begin(), match.end(), 0);
    for (const std::string& ts : shapes)
        for (const std::string& ss : shapes) {
            std::vector<int> m = match;
            do {
                remaining.insert(PlaneState{ts, ss, m});
            } while (std::next_permutation(m.begin(), m.end()));
        }

    long long orbits = 0;
    while (!remaining.empty()) {
        ++orbits;
        std::vector<PlaneState> stack = {*remaining.begin()};
        remaining.erase(remaining.begin());
        while (!stack.empty()) {
            PlaneState st = std::move(stack.back());
            stack.pop_back();
            std::vector<ShapeNode> tn = parse_shape(st.t_shape);
            std::vector<ShapeNode> sn = parse_shape(st.s_shape);
            std::vector<PlaneState> nbrs;
            for (int v = 0; v < static_cast<int>(tn.size()); ++v) {
                if (tn[v].left < 0) continue;
                PlaneState nb = st;
                nb.t_shape =
                    mirrored_shape(tn, v, static_cast<int>(tn.size()) - 1, false);
                std::reverse(nb.match.begin() + tn[v].lo, nb.match.begin() + tn[v].hi);
                nbrs.push_back(std::move(nb));
            }
            for (int v = 0; v < static_cast<int>(sn.size()); ++v) {
                if (sn[v].left < 0) continue;
                PlaneState nb = st;
                nb.s_shape =
                    mirrored_shape(sn, v, static_cast<int>(sn.size()) - 1, false);
                for (int& q : nb.match)
                    if (q >= sn[v].lo && q < sn[v].hi) q = sn[v].lo + sn[v].hi - 1 - q;
                nbrs.push_back(std::move(nb));
            }
            for (PlaneState& nb : nbrs) {
                auto it = remaining.find(nb);
                if (it != remaining.end()) {
                    remaining.erase(it);
                    stack.push_back(std::move(nb));
                }
            }
        }
    }
    return orbits;
}

}  // namespace tangle
