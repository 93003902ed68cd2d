#include "tangle/tanglegram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tangle {

IndexSet IndexSet::of(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return IndexSet{std::move(labels)};
}

bool IndexSet::contains(Label l) const {
    return std::binary_search(members.begin(), members.end(), l);
}

Tanglegram::Tanglegram(Tree t, Tree s, const std::map<Label, Label>& phi)
    : t_(std::move(t)), s_(std::move(s)), phi_(phi) {
    if (t_.leaf_count() != s_.leaf_count())
        throw std::invalid_argument("trees have different leaf counts");
    if (static_cast<int>(phi_.size()) != t_.leaf_count())
        throw std::invalid_argument("phi does not cover every T leaf");
    for (const auto& [from, to] : phi_) {
        if (!t_.has_label(from))
            throw std::invalid_argument("phi maps unknown T label " + std::to_string(from));
        if (!s_.has_label(to))
            throw std::invalid_argument("phi maps to unknown S label " + std::to_string(to));
        if (!phi_inv_.emplace(to, from).second)
            throw std::invalid_argument("phi is not injective at S label " + std::to_string(to));
    }
}

Tanglegram Tanglegram::from_phi_row(Tree t, Tree s, const std::vector<Label>& images) {
    if (static_cast<int>(images.size()) != t.leaf_count())
        throw std::invalid_argument("phi row length does not match leaf count");
    std::map<Label, Label> phi;
    const std::vector<Label>& from = t.labels();
    for (size_t i = 0; i < images.size(); ++i) phi[from[i]] = images[i];
    return Tanglegram(std::move(t), std::move(s), phi);
}

Label Tanglegram::phi(Label t_label) const {
    auto it = phi_.find(t_label);
    if (it == phi_.end())
        throw std::invalid_argument("unknown T label " + std::to_string(t_label));
    return it->second;
}

Label Tanglegram::phi_inv(Label s_label) const {
    auto it = phi_inv_.find(s_label);
    if (it == phi_inv_.end())
        throw std::invalid_argument("unknown S label " + std::to_string(s_label));
    return it->second;
}

std::vector<Label> Tanglegram::phi_of(const std::vector<Label>& t_labels) const {
    std::vector<Label> out;
    out.reserve(t_labels.size());
    for (Label l : t_labels) out.push_back(phi(l));
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet Tanglegram::all_but(Label i) const {
    std::vector<Label> keep;
    keep.reserve(size() - 1);
    for (Label l : t_labels())
        if (l != i) keep.push_back(l);
    if (static_cast<int>(keep.size()) != size() - 1)
        throw std::invalid_argument("label " + std::to_string(i) + " is not in the tanglegram");
    return IndexSet{std::move(keep)};
}

Tree induced_subtree(const Tree& tree, const IndexSet& labels) {
    if (labels.empty()) throw std::invalid_argument("empty index set");
    return tree.induced(labels.members);
}

Tanglegram induced_subtanglegram(const Tanglegram& tg, const IndexSet& labels) {
    if (labels.empty()) throw std::invalid_argument("empty index set");
    Tree t = tg.t().induced(labels.members);
    Tree s = tg.s().induced(tg.phi_of(labels.members));
    std::map<Label, Label> phi;
    for (Label l : labels.members) phi[l] = tg.phi(l);
    return Tanglegram(std::move(t), std::move(s), phi);
}

namespace detail {

MinEmbeddings minimal_embeddings(const Tree& tree) {
    int internal = tree.leaf_count() - 1;
    if (internal >= 24)
        throw std::invalid_argument("canonical key is limited to desk-scale tanglegrams");
    unsigned long long total = internal <= 0 ? 1ULL : (1ULL << internal);
    MinEmbeddings best;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        std::string shape = tree.shape_string(mask);
        if (best.orders.empty() || shape < best.shape) {
            best.shape = shape;
            best.orders.clear();
            best.orders.push_back(tree.leaf_order_flipped(mask));
        } else if (shape == best.shape) {
            best.orders.push_back(tree.leaf_order_flipped(mask));
        }
    }
    std::sort(best.orders.begin(), best.orders.end());
    best.orders.erase(std::unique(best.orders.begin(), best.orders.end()), best.orders.end());
    return best;
}

CanonicalKey canonical_key_from(const Tanglegram& tg, const MinEmbeddings& et,
                                const MinEmbeddings& es) {
    int n = tg.size();
    std::string best_perm;
    std::string perm(n, '\0');
    for (const auto& so : es.orders) {
        std::map<Label, int> s_pos;
        for (int p = 0; p < n; ++p) s_pos[so[p]] = p;
        for (const auto& to : et.orders) {
            for (int p = 0; p < n; ++p)
                perm[p] = static_cast<char>(s_pos.at(tg.phi(to[p])));
            if (best_perm.empty() || perm < best_perm) best_perm = perm;
        }
    }
    return CanonicalKey{et.shape + "|" + es.shape + "|" + best_perm};
}

}  // namespace detail

CanonicalKey canonical_key(const Tanglegram& tg) {
    return detail::canonical_key_from(tg, detail::minimal_embeddings(tg.t()),
                                      detail::minimal_embeddings(tg.s()));
}

}  // namespace tangle
