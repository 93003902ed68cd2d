#pragma once

#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"
#include "tangle/untangle.hpp"

namespace tangle {

// Graph on the planar layouts of a planar tanglegram; nodes[i] is adjacent to
// nodes[j] iff one paired flip at a leaf-matched pair maps one to the other.
struct FlipGraph {
    std::vector<Layout> nodes;
    std::vector<std::vector<int>> adjacency;

    bool connected() const;
    std::string to_text() const;  // node table plus adjacency lines
};

// Every planar layout, as the closure of ModifiedUntangle's layout under
// paired flips at the recorded pairs. Throws PreconditionError on non-planar
// input. Result is sorted for set comparisons.
std::vector<Layout> all_planar_layouts(const Tanglegram& tg);

FlipGraph flip_graph(const Tanglegram& tg);

// True iff the only leaf-matched pair is the pair of roots. Requires size >= 2.
bool is_irreducible(const Tanglegram& tg);

// Contracts every non-root leaf-matched pair to a single pair of matched
// leaves. Fresh labels are assigned to the contracted leaves. Requires
// size >= 2; idempotent.
Tanglegram irreducible_component(const Tanglegram& tg);

}  // namespace tangle
