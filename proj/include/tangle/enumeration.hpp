#pragma once

#include <map>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

// All rooted binary tree shapes with n leaves (one per isomorphism class),
// leaves labeled 1..n left to right. Wedderburn-Etherington many.
std::vector<Tree> tree_shapes(int n);

long long wedderburn_etherington(int n);

struct ClassRep {
    CanonicalKey key;
    Tanglegram tg;
};

// One representative per isomorphism class of planar tanglegrams of size n,
// by sweeping (T shape, S shape, matching) triples, filtering with
// ModifiedUntangle and deduplicating by canonical key. Practical for n <= 8.
std::vector<ClassRep> enumerate_planar(int n, int threads = 1);

// Same sweep without the planarity filter (every isomorphism class).
std::vector<ClassRep> enumerate_all(int n, int threads = 1);

struct CensusRow {
    int n = 0;
    std::map<int, long long> counts;  // leaf-matched pair count -> classes
    long long total = 0;
};

// Planar tanglegrams of size n by number of leaf-matched pairs.
CensusRow census(int n, int threads = 1);

// Number of isomorphism classes of all tanglegrams of size n, counted by
// exhaustive orbit enumeration under single flips. Independent of
// canonical_key; used to validate it.
long long orbit_class_count(int n);

}  // namespace tangle
