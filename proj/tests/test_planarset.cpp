#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/errors.hpp"
#include "tangle/oracle.hpp"
#include "tangle/planarset.hpp"

using namespace tangle;

TEST_CASE("irreducible tanglegrams have exactly two planar layouts") {
    Tanglegram irr = Tanglegram::from_phi_row(Tree::parse("((1,2),3)"), Tree::parse("((1,2),3)"),
                                              {1, 3, 2});
    REQUIRE(is_irreducible(irr));
    std::vector<Layout> all = all_planar_layouts(irr);
    REQUIRE(all.size() == 2);
    // mirror images of one another
    Layout mirrored = all[0];
    std::reverse(mirrored.x_order.begin(), mirrored.x_order.end());
    std::reverse(mirrored.y_order.begin(), mirrored.y_order.end());
    CHECK(mirrored == all[1]);

    FlipGraph g = flip_graph(irr);
    CHECK(g.nodes.size() == 2);
    CHECK(g.adjacency[0] == std::vector<int>{1});
    CHECK(g.connected());
}

TEST_CASE("trivial sizes") {
    Tanglegram one = Tanglegram::from_phi_row(Tree::parse("1"), Tree::parse("1"), {1});
    CHECK(all_planar_layouts(one).size() == 1);
    FlipGraph g1 = flip_graph(one);
    CHECK(g1.nodes.size() == 1);
    CHECK(g1.adjacency[0].empty());

    Tanglegram two = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {1, 2});
    std::vector<Layout> brute = brute_planar_layouts(two);
    std::vector<Layout> closed = all_planar_layouts(two);
    CHECK(closed == brute);
    CHECK(flip_graph(two).connected());
}

TEST_CASE("paired-flip closure equals the exhaustive planar set") {
    Tanglegram tg = fixtures::five_leaf_example();
    CHECK(all_planar_layouts(tg) == brute_planar_layouts(tg));
    CHECK(flip_graph(tg).connected());
    CHECK_THROWS_AS(all_planar_layouts(fixtures::gap_instance()), PreconditionError);
}

TEST_CASE("closure equals brute force on all planar classes up to size 5") {
    for (int n = 2; n <= 5; ++n)
        for (const ClassRep& rep : enumerate_planar(n)) {
            CHECK(all_planar_layouts(rep.tg) == brute_planar_layouts(rep.tg));
            CHECK(flip_graph(rep.tg).connected());
        }
}

TEST_CASE("irreducibility by pair count") {
    Tanglegram two = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {1, 2});
    CHECK(is_irreducible(two));

    Tanglegram one = Tanglegram::from_phi_row(Tree::parse("1"), Tree::parse("1"), {1});
    CHECK_THROWS_AS(is_irreducible(one), std::invalid_argument);

    // the size-4 planar classes split 5 irreducible / 4 with two pairs / 2
    // with three pairs
    int irreducible = 0, two_pairs = 0, three_pairs = 0;
    for (const ClassRep& rep : enumerate_planar(4)) {
        size_t k = brute_leaf_matched_pairs(rep.tg).size();
        CHECK(is_irreducible(rep.tg) == (k == 1));
        if (k == 1) ++irreducible;
        if (k == 2) ++two_pairs;
        if (k == 3) ++three_pairs;
    }
    CHECK(irreducible == 5);
    CHECK(two_pairs == 4);
    CHECK(three_pairs == 2);
}

TEST_CASE("irreducible component by contraction") {
    Tanglegram irr = Tanglegram::from_phi_row(Tree::parse("((1,2),3)"), Tree::parse("((1,2),3)"),
                                              {1, 3, 2});
    Tanglegram same = irreducible_component(irr);
    CHECK(canonical_key(same) == canonical_key(irr));

    // replacing a matched leaf pair by a planar tanglegram and contracting
    // recovers the core
    Tanglegram sub = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {1, 2});
    Tanglegram grown = fixtures::substitute_leaf_pair(irr, 2, sub);
    CHECK(grown.size() == 4);
    Tanglegram back = irreducible_component(grown);
    CHECK(is_irreducible(back));
    CHECK(canonical_key(back) == canonical_key(irr));

    // a two-pair size-4 class contracts to the unique size-2 tanglegram
    Tanglegram two = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {1, 2});
    Tanglegram grown2 = fixtures::substitute_leaf_pair(two, 1, two);
    REQUIRE(brute_leaf_matched_pairs(grown2).size() == 2);
    CHECK(canonical_key(irreducible_component(grown2)) == canonical_key(two));

    // idempotence across every size-4 planar class
    for (const ClassRep& rep : enumerate_planar(4)) {
        Tanglegram core = irreducible_component(rep.tg);
        CHECK(is_irreducible(core));
        CHECK(canonical_key(irreducible_component(core)) == canonical_key(core));
    }
}

TEST_CASE("off-path paired flips preserve crossings") {
    // residual pairs entirely above or entirely apart from the removed edge
    // leave every crossing unchanged, even in non-planar layouts
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 30) {
        int n = 4 + static_cast<int>(rng() % 4);
        Tanglegram tg = fixtures::random_tanglegram(n, rng);
        Label i = tg.t_labels()[rng() % n];
        PairList pairs = brute_induced_leaf_matched_pairs(tg, tg.all_but(i));
        if (pairs.empty()) continue;
        Layout ly{tg.t().leaf_order_flipped(rng() % (1ULL << (n - 1))),
                  tg.s().leaf_order_flipped(rng() % (1ULL << (n - 1)))};
        VertexId ti = tg.t().leaf_vertex(i);
        VertexId si = tg.s().leaf_vertex(tg.phi(i));
        auto crossing_set = [&](const Layout& l) {
            std::set<std::pair<Label, Label>> out;
            detail::PositionIndex idx;
            idx.build(tg, l.x_order, l.y_order);
            for (Label a : tg.t_labels())
                for (Label b : tg.t_labels())
                    if (a < b && idx.crosses(tg, a, b)) out.insert({a, b});
            return out;
        };
        for (const VertexPair& p : pairs) {
            bool above_t = tg.t().is_strict_ancestor(p.t_vertex, ti);
            bool above_s = tg.s().is_strict_ancestor(p.s_vertex, si);
            if (above_t != above_s) continue;
            Layout flipped = apply_paired_flip(tg, ly, p.t_vertex, p.s_vertex);
            CHECK(crossing_set(flipped) == crossing_set(ly));
            ++checked;
        }
    }
}
