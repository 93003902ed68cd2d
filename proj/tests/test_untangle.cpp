#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/oracle.hpp"
#include "tangle/untangle.hpp"

using namespace tangle;

namespace {

std::set<std::pair<VertexId, VertexId>> as_set(const PairList& pairs) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (const VertexPair& p : pairs) out.insert({p.t_vertex, p.s_vertex});
    return out;
}

}  // namespace

TEST_CASE("reachability table closure") {
    Tanglegram two = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {2, 1});
    BoolTable full(two, two.full_set());
    CHECK(full.get(two.t().root(), two.s().root()));
    CHECK(full.get(two.t().leaf_vertex(1), two.s().leaf_vertex(2)));
    CHECK(full.get(two.t().leaf_vertex(2), two.s().leaf_vertex(1)));
    CHECK_FALSE(full.get(two.t().leaf_vertex(1), two.s().leaf_vertex(1)));

    BoolTable empty(two, IndexSet::of({}));
    for (VertexId u = 0; u < two.t().vertex_count(); ++u)
        for (VertexId v = 0; v < two.s().vertex_count(); ++v) CHECK_FALSE(empty.get(u, v));

    // restricted run of the four-leaf reduction example: the roots see each
    // other through the surviving matches
    Tanglegram tg = fixtures::reduction_example();
    BoolTable restricted(tg, IndexSet::of({1, 2, 3}));
    CHECK(restricted.get(tg.t().root(), tg.s().root()));
    CHECK_FALSE(restricted.get(tg.t().leaf_vertex(4), tg.s().leaf_vertex(2)));
}

TEST_CASE("untangle finds a planar layout of the five-leaf example") {
    Tanglegram tg = fixtures::five_leaf_example();
    UntangleResult res = modified_untangle(tg);
    CHECK(count_crossings(tg, res.layout).value == 0);
    CHECK(is_tree_consistent(tg, res.layout));
    CHECK(as_set(res.pairs) == as_set(brute_leaf_matched_pairs(tg)));
}

TEST_CASE("untangle on a size-2 tanglegram records only the roots") {
    Tanglegram two = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {2, 1});
    UntangleResult res = modified_untangle(two);
    CHECK(count_crossings(two, res.layout).value == 0);
    REQUIRE(res.pairs.size() == 1);
    CHECK(res.pairs[0].t_vertex == two.t().root());
    CHECK(res.pairs[0].s_vertex == two.s().root());
}

TEST_CASE("untangle recovers the leaf-matched pairs of every small planar class") {
    for (int n = 2; n <= 5; ++n) {
        for (const ClassRep& rep : enumerate_planar(n)) {
            UntangleResult res = modified_untangle(rep.tg);
            CHECK(count_crossings(rep.tg, res.layout).value == 0);
            CHECK(as_set(res.pairs) == as_set(brute_leaf_matched_pairs(rep.tg)));
        }
    }
}

TEST_CASE("single refine steps") {
    // crossed cherries force the second child on top
    Tanglegram tg =
        Tanglegram::from_phi_row(Tree::parse("((1,2),(3,4))"), Tree::parse("((1,2),(3,4))"),
                                 {3, 4, 1, 2});
    BoolTable table(tg, tg.full_set());
    PartialLayout roots{{tg.t().root()}, {tg.s().root()}};

    // both children of the T root see the single S vertex: the tie keeps the
    // stored order
    PartialLayout after_t = refine(tg, table, roots, {Side::T, tg.t().root()});
    VertexId tA = fixtures::vertex_over(tg.t(), {1, 2});
    VertexId tB = fixtures::vertex_over(tg.t(), {3, 4});
    CHECK(after_t.x == std::vector<VertexId>{tA, tB});
    CHECK(partial_edges(table, after_t).size() == 2);

    // the S root's first child is matched below the second child's range,
    // so the refined order swaps them
    PartialLayout after_s = refine(tg, table, after_t, {Side::S, tg.s().root()});
    VertexId sa = fixtures::vertex_over(tg.s(), {1, 2});
    VertexId sb = fixtures::vertex_over(tg.s(), {3, 4});
    CHECK(after_s.y == std::vector<VertexId>{sb, sa});

    CHECK_THROWS_AS(refine(tg, table, roots, {Side::T, tg.t().leaf_vertex(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(refine(tg, table, roots, {Side::T, tA}), std::invalid_argument);
}

TEST_CASE("a child without surviving matches is placed second") {
    Tanglegram tg = fixtures::reduction_example();
    IndexSet active = IndexSet::of({1, 2, 3});
    BoolTable table(tg, active);
    PartialLayout roots{{tg.t().root()}, {tg.s().root()}};
    PartialLayout step = refine(tg, table, roots, {Side::T, tg.t().root()});
    CHECK(step.x == std::vector<VertexId>{fixtures::vertex_over(tg.t(), {1, 2, 3}),
                                          tg.t().leaf_vertex(4)});
    // and the completed restricted run still lands on a planar restriction
    UntangleResult res = modified_untangle(tg, active);
    Tanglegram sub = induced_subtanglegram(tg, active);
    CHECK(count_crossings(sub, restrict_layout(tg, res.layout, active)).value == 0);
}

TEST_CASE("planarity test") {
    CHECK(is_planar(fixtures::five_leaf_example()));
    CHECK_FALSE(is_planar(fixtures::gap_instance()));
    Tanglegram one = Tanglegram::from_phi_row(Tree::parse("1"), Tree::parse("1"), {1});
    CHECK(is_planar(one));
}

TEST_CASE("the gap instance is planar only without edge 2") {
    Tanglegram tg = fixtures::gap_instance();
    for (Label i : tg.t_labels()) {
        Tanglegram sub = induced_subtanglegram(tg, tg.all_but(i));
        CHECK(is_planar(sub) == (i == 2));
    }
}

TEST_CASE("restricted runs restrict to planar layouts") {
    Tanglegram tg = fixtures::gap_instance();
    IndexSet active = tg.all_but(2);
    UntangleResult res = modified_untangle(tg, active);
    Layout restricted = restrict_layout(tg, res.layout, active);
    Tanglegram sub = induced_subtanglegram(tg, active);
    CHECK(count_crossings(sub, restricted).value == 0);
}

TEST_CASE("pair reduction on the four-leaf example") {
    Tanglegram tg = fixtures::reduction_example();
    IndexSet active = IndexSet::of({1, 2, 3});
    UntangleResult res = modified_untangle(tg, active);

    // the first recorded pair joins the two roots, and the T root is not a
    // vertex of the residual: reduction descends it to the vertex over {1,2,3}
    REQUIRE(!res.pairs.empty());
    CHECK(res.pairs[0].t_vertex == tg.t().root());
    CHECK(res.pairs[0].s_vertex == tg.s().root());
    PairList reduced = reduce_pairs(res.pairs, tg, active);
    VertexId expect_t = fixtures::vertex_over(tg.t(), {1, 2, 3});
    bool found = false;
    for (const VertexPair& p : reduced)
        if (p.t_vertex == expect_t && p.s_vertex == tg.s().root()) found = true;
    CHECK(found);

    // reduction equals the residual's own leaf-matched pairs
    CHECK(as_set(reduced) == as_set(brute_induced_leaf_matched_pairs(tg, active)));
}

TEST_CASE("pair reduction is the identity on full runs") {
    Tanglegram tg = fixtures::five_leaf_example();
    UntangleResult res = modified_untangle(tg);
    CHECK(as_set(reduce_pairs(res.pairs, tg, tg.full_set())) == as_set(res.pairs));
}

TEST_CASE("pair reduction matches the residual pairs on sampled subsets") {
    std::mt19937 rng(31);
    int checked = 0;
    while (checked < 40) {
        int n = 4 + static_cast<int>(rng() % 4);
        Tanglegram tg = fixtures::random_tanglegram(n, rng);
        std::vector<Label> members;
        for (Label l : tg.t_labels())
            if (rng() % 3 != 0) members.push_back(l);
        if (members.size() < 2) continue;
        IndexSet active = IndexSet::of(members);
        if (!is_planar(induced_subtanglegram(tg, active))) continue;
        UntangleResult res = modified_untangle(tg, active);
        CHECK(as_set(reduce_pairs(res.pairs, tg, active)) ==
              as_set(brute_induced_leaf_matched_pairs(tg, active)));
        ++checked;
    }
}
