#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "tangle/errors.hpp"
#include "tangle/insertion.hpp"
#include "tangle/oracle.hpp"

using namespace tangle;

TEST_CASE("exact crossing numbers") {
    CHECK(brute_crossing_number(fixtures::gap_instance()).optimum.value == 2);
    CHECK(brute_crossing_number(fixtures::five_leaf_example()).optimum.value == 0);

    OracleReport rep = brute_crossing_number(fixtures::five_leaf_example());
    CHECK(count_crossings(fixtures::five_leaf_example(), rep.witness) == rep.optimum);
    CHECK(rep.examined == 16 * 16);
}

TEST_CASE("insertion optimum of the gap instance") {
    Tanglegram tg = fixtures::gap_instance();
    OracleReport rep = brute_insertion_optimum(tg, tg.all_but(2));
    CHECK(rep.optimum.value == 3);
    CHECK(count_crossings(tg, rep.witness).value == 3);

    // planar input: any restriction is free
    Tanglegram planar = fixtures::five_leaf_example();
    for (Label i : planar.t_labels())
        CHECK(brute_insertion_optimum(planar, planar.all_but(i)).optimum.value == 0);
}

TEST_CASE("planar layout sweeps") {
    // irreducible size-3: exactly two planar layouts
    Tanglegram irr = Tanglegram::from_phi_row(Tree::parse("((1,2),3)"), Tree::parse("((1,2),3)"),
                                              {1, 3, 2});
    CHECK(brute_leaf_matched_pairs(irr).size() == 1);
    CHECK(brute_planar_layouts(irr).size() == 2);

    Tanglegram one = Tanglegram::from_phi_row(Tree::parse("1"), Tree::parse("1"), {1});
    CHECK(brute_planar_layouts(one).size() == 1);
}

TEST_CASE("leaf-matched pairs by direct comparison") {
    Tanglegram two = Tanglegram::from_phi_row(Tree::parse("(1,2)"), Tree::parse("(1,2)"), {2, 1});
    PairList pairs = brute_leaf_matched_pairs(two);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].t_vertex == two.t().root());

    Tanglegram eight = fixtures::matched_pair_example();
    VertexId u = fixtures::vertex_over(eight.t(), {1, 2, 3, 4});
    VertexId v = fixtures::vertex_over(eight.s(), {1, 2, 3, 4});
    bool found = false;
    for (const VertexPair& p : brute_leaf_matched_pairs(eight))
        if (p.t_vertex == u && p.s_vertex == v) found = true;
    CHECK(found);
}

TEST_CASE("size guards refuse loudly") {
    std::mt19937 rng(5);
    Tanglegram big = fixtures::random_tanglegram(12, rng);
    CHECK_THROWS_AS(brute_crossing_number(big), SizeGuardError);
    CHECK_THROWS_AS(brute_insertion_optimum(big, big.all_but(1)), SizeGuardError);
    CHECK_THROWS_AS(brute_planar_layouts(big), SizeGuardError);
}

TEST_CASE("crossing number stays below half the pair count") {
    std::mt19937 rng(17);
    for (int round = 0; round < 25; ++round) {
        int n = 3 + static_cast<int>(rng() % 5);
        Tanglegram tg = fixtures::random_tanglegram(n, rng);
        long long crt = brute_crossing_number(tg).optimum.value;
        CHECK(2 * crt < static_cast<long long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("a constrained optimum never beats the global one") {
    std::mt19937 rng(19);
    int checked = 0;
    while (checked < 20) {
        int n = 4 + static_cast<int>(rng() % 3);
        Tanglegram tg = fixtures::random_tanglegram(n, rng);
        long long crt = brute_crossing_number(tg).optimum.value;
        for (Label i : tg.t_labels()) {
            long long constrained;
            try {
                constrained = crtei(tg, i).value;
            } catch (const PreconditionError&) {
                continue;
            }
            CHECK(crt <= constrained);
            ++checked;
        }
    }
}
