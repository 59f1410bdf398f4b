#include <doctest.h>

#include <cstdlib>

#include "hookforge/enumerate.hpp"
#include "hookforge/errors.hpp"
#include "hookforge/poset.hpp"
#include "hookforge/solid.hpp"
#include "hookforge/trees.hpp"
#include "hookforge/young.hpp"
#include "oracles.hpp"

using namespace hookforge;

TEST_CASE("poset parsing and validation") {
    const FinitePoset p = FinitePoset::parse("3\n1 < 2\n2 < 3\n");
    CHECK(p.size() == 3);
    CHECK(p.less_eq(1, 3));
    CHECK_FALSE(p.less_eq(3, 1));
    CHECK_THROWS_AS(FinitePoset::parse("2\n1 < 2\n2 < 1\n"), InvalidObjectError);
    CHECK_THROWS_AS(FinitePoset::parse("2\n1 < 1\n"), InvalidObjectError);
    CHECK_THROWS_AS(FinitePoset::parse("2\n1 < 5\n"), InvalidObjectError);
    CHECK_THROWS_AS(FinitePoset::parse("abc\n"), ParseError);
    CHECK_THROWS_AS(FinitePoset::parse("2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(FinitePoset::parse(""), ParseError);
}

TEST_CASE("linear extension counts") {
    // chain and antichain pin the extremes
    CHECK(le_count(FinitePoset::parse("4\n1 < 2\n2 < 3\n3 < 4\n"), 20) == 1);
    CHECK(le_count(FinitePoset(5), 20) == 120);
    CHECK(le_count(FinitePoset(0), 20) == 1);
    CHECK(le_count(FinitePoset::from_partition(Partition({4, 3, 1})), 20) == 70);
    CHECK_THROWS_AS(le_count(FinitePoset(25), 20), LimitError);
}

TEST_CASE("le_count against permutation filtering") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const FinitePoset p = random_poset(rng.range(1, 6), rng.range(0, 100), rng);
        CHECK(le_count(p, 20) == BigInt(static_cast<long>(testing::le_count_by_permutations(p))));
    }
    for (int n = 0; n <= 6; ++n)
        for (const Partition& shape : partitions_of(n))
            CHECK(le_count(FinitePoset::from_partition(shape), 20) ==
                  BigInt(static_cast<long>(testing::le_count_by_permutations(
                      FinitePoset::from_partition(shape)))));
}

TEST_CASE("upper ideal sizes") {
    CHECK(FinitePoset::parse("3\n1 < 2\n2 < 3\n").upper_ideal_sizes() ==
          Multiset::of_integers({3, 2, 1}));
    CHECK(FinitePoset(4).upper_ideal_sizes() == Multiset::of_integers({1, 1, 1, 1}));
    // on a tree ordered away from the root these are the branch sizes
    const RootedTree tau = RootedTree::parse("0,1,1,1,2,3,5,5");
    CHECK(FinitePoset::from_tree(tau).upper_ideal_sizes() == tau.branch_sizes());
}

TEST_CASE("product lower bound") {
    CHECK(hp_bound(FinitePoset::parse("3\n1 < 2\n2 < 3\n")) == 1);
    const RootedTree tau = RootedTree::parse("0,1,1,1,2,3,5,5");
    CHECK(hp_bound(FinitePoset::from_tree(tau)) == BigRat(210));
    CHECK(BigRat(it_count(tau)) == hp_bound(FinitePoset::from_tree(tau)));

    const SolidPartition claw(CubeSet{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    const FinitePoset claw_poset = FinitePoset::from_solid(claw);
    CHECK(le_count(claw_poset, 20) == 6);
    CHECK(hp_bound(claw_poset) == BigRat(6));

    // bound below the count on every tested poset, equality on trees
    for (int n = 1; n <= 6; ++n)
        for (const RootedTree& tree : rooted_trees(n))
            CHECK(BigRat(le_count(FinitePoset::from_tree(tree), 20)) ==
                  hp_bound(FinitePoset::from_tree(tree)));
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const FinitePoset p = random_poset(rng.range(1, 8), rng.range(0, 100), rng);
        CHECK(BigRat(le_count(p, 20)) >= hp_bound(p));
    }
}

TEST_CASE("environment variable overrides the counting limit") {
    CHECK(le_count_limit() == 20);
    setenv("HOOKFORGE_LIMIT", "3", 1);
    CHECK(le_count_limit() == 3);
    setenv("HOOKFORGE_LIMIT", "junk", 1);
    CHECK(le_count_limit() == 20);
    unsetenv("HOOKFORGE_LIMIT");
    CHECK(le_count_limit() == 20);
}
