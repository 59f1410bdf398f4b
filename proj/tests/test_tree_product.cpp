#include <doctest.h>

#include "hookforge/enumerate.hpp"
#include "hookforge/errors.hpp"
#include "hookforge/solid.hpp"
#include "hookforge/tree_product.hpp"
#include "hookforge/young.hpp"

using namespace hookforge;

namespace {

RootedTree chain(int length) {
    std::vector<int> parent(static_cast<std::size_t>(length));
    for (int v = 1; v <= length; ++v)
        parent[static_cast<std::size_t>(v - 1)] = v - 1;
    return RootedTree(std::move(parent));
}

RootedTree pad_leaves(const RootedTree& tree) {
    std::vector<int> parent = tree.parent_array();
    for (int v = 1; v <= tree.size(); ++v)
        if (tree.is_leaf(v))
            parent.push_back(v);
    return RootedTree(std::move(parent));
}

TreeProductIdeal diagram_ideal(const Partition& shape) {
    std::vector<std::vector<int>> elements;
    for (const Cell& c : shape.cells())
        elements.push_back({c.i, c.j});
    return TreeProductIdeal({chain(shape.rows() + 1), chain(shape.cols() + 1)},
                            std::move(elements));
}

} // namespace

TEST_CASE("ideal validation") {
    CHECK_THROWS_AS(TreeProductIdeal({chain(3), chain(3)}, {{1, 1}, {2, 2}}),
                    InvalidObjectError); // not downward closed
    CHECK_THROWS_AS(TreeProductIdeal({chain(2)}, {{2}}), InvalidObjectError); // leaf touched
    CHECK_THROWS_AS(TreeProductIdeal({chain(3)}, {{1}, {1}}), InvalidObjectError);
    CHECK_THROWS_AS(TreeProductIdeal({chain(3)}, {{4}}), InvalidObjectError);
    CHECK_THROWS_AS(TreeProductIdeal({chain(3), chain(3)}, {{1}}), InvalidObjectError);
    const TreeProductIdeal ok({chain(3), chain(3)}, {{1, 1}, {1, 2}, {2, 1}});
    CHECK(ok.size() == 3);
}

TEST_CASE("weight tables") {
    CHECK_THROWS_AS(ShiftWeight(2, {{{0}, BigRat(1)}}), InvalidObjectError);
    CHECK_THROWS_AS(ShiftWeight(2, {{{0, -1}, BigRat(1)}}), InvalidObjectError);
    CHECK_THROWS_AS(ShiftWeight(2, {{{0, 0}, BigRat(-1)}}), InvalidObjectError);
    const ShiftWeight ones = ShiftWeight::ones_box(2, 1);
    CHECK(ones.at({0, 0}) == 1);
    CHECK(ones.at({1, 1}) == 1);
    CHECK(ones.at({2, 0}) == 0);
    const ShiftWeight axes = ShiftWeight::axes_box(2, 2, 1);
    CHECK(axes.at({2, 0}) == 1);
    CHECK(axes.at({1, 1}) == 0);
}

TEST_CASE("hook pairs specialize to diagram statistics") {
    const Partition shape({4, 3, 1});
    const TreeProductIdeal ideal = diagram_ideal(shape);
    const ShiftWeight axes = ShiftWeight::axes_box(2, 4, 1);
    const ShiftWeight ones = ShiftWeight::ones_box(2, 4);

    for (const Cell& c : shape.cells()) {
        const auto [h, hstar] = hook_pair(ideal, axes, {c.i, c.j});
        CHECK(h == BigRat(static_cast<long>(cell_stat(shape, CellStatKind::Hook, c.i, c.j))));
        CHECK(hstar ==
              BigRat(static_cast<long>(cell_stat(shape, CellStatKind::AntiHook, c.i, c.j))));
    }
    const auto [areas, anti_areas] = hook_multisets(ideal, ones);
    CHECK(areas == stat_multiset(shape, CellStatKind::Area));
    CHECK(anti_areas == stat_multiset(shape, CellStatKind::AntiArea));
}

TEST_CASE("hook pairs specialize to tree statistics") {
    const RootedTree tau = RootedTree::parse("0,1,1,1,2,3,5,5");
    std::vector<std::vector<int>> singles;
    for (int v = 1; v <= tau.size(); ++v)
        singles.push_back({v});
    const TreeProductIdeal ideal({pad_leaves(tau)}, std::move(singles));
    const ShiftWeight ones = ShiftWeight::ones_box(1, tau.size());
    const auto [h, hstar] = hook_multisets(ideal, ones);
    CHECK(h == tau.branch_sizes());
    CHECK(hstar == tau.distances());
}

TEST_CASE("hook pairs specialize to solid statistics") {
    const SolidPartition claw(CubeSet{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    std::vector<std::vector<int>> triples;
    for (const Cube& c : claw.cubes())
        triples.push_back({c.i, c.j, c.k});
    const TreeProductIdeal ideal({chain(3), chain(3), chain(3)}, std::move(triples));
    const struct {
        ShiftWeight weight;
        SolidStatKind kind;
    } cases[] = {
        {ShiftWeight::axes_box(3, 2, 1), SolidStatKind::RayHook},
        {ShiftWeight::axes_box(3, 2, 2), SolidStatKind::QuadrantHook},
        {ShiftWeight::ones_box(3, 2), SolidStatKind::Volume},
    };
    for (const auto& c : cases) {
        const auto got = hook_multisets(ideal, c.weight);
        const auto want = stat_multisets(claw, c.kind);
        CHECK(got.first == want.first);
        CHECK(got.second == want.second);
    }
}

TEST_CASE("singleton ideal and convention flip") {
    const TreeProductIdeal single({chain(2), chain(2)}, {{1, 1}});
    const ShiftWeight g(2, {{{0, 0}, BigRat(7, 2)}});
    const auto [h, hstar] = hook_pair(single, g, {1, 1});
    CHECK(h == BigRat(7, 2));
    CHECK(hstar == BigRat(7, 2));
    CHECK_THROWS_AS(hook_pair(single, g, {2, 1}), PreconditionError);

    // flipping the shift-direction convention swaps the two numbers
    const Partition shape({3, 1});
    const TreeProductIdeal ideal = diagram_ideal(shape);
    const ShiftWeight axes = ShiftWeight::axes_box(2, 3, 1);
    for (const Cell& c : shape.cells()) {
        const auto plain = hook_pair(ideal, axes, {c.i, c.j}, false);
        const auto flipped = hook_pair(ideal, axes, {c.i, c.j}, true);
        CHECK(plain.first == flipped.second);
        CHECK(plain.second == flipped.first);
    }
}

TEST_CASE("product shuffle specializes to the plane shuffle") {
    const Partition shape({3, 2});
    const TreeProductIdeal ideal = diagram_ideal(shape);
    const ProductShuffle s = shuffle_product(ideal, {{1, 3}, {2, 2}});
    REQUIRE(s.stages.size() == 3);
    const PlaneShuffle plane = shuffle_plane(shape, {{1, 3}, {2, 2}});
    auto as_elements = [](const CellSet& cells) {
        std::vector<std::vector<int>> out;
        for (const Cell& c : cells)
            out.push_back({c.i, c.j});
        return out;
    };
    CHECK(s.stages[1] == as_elements(plane.x_up));
    CHECK(s.stages[2] == as_elements(plane.y));
}

TEST_CASE("product shuffle specializes to the tree shuffle") {
    const RootedTree tau = RootedTree::parse("0,1,1,1,2,3,5,5");
    std::vector<std::vector<int>> singles;
    for (int v = 1; v <= tau.size(); ++v)
        singles.push_back({v});
    const TreeProductIdeal ideal({pad_leaves(tau)}, std::move(singles));
    const ProductShuffle s = shuffle_product(ideal, {{5}});
    REQUIRE(s.stages.size() == 2);
    CHECK(s.stages[1] == std::vector<std::vector<int>>{{1}});
    CHECK(shuffle_tree(tau, {5}) == std::vector<int>{1});
    CHECK(shuffle_product(ideal, {}).stages.back().empty());
}

TEST_CASE("random ideals keep the hook inequality, seeded trials") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<RootedTree> factors;
        for (int f = 0; f < 2; ++f) {
            const int n = rng.range(1, 5);
            std::vector<int> parent(static_cast<std::size_t>(n), 0);
            for (int v = 2; v <= n; ++v)
                parent[static_cast<std::size_t>(v - 1)] = rng.range(1, v - 1);
            factors.push_back(pad_leaves(RootedTree(std::move(parent))));
        }
        const TreeProductIdeal ideal = random_ideal(factors, rng.range(1, 12), rng, true);
        const ShiftWeight g = random_shift_weight(2, 2, 3, rng);
        const auto [h, hstar] = hook_multisets(ideal, g);
        CHECK(h.total() == hstar.total());
        CHECK(majorizes(h, hstar) == MajorizationVerdict::Majorizes);

        // shuffling any subset keeps hooks above anti-hooks
        const auto& elems = ideal.elements();
        std::vector<std::vector<int>> x;
        for (const auto& e : elems)
            if (rng.chance(1, 2))
                x.push_back(e);
        const ProductShuffle s = shuffle_product(ideal, x);
        REQUIRE(s.stages.back().size() == x.size());
        BigRat sum_hstar_x = 0, sum_h_y = 0;
        for (const auto& v : s.stages.front())
            sum_hstar_x += hook_pair(ideal, g, v).second;
        for (const auto& v : s.stages.back())
            sum_h_y += hook_pair(ideal, g, v).first;
        CHECK(sum_h_y >= sum_hstar_x);
    }
}
