#include <doctest.h>

#include "hookforge/enumerate.hpp"
#include "hookforge/errors.hpp"
#include "hookforge/young.hpp"
#include "oracles.hpp"

using namespace hookforge;

TEST_CASE("partition parsing and invariants") {
    CHECK(Partition::parse("4,3,1").parts() == std::vector<int>{4, 3, 1});
    CHECK(Partition::parse("").size() == 0);
    CHECK(Partition::parse(" 5 , 2 ").parts() == std::vector<int>{5, 2});
    CHECK_THROWS_AS(Partition::parse("3,4"), InvalidObjectError);
    CHECK_THROWS_AS(Partition::parse("3,0"), InvalidObjectError);
    CHECK_THROWS_AS(Partition::parse("3,x"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,"), ParseError);
}

TEST_CASE("conjugation") {
    CHECK(Partition({4, 3, 1}).conjugate().parts() == std::vector<int>{3, 2, 2, 1});
    CHECK(Partition({5}).conjugate().parts() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Partition({3, 3}).conjugate().parts() == std::vector<int>{2, 2, 2});
    for (int n = 0; n <= 9; ++n)
        for (const Partition& shape : partitions_of(n))
            CHECK(shape.conjugate().conjugate() == shape);
}

TEST_CASE("cell statistics at pinned cells") {
    const Partition big({6, 6, 5, 4, 1});
    CHECK(cell_stat(big, CellStatKind::Hook, 2, 3) == 6);
    CHECK(cell_stat(big, CellStatKind::AntiHook, 2, 3) == 4);

    const Partition shape({4, 3, 1});
    CHECK(cell_stat(shape, CellStatKind::Hook, 1, 1) == 6);
    CHECK(cell_stat(shape, CellStatKind::Area, 1, 1) == 8);
    CHECK(cell_stat(shape, CellStatKind::AntiArea, 1, 1) == 1);
    CHECK(cell_stat(shape, CellStatKind::Arm, 1, 1) == 3);
    CHECK(cell_stat(shape, CellStatKind::Leg, 1, 1) == 2);
    CHECK(cell_stat(shape, CellStatKind::AntiArm, 2, 3) == 3);
    CHECK(cell_stat(shape, CellStatKind::AntiLeg, 2, 3) == 2);
    // anti-arm + leg
    CHECK(cell_stat(shape, CellStatKind::SemiHook, 2, 1) == 1 + 1);
    CHECK_THROWS_AS(cell_stat(shape, CellStatKind::Hook, 2, 4), PreconditionError);
    CHECK_THROWS_AS(cell_stat(shape, CellStatKind::Hook, 0, 1), PreconditionError);

    // hook = arm + leg + 1 and anti-hook = i + j - 1 everywhere
    for (const Cell& c : big.cells()) {
        CHECK(cell_stat(big, CellStatKind::Hook, c.i, c.j) ==
              cell_stat(big, CellStatKind::Arm, c.i, c.j) +
                  cell_stat(big, CellStatKind::Leg, c.i, c.j) + 1);
        CHECK(cell_stat(big, CellStatKind::AntiHook, c.i, c.j) == c.i + c.j - 1);
    }
}

TEST_CASE("statistic multisets and products") {
    const Partition shape({4, 3, 1});
    const Multiset hooks = stat_multiset(shape, CellStatKind::Hook);
    CHECK(hooks == Multiset::of_integers({6, 4, 3, 1, 4, 2, 1, 1}));
    CHECK(hooks.product() == 576);
    const Multiset anti = stat_multiset(shape, CellStatKind::AntiHook);
    CHECK(anti == Multiset::of_integers({1, 2, 3, 4, 2, 3, 4, 3}));
    CHECK(anti.product() == 1728);

    const Partition small({2, 1});
    CHECK(stat_multiset(small, CellStatKind::Area) == Multiset::of_integers({3, 1, 1}));
    CHECK(stat_multiset(small, CellStatKind::AntiArea) == Multiset::of_integers({1, 2, 2}));
    CHECK(stat_multiset(Partition(), CellStatKind::Hook).empty());
}

TEST_CASE("tableau counts against the brute-force filler") {
    CHECK(syt_count(Partition({4, 3, 1})) == 70);
    CHECK(syt_count(Partition({7})) == 1);
    CHECK(syt_count(Partition({2, 2})) ==
          BigInt(static_cast<long>(testing::syt_count_brute(Partition({2, 2})))));
    CHECK(syt_count(Partition({2, 2})) == 2);
    CHECK(syt_count(Partition()) == 1);
    for (int n = 0; n <= 7; ++n)
        for (const Partition& shape : partitions_of(n))
            CHECK(syt_count(shape) ==
                  BigInt(static_cast<long>(testing::syt_count_brute(shape))));
}

TEST_CASE("weighted statistics generalize hooks and areas") {
    const Partition shape({4, 3, 1});
    const auto [axes_psi, axes_star] = weighted_stat_multisets(shape, WeightFunction::axes());
    CHECK(axes_psi == stat_multiset(shape, CellStatKind::Hook));
    CHECK(axes_star == stat_multiset(shape, CellStatKind::AntiHook));

    const Partition small({2, 1});
    const auto [ones_psi, ones_star] = weighted_stat_multisets(small, WeightFunction::ones());
    CHECK(ones_psi == Multiset::of_integers({3, 1, 1}));
    CHECK(ones_star == Multiset::of_integers({1, 2, 2}));

    const auto [zero_psi, zero_star] =
        weighted_stat_multisets(shape, WeightFunction::from_table({}));
    CHECK(zero_psi == Multiset::of_integers({0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(zero_star == zero_psi);

    CHECK_THROWS_AS(WeightFunction::from_table({{{0, 0}, BigRat(-1)}}), InvalidObjectError);
    CHECK_THROWS_AS(WeightFunction::from_table({{{-1, 0}, BigRat(1)}}), InvalidObjectError);
}

TEST_CASE("plane shuffle") {
    SUBCASE("single cell slides to the corner") {
        const PlaneShuffle s = shuffle_plane(Partition({2, 1}), {{2, 1}});
        CHECK(s.x_up == CellSet{{1, 1}});
        CHECK(s.y == CellSet{{1, 1}});
    }
    SUBCASE("the full diagram is fixed") {
        const Partition shape({4, 3, 3, 2});
        const PlaneShuffle s = shuffle_plane(shape, shape.cells());
        CHECK(s.y == [&] { CellSet c = shape.cells(); std::sort(c.begin(), c.end()); return c; }());
    }
    SUBCASE("hand-simulated two-push example") {
        const PlaneShuffle s = shuffle_plane(Partition({3, 2}), {{1, 3}, {2, 2}});
        CHECK(s.x_up == CellSet{{1, 2}, {1, 3}});
        CHECK(s.y == CellSet{{1, 1}, {1, 2}});
    }
    CHECK_THROWS_AS(shuffle_plane(Partition({2, 1}), {{2, 2}}), PreconditionError);
    CHECK_THROWS_AS(shuffle_plane(Partition({2, 1}), {{1, 1}, {1, 1}}), PreconditionError);
}

TEST_CASE("step inequalities") {
    SUBCASE("single low cell") {
        const StepReport r = verify_step_inequalities(Partition({2, 1}), {{2, 1}});
        CHECK(r.hooks_y == 3);
        CHECK(r.anti_hooks_x == 2);
        CHECK(r.all_ok());
    }
    SUBCASE("whole diagram gives hook-sum equality") {
        const Partition shape({4, 3, 1});
        const StepReport r = verify_step_inequalities(shape, shape.cells());
        CHECK(r.hooks_y == 22);
        CHECK(r.anti_hooks_x == 22);
        CHECK(r.all_ok());
    }
    SUBCASE("empty subset is vacuously fine") {
        const StepReport r = verify_step_inequalities(Partition({5, 2}), {});
        CHECK(r.all_ok());
        CHECK(r.hooks_y == 0);
        CHECK(r.anti_hooks_x == 0);
    }
    SUBCASE("exhaustive over small diagrams, with idempotence") {
        for (int n = 0; n <= 8; ++n) {
            for (const Partition& shape : partitions_of(n)) {
                const CellSet cells = shape.cells();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    CellSet x;
                    for (int b = 0; b < n; ++b)
                        if (mask >> b & 1)
                            x.push_back(cells[static_cast<std::size_t>(b)]);
                    const StepReport r = verify_step_inequalities(shape, x);
                    CHECK(r.all_ok());
                    CHECK(r.shuffle.y.size() == x.size());
                    const PlaneShuffle again = shuffle_plane(shape, r.shuffle.y);
                    CHECK(again.x_up == r.shuffle.y);
                    CHECK(again.y == r.shuffle.y);
                }
            }
        }
    }
}

TEST_CASE("rectangles") {
    CHECK(Partition({3, 3, 3}).is_rectangle());
    CHECK_FALSE(Partition({4, 3, 1}).is_rectangle());
    CHECK(Partition({5}).is_rectangle());
    CHECK(Partition().is_rectangle());
}

TEST_CASE("hook sums and majorization over all small diagrams") {
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            const Multiset hooks = stat_multiset(shape, CellStatKind::Hook);
            const Multiset anti = stat_multiset(shape, CellStatKind::AntiHook);
            CHECK(hooks.total() == anti.total());
            CHECK(majorizes(hooks, anti) == MajorizationVerdict::Majorizes);
            CHECK((hooks == anti) == shape.is_rectangle());
            const Multiset area = stat_multiset(shape, CellStatKind::Area);
            const Multiset anti_area = stat_multiset(shape, CellStatKind::AntiArea);
            CHECK(majorizes(area, anti_area) == MajorizationVerdict::Majorizes);
            CHECK(area.product() <= anti_area.product());
        }
    }
}

TEST_CASE("weighted majorization on seeded random weights") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const WeightFunction g = random_plane_weight(rng.range(0, 4), 3, rng);
        for (int n = 0; n <= 8; ++n) {
            for (const Partition& shape : partitions_of(n)) {
                const auto [psi, psi_star] = weighted_stat_multisets(shape, g);
                CHECK(majorizes(psi, psi_star) == MajorizationVerdict::Majorizes);
            }
        }
    }
}
