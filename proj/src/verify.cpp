#include "hookforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "hookforge/enumerate.hpp"
#include "hookforge/errors.hpp"
#include "hookforge/poset.hpp"
#include "hookforge/solid.hpp"
#include "hookforge/tree_product.hpp"
#include "hookforge/trees.hpp"
#include "hookforge/young.hpp"

namespace hookforge {

namespace {

using Verdict = MajorizationVerdict;

// run `check` over every item; failures are merged in item order, so the
// result does not depend on the worker count
template <typename T>
void sweep(SweepResult& result, const std::vector<T>& items, int jobs,
           const std::function<std::optional<Counterexample>(const T&)>& check) {
    result.instances += static_cast<long long>(items.size());
    jobs = std::max(1, jobs);
    if (jobs == 1 || items.size() < 32) {
        for (const T& item : items)
            if (auto cx = check(item))
                result.counterexamples.push_back(std::move(*cx));
        return;
    }
    std::vector<std::vector<Counterexample>> found(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (;;) {
                const std::size_t idx = cursor.fetch_add(1);
                if (idx >= items.size())
                    return;
                if (auto cx = check(items[idx])) {
                    cx->detail += " [item " + std::to_string(idx) + "]";
                    found[static_cast<std::size_t>(w)].push_back(std::move(*cx));
                }
            }
        });
    }
    for (auto& t : workers)
        t.join();
    std::vector<Counterexample> merged;
    for (auto& part : found)
        merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
        return std::tie(a.instance, a.detail) < std::tie(b.instance, b.detail);
    });
    result.counterexamples.insert(result.counterexamples.end(), merged.begin(),
                                  merged.end());
}

std::vector<Partition> partitions_up_to(int max_n) {
    std::vector<Partition> all;
    for (int n = 0; n <= max_n; ++n) {
        auto level = partitions_of(n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

std::vector<SolidPartition> solids_up_to(int max_cubes) {
    std::vector<SolidPartition> all;
    for (int n = 1; n <= max_cubes; ++n) {
        auto level = solid_partitions_of(n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

std::vector<RootedTree> trees_up_to(int max_n) {
    std::vector<RootedTree> all;
    for (int n = 1; n <= max_n; ++n) {
        auto level = rooted_trees(n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

Counterexample fail(std::string instance, std::string detail) {
    return Counterexample{std::move(instance), std::move(detail)};
}

// both hook sums count pairs of cells in the same row or column with the
// second one weakly to the right / below
long long hook_pair_count(const Partition& shape) {
    const CellSet cells = shape.cells();
    long long pairs = 0;
    for (const Cell& a : cells)
        for (const Cell& b : cells)
            if ((a.i == b.i && a.j <= b.j) || (a.j == b.j && a.i <= b.i))
                ++pairs;
    return pairs;
}

SweepResult verify_golden() {
    SweepResult r;
    r.theorem = "golden";
    r.instances = 2;
    const Partition shape({4, 3, 1});
    if (syt_count(shape) != 70)
        r.counterexamples.push_back(fail("4,3,1", "tableau count is not 70"));
    const Multiset hooks = stat_multiset(shape, CellStatKind::Hook);
    const Multiset anti = stat_multiset(shape, CellStatKind::AntiHook);
    if (hooks.product() != 576)
        r.counterexamples.push_back(fail("4,3,1", "hook product is not 576"));
    if (anti.product() != 1728)
        r.counterexamples.push_back(fail("4,3,1", "anti-hook product is not 1728"));

    const RootedTree tau = RootedTree::parse("0,1,1,1,2,3,5,5");
    if (it_count(tau) != 210)
        r.counterexamples.push_back(fail(tau.to_text(), "increasing-tree count is not 210"));
    if (tau.branch_sizes().product() != 192)
        r.counterexamples.push_back(fail(tau.to_text(), "branch product is not 192"));
    if (tau.distances().product() != 1152)
        r.counterexamples.push_back(fail(tau.to_text(), "distance product is not 1152"));
    r.notes.push_back("syt(4,3,1)=70, products 576/1728; it(tau)=210, products 192/1152");
    return r;
}

SweepResult verify_young_sum(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "young-sum";
    const int max_n = cfg.max_n.value_or(18);
    sweep<Partition>(r, partitions_up_to(max_n), cfg.jobs,
                     [](const Partition& shape) -> std::optional<Counterexample> {
        const BigRat sum_h = stat_multiset(shape, CellStatKind::Hook).total();
        const BigRat sum_a = stat_multiset(shape, CellStatKind::AntiHook).total();
        const long long pairs = hook_pair_count(shape);
        if (sum_h != sum_a)
            return fail(shape.to_text(), "hook and anti-hook sums differ");
        if (sum_h != BigRat(static_cast<long>(pairs)))
            return fail(shape.to_text(), "hook sum disagrees with the pair-count oracle");
        return std::nullopt;
    });
    r.notes.push_back("hook sums match anti-hook sums and the pair-count oracle, n <= " +
                      std::to_string(max_n));
    return r;
}

SweepResult verify_young_hook(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "young-hook";
    const int max_n = cfg.max_n.value_or(14);
    std::atomic<long long> equality_cases{0};
    sweep<Partition>(r, partitions_up_to(max_n), cfg.jobs,
                     [&](const Partition& shape) -> std::optional<Counterexample> {
        const Multiset hooks = stat_multiset(shape, CellStatKind::Hook);
        const Multiset anti = stat_multiset(shape, CellStatKind::AntiHook);
        if (majorizes(hooks, anti) != Verdict::Majorizes)
            return fail(shape.to_text(), "hooks do not majorize anti-hooks");
        const bool sorted_equal = hooks == anti;
        if (sorted_equal)
            ++equality_cases;
        if (sorted_equal != shape.is_rectangle())
            return fail(shape.to_text(), "multiset equality does not match rectangularity");
        if (!karamata_holds(hooks, anti, ConvexFunction::square()))
            return fail(shape.to_text(), "square Karamata consequence fails");
        if (shape.size() > 0 && !karamata_holds(hooks, anti, ConvexFunction::neg_log()))
            return fail(shape.to_text(), "hook product exceeds anti-hook product");
        const bool square_equal = hooks.power_sum(2) == anti.power_sum(2);
        if (square_equal != sorted_equal)
            return fail(shape.to_text(), "square-sum equality does not match multiset equality");
        return std::nullopt;
    });
    r.notes.push_back("equality exactly on rectangles (" +
                      std::to_string(equality_cases.load()) + " of " +
                      std::to_string(r.instances) + " shapes)");
    return r;
}

SweepResult verify_young_area(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "young-area";
    const int max_n = cfg.max_n.value_or(14);
    sweep<Partition>(r, partitions_up_to(max_n), cfg.jobs,
                     [](const Partition& shape) -> std::optional<Counterexample> {
        const Multiset area = stat_multiset(shape, CellStatKind::Area);
        const Multiset anti = stat_multiset(shape, CellStatKind::AntiArea);
        if (majorizes(area, anti) != Verdict::Majorizes)
            return fail(shape.to_text(), "areas do not majorize anti-areas");
        if (area.product() > anti.product())
            return fail(shape.to_text(), "area product exceeds anti-area product");
        const Multiset hooks = stat_multiset(shape, CellStatKind::Hook);
        const Multiset ahooks = stat_multiset(shape, CellStatKind::AntiHook);
        if (hooks.power_sum(2) < ahooks.power_sum(2))
            return fail(shape.to_text(), "hook square sum below anti-hook square sum");
        return std::nullopt;
    });
    r.notes.push_back("area majorization, product bound and hook variance bound, n <= " +
                      std::to_string(max_n));
    return r;
}

SweepResult verify_young_weighted(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "young-weighted";
    const int max_n = cfg.max_n.value_or(12);
    const int trials = cfg.trials.value_or(50);
    Rng rng(cfg.seed);
    std::vector<WeightFunction> weights{WeightFunction::ones(), WeightFunction::axes()};
    while (static_cast<int>(weights.size()) < trials)
        weights.push_back(random_plane_weight(rng.range(0, 5), 4, rng));

    const auto shapes = partitions_up_to(max_n);
    struct Case { const Partition* shape; const WeightFunction* g; int trial; };
    std::vector<Case> cases;
    cases.reserve(shapes.size() * weights.size());
    for (const Partition& shape : shapes)
        for (std::size_t t = 0; t < weights.size(); ++t)
            cases.push_back({&shape, &weights[t], static_cast<int>(t)});

    sweep<Case>(r, cases, cfg.jobs, [](const Case& c) -> std::optional<Counterexample> {
        const auto [psi, psi_star] = weighted_stat_multisets(*c.shape, *c.g);
        if (majorizes(psi, psi_star) != Verdict::Majorizes)
            return fail(c.shape->to_text(),
                        "weighted multiset fails majorization for weight #" +
                            std::to_string(c.trial) + " (" + c.g->name() + ")");
        return std::nullopt;
    });
    r.notes.push_back(std::to_string(weights.size()) + " weight functions (ones, axes, " +
                      std::to_string(weights.size() - 2) + " random) on all shapes, n <= " +
                      std::to_string(max_n));
    return r;
}

SweepResult verify_young_shuffle(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "young-shuffle";
    const int max_n = cfg.max_n.value_or(10);
    long long subsets = 0;
    for (const Partition& shape : partitions_up_to(max_n)) {
        const CellSet cells = shape.cells();
        const int n = shape.size();
        std::vector<std::uint64_t> masks(std::size_t{1} << n);
        for (std::uint64_t m = 0; m < masks.size(); ++m)
            masks[m] = m;
        SweepResult local;
        local.theorem = r.theorem;
        sweep<std::uint64_t>(local, masks, cfg.jobs,
                             [&](const std::uint64_t& mask) -> std::optional<Counterexample> {
            CellSet x;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1)
                    x.push_back(cells[static_cast<std::size_t>(b)]);
            const StepReport report = verify_step_inequalities(shape, x);
            if (report.shuffle.y.size() != x.size())
                return fail(shape.to_text(), "shuffle changed the subset size");
            if (!report.all_ok())
                return fail(shape.to_text(),
                            "step inequality fails for subset mask " + std::to_string(mask));
            const PlaneShuffle again = shuffle_plane(shape, report.shuffle.y);
            if (again.x_up != report.shuffle.y || again.y != report.shuffle.y)
                return fail(shape.to_text(),
                            "shuffle output is not a fixed point, mask " + std::to_string(mask));
            return std::nullopt;
        });
        subsets += local.instances;
        r.counterexamples.insert(r.counterexamples.end(), local.counterexamples.begin(),
                                 local.counterexamples.end());
        r.instances += 1;
    }
    r.notes.push_back(std::to_string(subsets) + " subsets over all shapes, n <= " +
                      std::to_string(max_n));
    return r;
}

SweepResult verify_tree_branch(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "tree-branch";
    const int max_n = cfg.max_n.value_or(9);
    std::atomic<long long> equality_cases{0};
    sweep<RootedTree>(r, trees_up_to(max_n), cfg.jobs,
                      [&](const RootedTree& tree) -> std::optional<Counterexample> {
        const Multiset branches = tree.branch_sizes();
        const Multiset dists = tree.distances();
        if (branches.total() != dists.total())
            return fail(tree.to_text(), "branch and distance sums differ");
        if (majorizes(branches, dists) != Verdict::Majorizes)
            return fail(tree.to_text(), "branches do not majorize distances");
        const bool sorted_equal = branches == dists;
        if (sorted_equal)
            ++equality_cases;
        if (sorted_equal != tree.is_root_path())
            return fail(tree.to_text(), "multiset equality does not match root-path shape");
        if (branches.product() > dists.product())
            return fail(tree.to_text(), "branch product exceeds distance product");
        if (branches.power_sum(2) < dists.power_sum(2))
            return fail(tree.to_text(), "branch square sum below distance square sum");
        // the two product-formula bounds, n!/prod b >= n!/prod d
        const BigInt fact = factorial(static_cast<unsigned>(tree.size()));
        if (BigRat(fact) / branches.product() < BigRat(fact) / dists.product())
            return fail(tree.to_text(), "formula count below the distance bound");
        if (!karamata_holds(branches, dists, ConvexFunction::neg_log()))
            return fail(tree.to_text(), "neg-log Karamata consequence fails");
        return std::nullopt;
    });
    r.notes.push_back("equality exactly on root-paths (" +
                      std::to_string(equality_cases.load()) + " of " +
                      std::to_string(r.instances) + " trees)");
    return r;
}

SweepResult verify_tree_shuffle(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "tree-shuffle";
    const int max_n = cfg.max_n.value_or(7);
    long long subsets = 0;
    for (const RootedTree& tree : trees_up_to(max_n)) {
        const int n = tree.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> x;
            long long sum_b = 0;
            for (int v = 1; v <= n; ++v)
                if (mask >> (v - 1) & 1) {
                    x.push_back(v);
                    sum_b += tree.branch_size(v);
                }
            const std::vector<int> y = shuffle_tree(tree, x);
            long long sum_d = 0;
            for (int v : y)
                sum_d += tree.distance(v);
            ++subsets;
            if (y.size() != x.size()) {
                r.counterexamples.push_back(fail(tree.to_text(), "shuffle changed subset size"));
            } else if (sum_d > sum_b) {
                r.counterexamples.push_back(
                    fail(tree.to_text(), "distance sum " + std::to_string(sum_d) +
                                             " exceeds branch sum " + std::to_string(sum_b) +
                                             " for mask " + std::to_string(mask)));
            }
        }
        r.instances += 1;
    }
    r.notes.push_back(std::to_string(subsets) + " subsets over all trees, n <= " +
                      std::to_string(max_n));
    return r;
}

SweepResult verify_poset_bound(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "poset-bound";
    const int tree_n = cfg.max_n.value_or(8);
    const int young_n = std::min(cfg.max_n.value_or(9), 9);
    const int solid_n = std::min(cfg.max_n.value_or(8), 8);
    const int random_count = cfg.trials.value_or(500);

    struct Case {
        FinitePoset poset;
        std::string label;
        bool expect_equality;
    };
    std::vector<Case> cases;
    for (const RootedTree& tree : trees_up_to(tree_n))
        cases.push_back({FinitePoset::from_tree(tree), "tree " + tree.to_text(), true});
    for (const Partition& shape : partitions_up_to(young_n))
        cases.push_back({FinitePoset::from_partition(shape),
                         "partition " + shape.to_text(), shape.rows() <= 1});
    for (const SolidPartition& solid : solids_up_to(solid_n))
        cases.push_back({FinitePoset::from_solid(solid), "solid " + solid.to_text(), false});
    Rng rng(cfg.seed);
    for (int t = 0; t < random_count; ++t) {
        const int n = rng.range(1, 9);
        const int density = rng.range(0, 100);
        cases.push_back({random_poset(n, density, rng),
                         "random poset, trial " + std::to_string(t), false});
    }

    sweep<Case>(r, cases, cfg.jobs, [](const Case& c) -> std::optional<Counterexample> {
        const BigInt exact = le_count(c.poset, 64);
        const BigRat bound = hp_bound(c.poset);
        if (BigRat(exact) < bound)
            return fail(c.label, "linear-extension count below the product bound");
        if (c.expect_equality && BigRat(exact) != bound)
            return fail(c.label, "bound is not tight on a forest-like poset");
        return std::nullopt;
    });
    r.notes.push_back("trees <= " + std::to_string(tree_n) + ", diagrams <= " +
                      std::to_string(young_n) + ", solids <= " + std::to_string(solid_n) +
                      ", " + std::to_string(random_count) + " random posets (n <= 9)");
    return r;
}

SweepResult verify_solid_stats(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "solid-stats";
    const int max_cubes = cfg.max_n.value_or(9);
    sweep<SolidPartition>(r, solids_up_to(max_cubes), cfg.jobs,
                          [](const SolidPartition& solid) -> std::optional<Counterexample> {
        const auto& cubes = solid.cubes();
        for (const SolidStatKind kind :
             {SolidStatKind::RayHook, SolidStatKind::QuadrantHook, SolidStatKind::Volume}) {
            const auto [plain, star] = stat_multisets(solid, kind);
            // double counting: one predicate evaluated over ordered pairs
            long long pairs = 0;
            for (const Cube& a : cubes) {
                for (const Cube& b : cubes) {
                    bool related = false;
                    const bool gi = b.i >= a.i, gj = b.j >= a.j, gk = b.k >= a.k;
                    switch (kind) {
                    case SolidStatKind::RayHook:
                        related = (a.j == b.j && a.k == b.k && gi) ||
                                  (a.i == b.i && a.k == b.k && gj) ||
                                  (a.i == b.i && a.j == b.j && gk);
                        break;
                    case SolidStatKind::QuadrantHook:
                        related = (a.k == b.k && gi && gj) || (a.j == b.j && gi && gk) ||
                                  (a.i == b.i && gj && gk);
                        break;
                    case SolidStatKind::Volume:
                        related = gi && gj && gk;
                        break;
                    }
                    if (related)
                        ++pairs;
                }
            }
            const std::string name = to_string(kind);
            if (plain.total() != BigRat(static_cast<long>(pairs)) ||
                star.total() != BigRat(static_cast<long>(pairs)))
                return fail(solid.to_text(), name + " sums disagree with the pair oracle");
            if (majorizes(plain, star) != Verdict::Majorizes)
                return fail(solid.to_text(), name + " fails majorization");
            if (plain.product() > star.product())
                return fail(solid.to_text(), name + " product exceeds the starred product");
            if (!karamata_holds(plain, star, ConvexFunction::square()))
                return fail(solid.to_text(), name + " fails the square consequence");
        }
        return std::nullopt;
    });
    r.notes.push_back("R, Q and V majorization with sum and product checks, cubes <= " +
                      std::to_string(max_cubes));
    return r;
}

SweepResult verify_solid_shuffle(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "solid-shuffle";
    const int max_cubes = cfg.max_n.value_or(7);
    long long subsets = 0;
    for (const SolidPartition& solid : solids_up_to(max_cubes)) {
        const auto& cubes = solid.cubes();
        const int n = solid.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            CubeSet x;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1)
                    x.push_back(cubes[static_cast<std::size_t>(b)]);
            const SpaceShuffle shuffle = shuffle_space(solid, x);
            ++subsets;
            if (shuffle.y.size() != x.size())
                r.counterexamples.push_back(fail(solid.to_text(), "shuffle changed subset size"));
            else if (!shuffle.chain_ok)
                r.counterexamples.push_back(
                    fail(solid.to_text(),
                         "hook chain is not monotone for mask " + std::to_string(mask)));
        }
        r.instances += 1;
    }
    r.notes.push_back(std::to_string(subsets) + " subsets over all solids, cubes <= " +
                      std::to_string(max_cubes));
    return r;
}

SweepResult verify_solid_bounds(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "solid-bounds";
    const int max_cubes = cfg.max_n.value_or(8);
    sweep<SolidPartition>(r, solids_up_to(max_cubes), cfg.jobs,
                          [](const SolidPartition& solid) -> std::optional<Counterexample> {
        const LeBoundPair bounds = le_bound_pair(solid, 64);
        if (!bounds.exact)
            return fail(solid.to_text(), "exact count unexpectedly unavailable");
        if (!bounds.ordering_ok)
            return fail(solid.to_text(), "exact >= n!/prod V >= n!/prod V* fails");
        return std::nullopt;
    });

    // the four-cube claw pins the bound pair exactly
    const SolidPartition claw(CubeSet{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    const LeBoundPair claw_bounds = le_bound_pair(claw, 64);
    r.instances += 1;
    if (!claw_bounds.exact || *claw_bounds.exact != 6 || claw_bounds.bound_v != 6 ||
        claw_bounds.bound_vstar != 3)
        r.counterexamples.push_back(fail(claw.to_text(), "claw bounds are not (6, 6, 3)"));
    r.notes.push_back("bound ordering on all solids, cubes <= " + std::to_string(max_cubes) +
                      "; claw pinned to (6, 6, 3)");
    return r;
}

RootedTree random_attachment_tree(int n, Rng& rng) {
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int v = 2; v <= n; ++v)
        parent[static_cast<std::size_t>(v - 1)] = rng.range(1, v - 1);
    return RootedTree(std::move(parent));
}

// append one child below every leaf so ideals can use the whole tree
RootedTree pad_leaves(const RootedTree& tree) {
    std::vector<int> parent = tree.parent_array();
    for (int v = 1; v <= tree.size(); ++v)
        if (tree.is_leaf(v))
            parent.push_back(v);
    return RootedTree(std::move(parent));
}

RootedTree chain(int length) {
    std::vector<int> parent(static_cast<std::size_t>(length));
    for (int v = 1; v <= length; ++v)
        parent[static_cast<std::size_t>(v - 1)] = v - 1;
    return RootedTree(std::move(parent));
}

BigRat pair_sum_oracle(const TreeProductIdeal& ideal, const ShiftWeight& g) {
    BigRat total = 0;
    std::vector<int> shift(static_cast<std::size_t>(ideal.dims()));
    for (const auto& v : ideal.elements()) {
        for (const auto& w : ideal.elements()) {
            bool below = true;
            for (int t = 0; t < ideal.dims() && below; ++t)
                below = ideal.factor(t).in_subtree(w[static_cast<std::size_t>(t)],
                                                   v[static_cast<std::size_t>(t)]);
            if (!below)
                continue;
            for (int t = 0; t < ideal.dims(); ++t) {
                const auto ut = static_cast<std::size_t>(t);
                shift[ut] =
                    ideal.factor(t).distance(w[ut]) - ideal.factor(t).distance(v[ut]);
            }
            total += g.at(shift);
        }
    }
    return total;
}

std::optional<Counterexample> check_ideal(const TreeProductIdeal& ideal,
                                          const ShiftWeight& g, const std::string& label) {
    const auto [h, hstar] = hook_multisets(ideal, g);
    if (majorizes(h, hstar) != Verdict::Majorizes)
        return fail(label, "hook multiset fails majorization");
    const BigRat oracle = pair_sum_oracle(ideal, g);
    if (h.total() != oracle || hstar.total() != oracle)
        return fail(label, "hook sums disagree with the ordered-pair oracle");
    if (h.all_positive() && !karamata_holds(h, hstar, ConvexFunction::neg_log()))
        return fail(label, "hook product exceeds anti-hook product");
    return std::nullopt;
}

TreeProductIdeal diagram_as_ideal(const Partition& shape) {
    std::vector<std::vector<int>> elements;
    for (const Cell& c : shape.cells())
        elements.push_back({c.i, c.j});
    return TreeProductIdeal({chain(shape.rows() + 1), chain(shape.cols() + 1)},
                            std::move(elements));
}

std::optional<Counterexample> check_specializations() {
    // diagram hooks and areas through two chains
    const Partition shape({4, 3, 1});
    const TreeProductIdeal as_ideal = diagram_as_ideal(shape);
    const auto hook_pairized =
        hook_multisets(as_ideal, ShiftWeight::axes_box(2, std::max(shape.rows(), shape.cols())));
    if (hook_pairized.first != stat_multiset(shape, CellStatKind::Hook) ||
        hook_pairized.second != stat_multiset(shape, CellStatKind::AntiHook))
        return fail("4,3,1", "chain-product axes weights do not reproduce hooks");
    const auto areas =
        hook_multisets(as_ideal, ShiftWeight::ones_box(2, std::max(shape.rows(), shape.cols())));
    if (areas.first != stat_multiset(shape, CellStatKind::Area) ||
        areas.second != stat_multiset(shape, CellStatKind::AntiArea))
        return fail("4,3,1", "chain-product ones weights do not reproduce areas");

    // branches and distances through a single factor
    const RootedTree tau = RootedTree::parse("0,1,1,1,2,3,5,5");
    std::vector<std::vector<int>> singles;
    for (int v = 1; v <= tau.size(); ++v)
        singles.push_back({v});
    const TreeProductIdeal tree_ideal({pad_leaves(tau)}, std::move(singles));
    const auto tree_stats = hook_multisets(tree_ideal, ShiftWeight::ones_box(1, tau.size()));
    if (tree_stats.first != tau.branch_sizes() || tree_stats.second != tau.distances())
        return fail(tau.to_text(), "single-factor ones weights do not reproduce branches");

    // solid R, Q, V through three chains
    const SolidPartition claw(CubeSet{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    std::vector<std::vector<int>> triples;
    for (const Cube& c : claw.cubes())
        triples.push_back({c.i, c.j, c.k});
    const TreeProductIdeal claw_ideal({chain(3), chain(3), chain(3)}, std::move(triples));
    const struct {
        ShiftWeight weight;
        SolidStatKind kind;
    } solid_cases[] = {
        {ShiftWeight::axes_box(3, 2, 1), SolidStatKind::RayHook},
        {ShiftWeight::axes_box(3, 2, 2), SolidStatKind::QuadrantHook},
        {ShiftWeight::ones_box(3, 2), SolidStatKind::Volume},
    };
    for (const auto& sc : solid_cases) {
        const auto got = hook_multisets(claw_ideal, sc.weight);
        const auto want = stat_multisets(claw, sc.kind);
        if (got.first != want.first || got.second != want.second)
            return fail(claw.to_text(), std::string("triple-chain weights do not reproduce ") +
                                            to_string(sc.kind));
    }
    return std::nullopt;
}

SweepResult verify_product_hooks(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "product-hooks";
    const int trials = cfg.trials.value_or(200);
    Rng rng(cfg.seed);

    struct Case {
        TreeProductIdeal ideal;
        ShiftWeight weight;
        std::string label;
    };
    std::vector<Case> cases;
    cases.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        std::vector<RootedTree> factors{pad_leaves(random_attachment_tree(rng.range(1, 5), rng)),
                                        pad_leaves(random_attachment_tree(rng.range(1, 5), rng))};
        TreeProductIdeal ideal =
            random_ideal(factors, rng.range(1, 12), rng, /*allow_smaller=*/true);
        ShiftWeight weight = random_shift_weight(2, 2, 3, rng);
        cases.push_back({std::move(ideal), std::move(weight),
                         "random product ideal, trial " + std::to_string(t)});
    }
    sweep<Case>(r, cases, cfg.jobs, [](const Case& c) -> std::optional<Counterexample> {
        return check_ideal(c.ideal, c.weight, c.label);
    });

    r.instances += 1;
    if (auto cx = check_specializations())
        r.counterexamples.push_back(std::move(*cx));
    r.notes.push_back(std::to_string(trials) +
                      " random (factors, ideal, weight) trials plus exact specialization "
                      "identities to diagrams, trees and solids");
    return r;
}

SweepResult verify_oracle_equiv(const SweepConfig& cfg) {
    SweepResult r;
    r.theorem = "oracle-equiv";
    const int young_n = cfg.max_n.value_or(9);
    const int tree_n = std::min(cfg.max_n.value_or(8), 8);

    sweep<Partition>(r, partitions_up_to(young_n), cfg.jobs,
                     [](const Partition& shape) -> std::optional<Counterexample> {
        if (syt_count(shape) != le_count(FinitePoset::from_partition(shape), 64))
            return fail(shape.to_text(), "formula count differs from linear extensions");
        return std::nullopt;
    });
    sweep<RootedTree>(r, trees_up_to(tree_n), cfg.jobs,
                      [](const RootedTree& tree) -> std::optional<Counterexample> {
        if (it_count(tree) != le_count(FinitePoset::from_tree(tree), 64))
            return fail(tree.to_text(), "formula count differs from linear extensions");
        return std::nullopt;
    });

    // the weighted double-counting oracle over the standard random trials
    SweepConfig product_cfg = cfg;
    product_cfg.max_n.reset();
    const SweepResult products = verify_product_hooks(product_cfg);
    r.instances += products.instances;
    r.counterexamples.insert(r.counterexamples.end(), products.counterexamples.begin(),
                             products.counterexamples.end());
    r.notes.push_back("formula counts match exact linear-extension counts; weighted sums "
                      "match the ordered-pair oracle on every product trial");
    return r;
}

} // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{
        "golden",        "young-sum",    "young-hook",   "young-area",
        "young-weighted", "young-shuffle", "tree-branch",  "tree-shuffle",
        "poset-bound",   "solid-stats",  "solid-shuffle", "solid-bounds",
        "product-hooks", "oracle-equiv",
    };
    return ids;
}

SweepResult run_theorem(const std::string& id, const SweepConfig& config) {
    if (id == "golden") return verify_golden();
    if (id == "young-sum") return verify_young_sum(config);
    if (id == "young-hook") return verify_young_hook(config);
    if (id == "young-area") return verify_young_area(config);
    if (id == "young-weighted") return verify_young_weighted(config);
    if (id == "young-shuffle") return verify_young_shuffle(config);
    if (id == "tree-branch") return verify_tree_branch(config);
    if (id == "tree-shuffle") return verify_tree_shuffle(config);
    if (id == "poset-bound") return verify_poset_bound(config);
    if (id == "solid-stats") return verify_solid_stats(config);
    if (id == "solid-shuffle") return verify_solid_shuffle(config);
    if (id == "solid-bounds") return verify_solid_bounds(config);
    if (id == "product-hooks") return verify_product_hooks(config);
    if (id == "oracle-equiv") return verify_oracle_equiv(config);
    throw ParseError("unknown theorem id '" + id + "'");
}

std::vector<SweepResult> run_all(const SweepConfig& config) {
    std::vector<SweepResult> out;
    out.reserve(theorem_ids().size());
    for (const std::string& id : theorem_ids())
        out.push_back(run_theorem(id, config));
    return out;
}

} // namespace hookforge
