// Brute-force oracles used only by the tests. Each one recomputes a
// quantity along a path independent of the library implementation it
// checks: permutation filtering instead of downset DP, direct fillings
// instead of product formulas, matrix enumeration instead of ideal
// growth.
#ifndef HOOKFORGE_TEST_ORACLES_HPP
#define HOOKFORGE_TEST_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hookforge/poset.hpp"
#include "hookforge/trees.hpp"
#include "hookforge/young.hpp"

namespace hookforge::testing {

// count order-preserving bijections by filtering all n! permutations
inline long long le_count_by_permutations(const FinitePoset& poset) {
    const int n = poset.size();
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0); // rank[x-1] = position of x
    long long count = 0;
    do {
        bool order_preserving = true;
        for (int a = 1; a <= n && order_preserving; ++a)
            for (int b = 1; b <= n && order_preserving; ++b)
                if (a != b && poset.less_eq(a, b) &&
                    rank[static_cast<std::size_t>(a - 1)] >
                        rank[static_cast<std::size_t>(b - 1)])
                    order_preserving = false;
        count += order_preserving;
    } while (std::next_permutation(rank.begin(), rank.end()));
    return count;
}

// count standard fillings directly: place 1..n, each time into a cell
// whose left and upper neighbors are already filled
inline long long syt_count_brute(const Partition& shape) {
    const CellSet cells = shape.cells();
    std::set<Cell> filled;
    auto place = [&](auto&& self) -> long long {
        if (filled.size() == cells.size())
            return 1;
        long long total = 0;
        for (const Cell& c : cells) {
            if (filled.count(c))
                continue;
            const bool left_ok = c.j == 1 || filled.count({c.i, c.j - 1});
            const bool up_ok = c.i == 1 || filled.count({c.i - 1, c.j});
            if (left_ok && up_ok) {
                filled.insert(c);
                total += self(self);
                filled.erase(c);
            }
        }
        return total;
    };
    return place(place);
}

// count labelings increasing away from the root by placing 1..n onto
// vertices whose parent is already labeled
inline long long it_count_brute(const RootedTree& tree) {
    std::vector<bool> labeled(static_cast<std::size_t>(tree.size()), false);
    int placed = 0;
    auto place = [&](auto&& self) -> long long {
        if (placed == tree.size())
            return 1;
        long long total = 0;
        for (int v = 1; v <= tree.size(); ++v) {
            if (labeled[static_cast<std::size_t>(v - 1)])
                continue;
            if (v != tree.root() && !labeled[static_cast<std::size_t>(tree.parent(v) - 1)])
                continue;
            labeled[static_cast<std::size_t>(v - 1)] = true;
            ++placed;
            total += self(self);
            labeled[static_cast<std::size_t>(v - 1)] = false;
            --placed;
        }
        return total;
    };
    return place(place);
}

// canonical form of a rooted tree: children's forms sorted descending
inline std::vector<int> canonical_levels(const RootedTree& tree, int v, int depth) {
    std::vector<std::vector<int>> child_forms;
    for (int c : tree.children(v))
        child_forms.push_back(canonical_levels(tree, c, depth + 1));
    std::sort(child_forms.begin(), child_forms.end(), std::greater<>());
    std::vector<int> form{depth};
    for (const auto& f : child_forms)
        form.insert(form.end(), f.begin(), f.end());
    return form;
}

// distinct rooted-tree shapes on n vertices found by canonicalizing
// every parent array with root 1
inline std::set<std::vector<int>> tree_shapes_brute(int n) {
    std::set<std::vector<int>> shapes;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    auto assign = [&](auto&& self, int v) -> void {
        if (v > n) {
            try {
                shapes.insert(canonical_levels(RootedTree(parent), 1, 1));
            } catch (const Error&) {
                // cyclic parent array, not a tree
            }
            return;
        }
        for (int p = 1; p <= n; ++p) {
            if (p == v)
                continue;
            parent[static_cast<std::size_t>(v - 1)] = p;
            self(self, v + 1);
        }
    };
    if (n == 1)
        return {{1}};
    assign(assign, 2);
    return shapes;
}

// number of height matrices with weakly decreasing rows and columns
// summing to n: an independent count of grid lower ideals
inline long long height_matrix_count(int n) {
    // recurse row by row; each row is weakly decreasing and bounded
    // entrywise by the previous row
    auto count_rows = [&](auto&& self, std::vector<int> prev, int remaining) -> long long {
        if (remaining == 0)
            return 1;
        long long total = 0;
        std::vector<std::vector<int>> rows;
        std::vector<int> row;
        auto build = [&](auto&& grow, int col, int max_here, int budget) -> void {
            if (budget >= 0 && !row.empty())
                rows.push_back(row);
            if (budget == 0)
                return;
            const int cap = std::min(max_here, budget);
            // rows may not outgrow the one above them
            const int bound =
                col < static_cast<int>(prev.size()) ? std::min(cap, prev[static_cast<std::size_t>(col)]) : 0;
            for (int v = 1; v <= bound; ++v) {
                row.push_back(v);
                grow(grow, col + 1, v, budget - v);
                row.pop_back();
            }
        };
        build(build, 0, remaining, remaining);
        for (const auto& r : rows)
            total += self(self, r, remaining - std::accumulate(r.begin(), r.end(), 0));
        return total;
    };
    std::vector<int> unbounded(static_cast<std::size_t>(n), n);
    return count_rows(count_rows, unbounded, n);
}

} // namespace hookforge::testing

#endif
