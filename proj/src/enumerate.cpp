#include "hookforge/enumerate.hpp"

#include <algorithm>
#include <set>

#include "hookforge/errors.hpp"

namespace hookforge {

namespace {

void extend_partition(std::vector<int>& parts, int remaining, int cap,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        parts.push_back(next);
        extend_partition(parts, remaining - next, next, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw PreconditionError("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> parts;
    extend_partition(parts, n, n, out);
    if (n == 0)
        out.emplace_back();
    return out;
}

namespace {

RootedTree tree_from_levels(const std::vector<int>& levels) {
    // parent of vertex t is the nearest earlier vertex one level up
    const int n = static_cast<int>(levels.size());
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int t = 1; t < n; ++t) {
        for (int s = t - 1; s >= 0; --s) {
            if (levels[static_cast<std::size_t>(s)] ==
                levels[static_cast<std::size_t>(t)] - 1) {
                parent[static_cast<std::size_t>(t)] = s + 1;
                break;
            }
        }
    }
    return RootedTree(std::move(parent));
}

} // namespace

std::vector<RootedTree> rooted_trees(int n) {
    if (n < 1)
        throw PreconditionError("rooted_trees needs n >= 1");
    std::vector<RootedTree> out;
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        levels[static_cast<std::size_t>(t)] = t + 1; // the path
    for (;;) {
        out.push_back(tree_from_levels(levels));
        // successor in lexicographically decreasing level-sequence order
        int p = -1;
        for (int t = n - 1; t >= 0; --t) {
            if (levels[static_cast<std::size_t>(t)] > 2) {
                p = t;
                break;
            }
        }
        if (p < 0)
            break;
        int q = -1;
        for (int t = p - 1; t >= 0; --t) {
            if (levels[static_cast<std::size_t>(t)] ==
                levels[static_cast<std::size_t>(p)] - 1) {
                q = t;
                break;
            }
        }
        for (int t = p; t < n; ++t)
            levels[static_cast<std::size_t>(t)] =
                levels[static_cast<std::size_t>(t - (p - q))];
    }
    return out;
}

std::vector<SolidPartition> solid_partitions_of(int n) {
    if (n < 0)
        throw PreconditionError("solid_partitions_of needs n >= 0");
    if (n == 0)
        return {SolidPartition()};
    // grow ideals one addable cube at a time, deduplicating whole levels
    std::set<CubeSet> level{{Cube{1, 1, 1}}};
    for (int sz = 1; sz < n; ++sz) {
        std::set<CubeSet> next;
        for (const CubeSet& ideal : level) {
            std::set<Cube> candidates;
            for (const Cube& c : ideal) {
                candidates.insert({c.i + 1, c.j, c.k});
                candidates.insert({c.i, c.j + 1, c.k});
                candidates.insert({c.i, c.j, c.k + 1});
            }
            for (const Cube& cand : candidates) {
                if (std::binary_search(ideal.begin(), ideal.end(), cand))
                    continue;
                bool addable = true;
                for (const Cube below : {Cube{cand.i - 1, cand.j, cand.k},
                                         Cube{cand.i, cand.j - 1, cand.k},
                                         Cube{cand.i, cand.j, cand.k - 1}}) {
                    if (below.i >= 1 && below.j >= 1 && below.k >= 1 &&
                        !std::binary_search(ideal.begin(), ideal.end(), below)) {
                        addable = false;
                        break;
                    }
                }
                if (!addable)
                    continue;
                CubeSet grown = ideal;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), cand), cand);
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<SolidPartition> out;
    out.reserve(level.size());
    for (const CubeSet& ideal : level)
        out.emplace_back(ideal);
    return out;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0)
        throw PreconditionError("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    for (;;) {
        const std::uint64_t raw = engine_();
        if (raw < limit)
            return raw % n;
    }
}

int Rng::range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(int numer, int denom) {
    return below(static_cast<std::uint64_t>(denom)) < static_cast<std::uint64_t>(numer);
}

TreeProductIdeal random_ideal(const std::vector<RootedTree>& factors, int size,
                              Rng& rng, bool allow_smaller) {
    if (size < 1)
        throw PreconditionError("ideal size must be >= 1");
    std::vector<int> roots;
    roots.reserve(factors.size());
    for (const RootedTree& t : factors)
        roots.push_back(t.root());

    std::set<std::vector<int>> elements{roots};
    while (static_cast<int>(elements.size()) < size) {
        std::set<std::vector<int>> addable;
        for (const auto& e : elements) {
            for (std::size_t t = 0; t < factors.size(); ++t) {
                for (int child : factors[t].children(e[t])) {
                    if (factors[t].is_leaf(child))
                        continue; // keep off the truncation boundary
                    std::vector<int> up = e;
                    up[t] = child;
                    if (elements.count(up))
                        continue;
                    bool closed = true;
                    for (std::size_t s = 0; s < factors.size() && closed; ++s) {
                        if (up[s] == factors[s].root())
                            continue;
                        std::vector<int> down = up;
                        down[s] = factors[s].parent(up[s]);
                        closed = elements.count(down) != 0;
                    }
                    if (closed)
                        addable.insert(std::move(up));
                }
            }
        }
        if (addable.empty()) {
            if (allow_smaller)
                break;
            throw PreconditionError("ideal of size " + std::to_string(size) +
                                    " is infeasible for these factors");
        }
        auto it = addable.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(rng.below(addable.size())));
        elements.insert(*it);
    }
    return TreeProductIdeal(factors, {elements.begin(), elements.end()});
}

FinitePoset random_poset(int n, int density_percent, Rng& rng) {
    if (n < 0)
        throw PreconditionError("poset size must be >= 0");
    if (density_percent < 0 || density_percent > 100)
        throw PreconditionError("density is a percentage");
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v + 1;
    for (int v = n - 1; v > 0; --v)
        std::swap(order[static_cast<std::size_t>(v)],
                  order[rng.below(static_cast<std::uint64_t>(v + 1))]);

    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance(density_percent, 100))
                rel[static_cast<std::size_t>(order[static_cast<std::size_t>(a)] - 1)]
                   [static_cast<std::size_t>(order[static_cast<std::size_t>(b)] - 1)] = true;
    // transitive closure, then keep covers only
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] &&
                    rel[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)])
                    rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                continue;
            bool is_cover = true;
            for (int m = 0; m < n && is_cover; ++m)
                if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] &&
                    rel[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)])
                    is_cover = false;
            if (is_cover)
                covers.emplace_back(a + 1, b + 1);
        }
    }
    return FinitePoset(n, std::move(covers));
}

ShiftWeight random_shift_weight(int dims, int extent, int max_value, Rng& rng) {
    std::map<std::vector<int>, BigRat> table;
    std::vector<int> shift(static_cast<std::size_t>(dims), 0);
    for (;;) {
        const int v = rng.range(0, max_value);
        if (v > 0)
            table[shift] = v;
        int t = dims - 1;
        while (t >= 0 && shift[static_cast<std::size_t>(t)] == extent)
            shift[static_cast<std::size_t>(t--)] = 0;
        if (t < 0)
            break;
        ++shift[static_cast<std::size_t>(t)];
    }
    return ShiftWeight(dims, std::move(table));
}

WeightFunction random_plane_weight(int extent, int max_value, Rng& rng) {
    const ShiftWeight w = random_shift_weight(2, extent, max_value, rng);
    std::map<std::pair<int, int>, BigRat> table;
    for (const auto& [shift, value] : w.table())
        table[{shift[0], shift[1]}] = value;
    return WeightFunction::from_table(std::move(table));
}

} // namespace hookforge
