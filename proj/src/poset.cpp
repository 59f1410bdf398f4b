#include "hookforge/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hookforge/errors.hpp"
#include "hookforge/solid.hpp"
#include "hookforge/tree_product.hpp"
#include "hookforge/trees.hpp"
#include "hookforge/young.hpp"

namespace hookforge {

FinitePoset::FinitePoset(int n, std::vector<std::pair<int, int>> covers)
    : n_(n), covers_(std::move(covers)) {
    if (n_ < 0)
        throw InvalidObjectError("poset size must be nonnegative");
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n_));
    for (const auto& [a, b] : covers_) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw InvalidObjectError("cover " + std::to_string(a) + " < " +
                                     std::to_string(b) + " out of range");
        if (a == b)
            throw InvalidObjectError("reflexive cover " + std::to_string(a));
        above[static_cast<std::size_t>(a - 1)].push_back(b);
    }
    leq_.assign(static_cast<std::size_t>(n_),
                std::vector<bool>(static_cast<std::size_t>(n_), false));
    for (int s = 1; s <= n_; ++s) {
        // DFS closure from s
        std::vector<int> stack{s};
        auto& row = leq_[static_cast<std::size_t>(s - 1)];
        row[static_cast<std::size_t>(s - 1)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : above[static_cast<std::size_t>(v - 1)]) {
                if (!row[static_cast<std::size_t>(w - 1)]) {
                    row[static_cast<std::size_t>(w - 1)] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b)
            if (less_eq(a, b) && less_eq(b, a))
                throw InvalidObjectError("covers contain a cycle through " +
                                         std::to_string(a) + " and " + std::to_string(b));
}

FinitePoset FinitePoset::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw ParseError("line 1: expected the element count");
            std::string rest;
            if (ls >> rest)
                throw ParseError("line 1: trailing content '" + rest + "'");
            continue;
        }
        int a, b;
        std::string op;
        if (!(ls >> a))
            continue; // blank line
        if (!(ls >> op >> b) || op != "<")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'a < b'");
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(lineno) + ": trailing content");
        covers.emplace_back(a, b);
    }
    if (n < 0)
        throw ParseError("empty poset description");
    return FinitePoset(n, std::move(covers));
}

FinitePoset FinitePoset::from_partition(const Partition& shape) {
    const CellSet cells = shape.cells();
    std::map<Cell, int> index;
    for (std::size_t k = 0; k < cells.size(); ++k)
        index[cells[k]] = static_cast<int>(k) + 1;
    std::vector<std::pair<int, int>> covers;
    for (const Cell& c : cells) {
        if (shape.contains(c.i, c.j + 1))
            covers.emplace_back(index[c], index[{c.i, c.j + 1}]);
        if (shape.contains(c.i + 1, c.j))
            covers.emplace_back(index[c], index[{c.i + 1, c.j}]);
    }
    return FinitePoset(shape.size(), std::move(covers));
}

FinitePoset FinitePoset::from_tree(const RootedTree& tree) {
    std::vector<std::pair<int, int>> covers;
    for (int v = 1; v <= tree.size(); ++v)
        if (v != tree.root())
            covers.emplace_back(tree.parent(v), v);
    return FinitePoset(tree.size(), std::move(covers));
}

FinitePoset FinitePoset::from_solid(const SolidPartition& solid) {
    const auto& cubes = solid.cubes();
    std::map<Cube, int> index;
    for (std::size_t k = 0; k < cubes.size(); ++k)
        index[cubes[k]] = static_cast<int>(k) + 1;
    std::vector<std::pair<int, int>> covers;
    for (const Cube& c : cubes) {
        for (const Cube next : {Cube{c.i + 1, c.j, c.k}, Cube{c.i, c.j + 1, c.k},
                                Cube{c.i, c.j, c.k + 1}}) {
            if (solid.contains(next.i, next.j, next.k))
                covers.emplace_back(index[c], index[next]);
        }
    }
    return FinitePoset(solid.size(), std::move(covers));
}

FinitePoset FinitePoset::from_ideal(const TreeProductIdeal& ideal) {
    const auto& elems = ideal.elements();
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < elems.size(); ++k)
        index[elems[k]] = static_cast<int>(k) + 1;
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : elems) {
        for (std::size_t t = 0; t < e.size(); ++t) {
            for (int child : ideal.factor(static_cast<int>(t)).children(e[t])) {
                std::vector<int> up = e;
                up[t] = child;
                auto it = index.find(up);
                if (it != index.end())
                    covers.emplace_back(index[e], it->second);
            }
        }
    }
    return FinitePoset(static_cast<int>(elems.size()), std::move(covers));
}

Multiset FinitePoset::upper_ideal_sizes() const {
    std::vector<long long> sizes;
    sizes.reserve(static_cast<std::size_t>(n_));
    for (int x = 1; x <= n_; ++x) {
        long long br = 0;
        for (int y = 1; y <= n_; ++y)
            if (less_eq(x, y))
                ++br;
        sizes.push_back(br);
    }
    return Multiset::of_integers(sizes);
}

std::string FinitePoset::to_text() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (const auto& [a, b] : covers_)
        out << a << " < " << b << '\n';
    return out.str();
}

int le_count_limit() {
    if (const char* env = std::getenv("HOOKFORGE_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    return 20;
}

BigInt le_count(const FinitePoset& poset, int limit) {
    const int n = poset.size();
    if (n > limit)
        throw LimitError("linear-extension counting limited to " + std::to_string(limit) +
                         " elements, got " + std::to_string(n));
    if (n > 62)
        throw LimitError("linear-extension counting supports at most 62 elements");
    if (n == 0)
        return 1;

    std::vector<std::uint64_t> strictly_above(static_cast<std::size_t>(n), 0);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b && poset.less_eq(a, b))
                strictly_above[static_cast<std::size_t>(a - 1)] |= std::uint64_t{1} << (b - 1);

    // downsets are in bijection with their maximal antichains; key by the latter
    std::unordered_map<std::uint64_t, BigInt> memo;
    auto count = [&](auto&& self, std::uint64_t downset) -> BigInt {
        if (downset == 0)
            return 1;
        std::uint64_t antichain = 0;
        for (int v = 0; v < n; ++v)
            if ((downset >> v & 1) && (strictly_above[static_cast<std::size_t>(v)] & downset) == 0)
                antichain |= std::uint64_t{1} << v;
        if (auto it = memo.find(antichain); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (int v = 0; v < n; ++v)
            if (antichain >> v & 1)
                total += self(self, downset & ~(std::uint64_t{1} << v));
        memo.emplace(antichain, total);
        return total;
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return count(count, all);
}

BigInt le_count(const FinitePoset& poset) { return le_count(poset, le_count_limit()); }

BigRat hp_bound(const FinitePoset& poset) {
    BigInt denom = 1;
    const Multiset sizes = poset.upper_ideal_sizes();
    for (const BigRat& v : sizes.values())
        denom *= v.get_num();
    BigRat bound(factorial(static_cast<unsigned>(poset.size())), denom);
    bound.canonicalize();
    return bound;
}

} // namespace hookforge
