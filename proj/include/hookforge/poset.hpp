#ifndef HOOKFORGE_POSET_HPP
#define HOOKFORGE_POSET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hookforge/multiset.hpp"
#include "hookforge/numeric.hpp"

namespace hookforge {

class Partition;
class RootedTree;
class SolidPartition;
class TreeProductIdeal;

/// Finite poset on elements 1..n, built from an acyclic list of cover
/// relations; the order is their transitive closure.
class FinitePoset {
public:
    explicit FinitePoset(int n, std::vector<std::pair<int, int>> covers = {});

    // first line n, then one "a < b" line per cover
    static FinitePoset parse(const std::string& text);

    static FinitePoset from_partition(const Partition& shape); // cell poset
    static FinitePoset from_tree(const RootedTree& tree);      // ordered away from the root
    static FinitePoset from_solid(const SolidPartition& solid);
    static FinitePoset from_ideal(const TreeProductIdeal& ideal);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool less_eq(int a, int b) const {
        return leq_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    }

    /// br(x) = number of elements above or equal to x.
    Multiset upper_ideal_sizes() const;

    std::string to_text() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<bool>> leq_;
};

/// Default element cap for exact linear-extension counting; the
/// HOOKFORGE_LIMIT environment variable overrides it.
int le_count_limit();

/// Exact number of linear extensions, memoized over downsets keyed by
/// their maximal-element antichain. Throws LimitError beyond `limit`.
BigInt le_count(const FinitePoset& poset, int limit);
BigInt le_count(const FinitePoset& poset);

/// n! over the product of upper-ideal sizes: a lower bound for le_count,
/// with equality on forests ordered away from the roots.
BigRat hp_bound(const FinitePoset& poset);

} // namespace hookforge

#endif
