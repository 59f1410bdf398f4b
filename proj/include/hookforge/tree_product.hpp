#ifndef HOOKFORGE_TREE_PRODUCT_HPP
#define HOOKFORGE_TREE_PRODUCT_HPP

#include <map>
#include <utility>
#include <vector>

#include "hookforge/multiset.hpp"
#include "hookforge/numeric.hpp"
#include "hookforge/trees.hpp"

namespace hookforge {

/// Nonnegative weights on d-dimensional shift vectors; unspecified
/// shifts weigh zero.
class ShiftWeight {
public:
    ShiftWeight(int dims, std::map<std::vector<int>, BigRat> table);

    int dims() const { return dims_; }
    BigRat at(const std::vector<int>& shift) const;
    const std::map<std::vector<int>, BigRat>& table() const { return table_; }

    // full box support {0..extent}^dims
    static ShiftWeight ones_box(int dims, int extent);
    // shifts with at most `nonzero_axes` nonzero components, within the box;
    // 1 axis in two dimensions gives hooks, 2 axes in three dimensions
    // give quadrant hooks
    static ShiftWeight axes_box(int dims, int extent, int nonzero_axes = 1);

private:
    int dims_ = 0;
    std::map<std::vector<int>, BigRat> table_;
};

/// Finite lower ideal in a product of rooted trees: each element picks
/// one vertex per factor, and replacing any coordinate by its parent
/// yields another element. The factor trees stand in for infinite ones,
/// so elements must stay off the factors' leaves (the truncation
/// boundary); pad the trees below their leaves when that bites.
class TreeProductIdeal {
public:
    TreeProductIdeal(std::vector<RootedTree> factors,
                     std::vector<std::vector<int>> elements);

    int dims() const { return static_cast<int>(factors_.size()); }
    int size() const { return static_cast<int>(elements_.size()); }
    const RootedTree& factor(int t) const { return factors_[static_cast<std::size_t>(t)]; }
    const std::vector<RootedTree>& factors() const { return factors_; }
    const std::vector<std::vector<int>>& elements() const { return elements_; }
    bool contains(const std::vector<int>& element) const;

private:
    std::vector<RootedTree> factors_;
    std::vector<std::vector<int>> elements_; // sorted by (distance vector, labels)
};

/// H(v)  = sum over elements w reachable from v by a descendant step of
///         shift m, weighted by g(m);
/// H*(v) = the same with v on the receiving end (w an ancestor tuple).
/// The shift of the pair (v,w) is the coordinatewise depth difference.
/// `flip_shift_sign` swaps the two readings of the shift direction and
/// is intended for experimentation only.
std::pair<BigRat, BigRat> hook_pair(const TreeProductIdeal& ideal, const ShiftWeight& g,
                                    const std::vector<int>& v,
                                    bool flip_shift_sign = false);

std::pair<Multiset, Multiset> hook_multisets(const TreeProductIdeal& ideal,
                                             const ShiftWeight& g,
                                             bool flip_shift_sign = false);

/// Factor-by-factor root-ward shuffling: stage t applies the tree
/// shuffle to the t-th coordinates within every fiber obtained by
/// fixing the other coordinates. Every stage stays inside the ideal.
struct ProductShuffle {
    std::vector<std::vector<std::vector<int>>> stages; // stages[0] = X, back() = Y
};
ProductShuffle shuffle_product(const TreeProductIdeal& ideal,
                               std::vector<std::vector<int>> x);

} // namespace hookforge

#endif
