#ifndef HOOKFORGE_TREES_HPP
#define HOOKFORGE_TREES_HPP

#include <string>
#include <vector>

#include "hookforge/multiset.hpp"
#include "hookforge/numeric.hpp"

namespace hookforge {

/// Finite rooted tree over vertices 1..n given by a parent array
/// (0 marks the root). Distances count vertices on the path to the
/// root inclusive, so d(root) = 1.
class RootedTree {
public:
    explicit RootedTree(std::vector<int> parent_of); // parent_of[v-1], 0 for root

    // "0,1,1,1,2,3,5,5"
    static RootedTree parse(const std::string& text);

    int size() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<int>& children(int v) const {
        return children_[static_cast<std::size_t>(v - 1)];
    }
    const std::vector<int>& parent_array() const { return parent_; }

    int branch_size(int v) const { return branch_[static_cast<std::size_t>(v - 1)]; }
    int distance(int v) const { return depth_[static_cast<std::size_t>(v - 1)]; }

    // v lies in the subtree rooted at u (u itself included)
    bool in_subtree(int v, int u) const {
        const auto iv = static_cast<std::size_t>(v - 1);
        const auto iu = static_cast<std::size_t>(u - 1);
        return tin_[iu] <= tin_[iv] && tout_[iv] <= tout_[iu];
    }

    Multiset branch_sizes() const;
    Multiset distances() const;
    bool is_root_path() const; // every vertex has at most one child
    bool is_leaf(int v) const { return children(v).empty(); }

    std::string to_text() const;

private:
    int n_ = 0;
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> branch_;
    std::vector<int> depth_;
    std::vector<int> tin_, tout_;
};

/// Count of labelings 1..n increasing away from the root:
/// n! over the product of branch sizes, an exact division.
BigInt it_count(const RootedTree& tree);

/// Root-ward compaction of a vertex subset: the subset element of
/// smallest distance (ties by label) moves to the root, the rest are
/// shuffled recursively inside the branches that contain them.
/// Preserves |X| and satisfies sum of distances over the result
/// <= sum of branch sizes over the input.
std::vector<int> shuffle_tree(const RootedTree& tree, std::vector<int> x);

} // namespace hookforge

#endif
