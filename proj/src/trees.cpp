#include "hookforge/trees.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hookforge/errors.hpp"

namespace hookforge {

RootedTree::RootedTree(std::vector<int> parent_of) : parent_(std::move(parent_of)) {
    n_ = static_cast<int>(parent_.size());
    if (n_ == 0)
        throw InvalidObjectError("tree needs at least one vertex");
    children_.assign(static_cast<std::size_t>(n_), {});
    for (int v = 1; v <= n_; ++v) {
        const int p = parent_[static_cast<std::size_t>(v - 1)];
        if (p == 0) {
            if (root_ != 0)
                throw InvalidObjectError("multiple roots: " + std::to_string(root_) +
                                         " and " + std::to_string(v));
            root_ = v;
        } else if (p < 1 || p > n_) {
            throw InvalidObjectError("parent of " + std::to_string(v) + " out of range");
        } else if (p == v) {
            throw InvalidObjectError("vertex " + std::to_string(v) + " is its own parent");
        } else {
            children_[static_cast<std::size_t>(p - 1)].push_back(v);
        }
    }
    if (root_ == 0)
        throw InvalidObjectError("no root (exactly one parent entry must be 0)");

    depth_.assign(static_cast<std::size_t>(n_), 0);
    branch_.assign(static_cast<std::size_t>(n_), 0);
    tin_.assign(static_cast<std::size_t>(n_), -1);
    tout_.assign(static_cast<std::size_t>(n_), -1);

    // iterative DFS; also detects cycles (unreached vertices)
    int clock = 0;
    std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
    depth_[static_cast<std::size_t>(root_ - 1)] = 1;
    tin_[static_cast<std::size_t>(root_ - 1)] = clock++;
    while (!stack.empty()) {
        auto& [v, next_child] = stack.back();
        const auto iv = static_cast<std::size_t>(v - 1);
        if (next_child < children_[iv].size()) {
            const int c = children_[iv][next_child++];
            const auto ic = static_cast<std::size_t>(c - 1);
            depth_[ic] = depth_[iv] + 1;
            tin_[ic] = clock++;
            stack.emplace_back(c, 0);
        } else {
            tout_[iv] = clock++;
            branch_[iv] = 1;
            for (int c : children_[iv])
                branch_[iv] += branch_[static_cast<std::size_t>(c - 1)];
            stack.pop_back();
        }
    }
    for (int v = 1; v <= n_; ++v)
        if (tin_[static_cast<std::size_t>(v - 1)] < 0)
            throw InvalidObjectError("vertex " + std::to_string(v) +
                                     " does not reach the root (cycle in parent array)");
}

RootedTree RootedTree::parse(const std::string& text) {
    std::vector<int> parents;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos)
            end = text.size();
        std::string token = text.substr(pos, end - pos);
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        try {
            std::size_t used = 0;
            parents.push_back(std::stoi(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("bad parent entry '" + token + "' at position " +
                             std::to_string(pos));
        }
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return RootedTree(std::move(parents));
}

std::string RootedTree::to_text() const {
    std::ostringstream out;
    for (int v = 1; v <= n_; ++v) {
        if (v > 1)
            out << ',';
        out << parent_[static_cast<std::size_t>(v - 1)];
    }
    return out.str();
}

Multiset RootedTree::branch_sizes() const {
    std::vector<long long> v(branch_.begin(), branch_.end());
    return Multiset::of_integers(v);
}

Multiset RootedTree::distances() const {
    std::vector<long long> v(depth_.begin(), depth_.end());
    return Multiset::of_integers(v);
}

bool RootedTree::is_root_path() const {
    for (const auto& ch : children_)
        if (ch.size() > 1)
            return false;
    return true;
}

BigInt it_count(const RootedTree& tree) {
    BigInt branches = 1;
    for (int v = 1; v <= tree.size(); ++v)
        branches *= tree.branch_size(v);
    const BigInt fact = factorial(static_cast<unsigned>(tree.size()));
    BigInt count, rem;
    mpz_fdiv_qr(count.get_mpz_t(), rem.get_mpz_t(), fact.get_mpz_t(), branches.get_mpz_t());
    if (rem != 0)
        throw Error("branch product does not divide n! for " + tree.to_text());
    return count;
}

namespace {

// invariant: every element of x lies in the subtree rooted at r
void shuffle_into(const RootedTree& tree, int r, std::vector<int>& x,
                  std::vector<int>& out) {
    if (x.empty())
        return;
    auto least = std::min_element(x.begin(), x.end(), [&](int a, int b) {
        return std::pair(tree.distance(a), a) < std::pair(tree.distance(b), b);
    });
    x.erase(least);
    out.push_back(r);
    for (int c : tree.children(r)) {
        std::vector<int> in_branch;
        for (int v : x)
            if (tree.in_subtree(v, c))
                in_branch.push_back(v);
        shuffle_into(tree, c, in_branch, out);
    }
}

} // namespace

std::vector<int> shuffle_tree(const RootedTree& tree, std::vector<int> x) {
    std::sort(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > tree.size())
            throw PreconditionError("vertex " + std::to_string(x[i]) + " outside the tree");
        if (i > 0 && x[i] == x[i - 1])
            throw PreconditionError("duplicate vertex " + std::to_string(x[i]));
    }
    std::vector<int> y;
    y.reserve(x.size());
    shuffle_into(tree, tree.root(), x, y);
    std::sort(y.begin(), y.end());
    return y;
}

} // namespace hookforge
