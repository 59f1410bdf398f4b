#include "hookforge/tree_product.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "hookforge/errors.hpp"

namespace hookforge {

ShiftWeight::ShiftWeight(int dims, std::map<std::vector<int>, BigRat> table)
    : dims_(dims), table_(std::move(table)) {
    if (dims_ < 1)
        throw InvalidObjectError("shift weight needs at least one dimension");
    for (const auto& [shift, w] : table_) {
        if (static_cast<int>(shift.size()) != dims_)
            throw InvalidObjectError("shift vector has wrong dimension");
        for (int m : shift)
            if (m < 0)
                throw InvalidObjectError("shift vector has a negative component");
        if (sgn(w) < 0)
            throw InvalidObjectError("weight value is negative: " + to_string(w));
    }
}

BigRat ShiftWeight::at(const std::vector<int>& shift) const {
    auto it = table_.find(shift);
    return it == table_.end() ? BigRat(0) : it->second;
}

namespace {

void fill_box(std::map<std::vector<int>, BigRat>& table, std::vector<int>& shift,
              int dims, int extent, int max_nonzero) {
    if (static_cast<int>(shift.size()) == dims) {
        int nonzero = 0;
        for (int m : shift)
            nonzero += m != 0;
        if (nonzero <= max_nonzero)
            table[shift] = 1;
        return;
    }
    for (int m = 0; m <= extent; ++m) {
        shift.push_back(m);
        fill_box(table, shift, dims, extent, max_nonzero);
        shift.pop_back();
    }
}

} // namespace

ShiftWeight ShiftWeight::ones_box(int dims, int extent) {
    std::map<std::vector<int>, BigRat> table;
    std::vector<int> shift;
    fill_box(table, shift, dims, extent, dims);
    return ShiftWeight(dims, std::move(table));
}

ShiftWeight ShiftWeight::axes_box(int dims, int extent, int nonzero_axes) {
    std::map<std::vector<int>, BigRat> table;
    std::vector<int> shift;
    fill_box(table, shift, dims, extent, nonzero_axes);
    return ShiftWeight(dims, std::move(table));
}

TreeProductIdeal::TreeProductIdeal(std::vector<RootedTree> factors,
                                   std::vector<std::vector<int>> elements)
    : factors_(std::move(factors)), elements_(std::move(elements)) {
    if (factors_.empty())
        throw InvalidObjectError("tree product needs at least one factor");

    auto sort_key = [&](const std::vector<int>& e) {
        std::vector<std::pair<int, int>> key;
        key.reserve(e.size());
        for (std::size_t t = 0; t < e.size(); ++t)
            key.emplace_back(factors_[t].distance(e[t]), e[t]);
        return key;
    };
    std::sort(elements_.begin(), elements_.end(),
              [&](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });

    std::set<std::vector<int>> present;
    for (const auto& e : elements_) {
        if (e.size() != factors_.size())
            throw InvalidObjectError("element arity does not match the factor count");
        for (std::size_t t = 0; t < e.size(); ++t) {
            const RootedTree& tree = factors_[t];
            if (e[t] < 1 || e[t] > tree.size())
                throw InvalidObjectError("element coordinate " + std::to_string(e[t]) +
                                         " is not a vertex of factor " + std::to_string(t + 1));
            if (tree.is_leaf(e[t]))
                throw InvalidObjectError(
                    "element touches the truncation boundary: vertex " +
                    std::to_string(e[t]) + " is a leaf of factor " + std::to_string(t + 1) +
                    "; extend the factor tree below it");
        }
        if (!present.insert(e).second)
            throw InvalidObjectError("duplicate element in ideal");
    }
    for (const auto& e : elements_) {
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] == factors_[t].root())
                continue;
            std::vector<int> down = e;
            down[t] = factors_[t].parent(e[t]);
            if (!present.count(down))
                throw InvalidObjectError(
                    "not a lower ideal: dropping coordinate " + std::to_string(t + 1) +
                    " of an element toward the root leaves the set");
        }
    }
}

bool TreeProductIdeal::contains(const std::vector<int>& element) const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [&](const auto& e) { return e == element; });
}

std::pair<BigRat, BigRat> hook_pair(const TreeProductIdeal& ideal, const ShiftWeight& g,
                                    const std::vector<int>& v, bool flip_shift_sign) {
    if (g.dims() != ideal.dims())
        throw PreconditionError("weight dimension does not match the ideal");
    if (!ideal.contains(v))
        throw PreconditionError("element is outside the ideal");

    BigRat down = 0, up = 0;
    std::vector<int> shift(static_cast<std::size_t>(ideal.dims()));
    for (const auto& w : ideal.elements()) {
        bool w_below_v = true; // every w_t in the subtree of v_t
        bool v_below_w = true;
        for (int t = 0; t < ideal.dims() && (w_below_v || v_below_w); ++t) {
            const auto ut = static_cast<std::size_t>(t);
            const RootedTree& tree = ideal.factor(t);
            w_below_v = w_below_v && tree.in_subtree(w[ut], v[ut]);
            v_below_w = v_below_w && tree.in_subtree(v[ut], w[ut]);
        }
        if (w_below_v) {
            for (int t = 0; t < ideal.dims(); ++t) {
                const auto ut = static_cast<std::size_t>(t);
                shift[ut] = ideal.factor(t).distance(w[ut]) - ideal.factor(t).distance(v[ut]);
            }
            down += g.at(shift);
        }
        if (v_below_w) {
            for (int t = 0; t < ideal.dims(); ++t) {
                const auto ut = static_cast<std::size_t>(t);
                shift[ut] = ideal.factor(t).distance(v[ut]) - ideal.factor(t).distance(w[ut]);
            }
            up += g.at(shift);
        }
    }
    if (flip_shift_sign)
        return {up, down};
    return {down, up};
}

std::pair<Multiset, Multiset> hook_multisets(const TreeProductIdeal& ideal,
                                             const ShiftWeight& g,
                                             bool flip_shift_sign) {
    std::vector<BigRat> plain, star;
    plain.reserve(ideal.elements().size());
    star.reserve(ideal.elements().size());
    for (const auto& v : ideal.elements()) {
        auto [h, hstar] = hook_pair(ideal, g, v, flip_shift_sign);
        plain.push_back(std::move(h));
        star.push_back(std::move(hstar));
    }
    return {Multiset(std::move(plain)), Multiset(std::move(star))};
}

namespace {

// root-ward shuffle of coordinate values within one downward-closed fiber
void shuffle_fiber(const RootedTree& tree, int r, std::vector<int> values,
                   const std::function<bool(int)>& in_fiber, std::vector<int>& out) {
    if (values.empty())
        return;
    auto least = std::min_element(values.begin(), values.end(), [&](int a, int b) {
        return std::pair(tree.distance(a), a) < std::pair(tree.distance(b), b);
    });
    values.erase(least);
    out.push_back(r);
    for (int c : tree.children(r)) {
        if (!in_fiber(c))
            continue;
        std::vector<int> in_branch;
        for (int v : values)
            if (tree.in_subtree(v, c))
                in_branch.push_back(v);
        shuffle_fiber(tree, c, std::move(in_branch), in_fiber, out);
    }
}

} // namespace

ProductShuffle shuffle_product(const TreeProductIdeal& ideal,
                               std::vector<std::vector<int>> x) {
    std::sort(x.begin(), x.end());
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (idx > 0 && x[idx] == x[idx - 1])
            throw PreconditionError("duplicate element in subset");
        if (!ideal.contains(x[idx]))
            throw PreconditionError("subset element is outside the ideal");
    }

    ProductShuffle out;
    out.stages.push_back(x);
    std::vector<std::vector<int>> current = std::move(x);
    for (int t = 0; t < ideal.dims(); ++t) {
        const auto ut = static_cast<std::size_t>(t);
        const RootedTree& tree = ideal.factor(t);
        std::map<std::vector<int>, std::vector<int>> fibers; // other coords -> t-coords
        for (const auto& e : current) {
            std::vector<int> rest = e;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(ut));
            fibers[rest].push_back(e[ut]);
        }
        std::vector<std::vector<int>> next;
        next.reserve(current.size());
        for (const auto& [rest, values] : fibers) {
            auto in_fiber = [&](int u) {
                std::vector<int> e = rest;
                e.insert(e.begin() + static_cast<std::ptrdiff_t>(ut), u);
                return ideal.contains(e);
            };
            std::vector<int> shuffled;
            shuffle_fiber(tree, tree.root(), values, in_fiber, shuffled);
            assert(shuffled.size() == values.size());
            for (int u : shuffled) {
                std::vector<int> e = rest;
                e.insert(e.begin() + static_cast<std::ptrdiff_t>(ut), u);
                assert(ideal.contains(e));
                next.push_back(std::move(e));
            }
        }
        std::sort(next.begin(), next.end());
        out.stages.push_back(next);
        current = std::move(next);
    }
    return out;
}

} // namespace hookforge
