#ifndef HOOKFORGE_MULTISET_HPP
#define HOOKFORGE_MULTISET_HPP

#include <cstddef>
#include <vector>

#include "hookforge/numeric.hpp"

namespace hookforge {

/// An unordered collection of nonnegative rationals, stored in descending
/// order. Duplicates keep their multiplicity; two multisets compare equal
/// iff their sorted value lists coincide.
class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<BigRat> values); // rejects negatives
    static Multiset of_integers(const std::vector<long long>& values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const std::vector<BigRat>& values() const { return values_; } // descending

    BigRat total() const;
    BigRat product() const;              // empty product is 1
    BigRat power_sum(unsigned k) const;  // sum of k-th powers

    // prefix[k] = sum of the k largest values, k = 0..size
    std::vector<BigRat> prefix_sums() const;

    bool all_positive() const;

    bool operator==(const Multiset& other) const { return values_ == other.values_; }

private:
    std::vector<BigRat> values_;
};

enum class MajorizationVerdict {
    Majorizes,
    EqualTotalButFails,
    TotalsDiffer, // sizes or totals disagree
};

const char* to_string(MajorizationVerdict v);

/// Majorization check by descending prefix sums, exact arithmetic.
/// Empty vs empty majorizes by convention.
MajorizationVerdict majorizes(const Multiset& a, const Multiset& b);

/// Strictly convex test functions for Karamata's inequality.
/// NegLog requires strictly positive values and is decided by comparing
/// the two products, never by evaluating logarithms.
struct ConvexFunction {
    enum class Kind { Square, NegLog, Power };
    Kind kind = Kind::Square;
    unsigned exponent = 2;

    static ConvexFunction square() { return {Kind::Square, 2}; }
    static ConvexFunction neg_log() { return {Kind::NegLog, 0}; }
    static ConvexFunction power(unsigned k); // requires k >= 2
};

/// Whether sum(phi(a_i)) >= sum(phi(b_i)). Requires majorizes(a,b) ==
/// Majorizes (throws PreconditionError otherwise, likewise for NegLog on
/// a zero value).
bool karamata_holds(const Multiset& a, const Multiset& b, const ConvexFunction& phi);

/// Literal subset-sum sufficient condition for majorization: for every
/// sub-multiset B' of b there is an equally sized A' of a with a sum at
/// least as large. Quantifies over all 2^n subsets of b, so it is an
/// oracle for small n only (throws LimitError when n > max_size).
bool subset_condition_verify(const Multiset& a, const Multiset& b,
                             std::size_t max_size = 12);

} // namespace hookforge

#endif
