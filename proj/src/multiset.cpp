#include "hookforge/multiset.hpp"

#include <algorithm>
#include <functional>

#include "hookforge/errors.hpp"

namespace hookforge {

Multiset::Multiset(std::vector<BigRat> values) : values_(std::move(values)) {
    for (const BigRat& v : values_) {
        if (sgn(v) < 0)
            throw InvalidObjectError("multiset value is negative: " + to_string(v));
    }
    std::sort(values_.begin(), values_.end(), std::greater<BigRat>());
}

Multiset Multiset::of_integers(const std::vector<long long>& values) {
    std::vector<BigRat> v;
    v.reserve(values.size());
    for (long long x : values)
        v.emplace_back(static_cast<long>(x));
    return Multiset(std::move(v));
}

BigRat Multiset::total() const {
    BigRat s = 0;
    for (const BigRat& v : values_)
        s += v;
    return s;
}

BigRat Multiset::product() const {
    BigRat p = 1;
    for (const BigRat& v : values_)
        p *= v;
    return p;
}

BigRat Multiset::power_sum(unsigned k) const {
    BigRat s = 0;
    for (const BigRat& v : values_)
        s += rat_pow(v, k);
    return s;
}

std::vector<BigRat> Multiset::prefix_sums() const {
    std::vector<BigRat> p;
    p.reserve(values_.size() + 1);
    BigRat s = 0;
    p.push_back(s);
    for (const BigRat& v : values_) {
        s += v;
        p.push_back(s);
    }
    return p;
}

bool Multiset::all_positive() const {
    for (const BigRat& v : values_)
        if (sgn(v) <= 0)
            return false;
    return true;
}

const char* to_string(MajorizationVerdict v) {
    switch (v) {
    case MajorizationVerdict::Majorizes: return "majorizes";
    case MajorizationVerdict::EqualTotalButFails: return "equal-total-but-fails";
    case MajorizationVerdict::TotalsDiffer: return "totals-differ";
    }
    return "?";
}

MajorizationVerdict majorizes(const Multiset& a, const Multiset& b) {
    if (a.size() != b.size())
        return MajorizationVerdict::TotalsDiffer;
    const auto pa = a.prefix_sums();
    const auto pb = b.prefix_sums();
    if (pa.back() != pb.back())
        return MajorizationVerdict::TotalsDiffer;
    for (std::size_t k = 1; k + 1 <= pa.size(); ++k) {
        if (pa[k] < pb[k])
            return MajorizationVerdict::EqualTotalButFails;
    }
    return MajorizationVerdict::Majorizes;
}

ConvexFunction ConvexFunction::power(unsigned k) {
    if (k < 2)
        throw PreconditionError("custom power exponent must be >= 2");
    return {Kind::Power, k};
}

bool karamata_holds(const Multiset& a, const Multiset& b, const ConvexFunction& phi) {
    if (majorizes(a, b) != MajorizationVerdict::Majorizes)
        throw PreconditionError("karamata_holds requires a to majorize b");
    switch (phi.kind) {
    case ConvexFunction::Kind::Square:
        return a.power_sum(2) >= b.power_sum(2);
    case ConvexFunction::Kind::Power:
        return a.power_sum(phi.exponent) >= b.power_sum(phi.exponent);
    case ConvexFunction::Kind::NegLog:
        if (!a.all_positive() || !b.all_positive())
            throw PreconditionError("neg-log requires strictly positive values");
        // -sum log a_i >= -sum log b_i  <=>  prod a_i <= prod b_i
        return a.product() <= b.product();
    }
    return false;
}

bool subset_condition_verify(const Multiset& a, const Multiset& b,
                             std::size_t max_size) {
    if (a.size() != b.size())
        throw PreconditionError("subset condition needs equally sized multisets");
    const std::size_t n = a.size();
    if (n > max_size)
        throw LimitError("subset enumeration limited to " + std::to_string(max_size) +
                         " elements, got " + std::to_string(n));

    const auto best_a = a.prefix_sums(); // k largest of a is the optimal A'
    const auto& bv = b.values();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BigRat sum_b = 0;
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                sum_b += bv[i];
                ++k;
            }
        }
        if (best_a[k] < sum_b)
            return false;
    }
    return true;
}

} // namespace hookforge
