#ifndef HOOKFORGE_ENUMERATE_HPP
#define HOOKFORGE_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hookforge/poset.hpp"
#include "hookforge/solid.hpp"
#include "hookforge/tree_product.hpp"
#include "hookforge/trees.hpp"
#include "hookforge/young.hpp"

namespace hookforge {

/// Every partition of n exactly once, in reverse-lexicographic order;
/// n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

/// Every unlabeled rooted tree on n vertices exactly once, generated
/// through canonical level sequences in lexicographically decreasing
/// order (path first, star last).
std::vector<RootedTree> rooted_trees(int n);

/// Every lower ideal of the grid with n cubes exactly once, with no
/// symmetry quotient: distinct ideals, not orbits.
std::vector<SolidPartition> solid_partitions_of(int n);

/// Deterministic random source: raw mt19937_64 output reduced by
/// rejection sampling, so streams are identical on every platform for
/// a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n); // uniform in [0, n)
    int range(int lo, int hi);            // uniform in [lo, hi]
    bool chance(int numer, int denom);    // true with probability numer/denom

private:
    std::mt19937_64 engine_;
};

/// Random lower ideal grown from the all-roots tuple by uniformly
/// chosen addable elements. Throws PreconditionError when the target
/// size is not reachable, unless allow_smaller is set, in which case
/// the saturated ideal is returned.
TreeProductIdeal random_ideal(const std::vector<RootedTree>& factors, int size,
                              Rng& rng, bool allow_smaller = false);

/// Random poset: a random linear order with each forward pair related
/// with probability `density` (in percent), then reduced to covers.
/// Density 0 gives an antichain.
FinitePoset random_poset(int n, int density_percent, Rng& rng);

/// Random integer weight table over the shift box {0..extent}^dims with
/// values in 0..max_value.
ShiftWeight random_shift_weight(int dims, int extent, int max_value, Rng& rng);

/// Two-dimensional flavor of the same, for diagram statistics.
WeightFunction random_plane_weight(int extent, int max_value, Rng& rng);

} // namespace hookforge

#endif
