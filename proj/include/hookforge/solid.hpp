#ifndef HOOKFORGE_SOLID_HPP
#define HOOKFORGE_SOLID_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hookforge/multiset.hpp"
#include "hookforge/numeric.hpp"

namespace hookforge {

struct Cube {
    int i = 0;
    int j = 0;
    int k = 0;
    auto operator<=>(const Cube&) const = default;
};

using CubeSet = std::vector<Cube>; // kept sorted, duplicate-free

/// Finite lower order ideal of the 1-based grid: whenever a cube is
/// present, so is every cube weakly between it and (1,1,1). A cube set
/// failing closure is rejected, never completed.
class SolidPartition {
public:
    SolidPartition() = default;
    explicit SolidPartition(CubeSet cubes);

    // heights[i][j] = number of cubes stacked at column (i,j); rows and
    // columns must be weakly decreasing
    static SolidPartition from_matrix(const std::vector<std::vector<int>>& heights);
    static SolidPartition box(int a, int b, int c);

    int size() const { return static_cast<int>(cubes_.size()); }
    const CubeSet& cubes() const { return cubes_; }
    bool contains(int i, int j, int k) const;

    bool operator==(const SolidPartition&) const = default;
    std::string to_text() const;

private:
    CubeSet cubes_;
};

enum class SolidStatKind { RayHook, QuadrantHook, Volume }; // R, Q, V
SolidStatKind solid_stat_kind_from_string(const std::string& name);
const char* to_string(SolidStatKind kind);

/// R = size of the union of the three increasing axis rays from the cube,
/// Q = size of the union of the three increasing coordinate quadrants,
/// V = number of cubes weakly dominating the cube. Starred variants
/// reverse all directions; V* equals i*j*k by the lower-ideal property.
long long solid_stat(const SolidPartition& solid, SolidStatKind kind, Cube at,
                     bool starred);

long long r_hook(const SolidPartition& s, int i, int j, int k);
long long r_hook_star(const SolidPartition& s, int i, int j, int k);
long long q_hook(const SolidPartition& s, int i, int j, int k);
long long q_hook_star(const SolidPartition& s, int i, int j, int k);
long long volume(const SolidPartition& s, int i, int j, int k);
long long anti_volume(const SolidPartition& s, int i, int j, int k);

std::pair<Multiset, Multiset> stat_multisets(const SolidPartition& solid,
                                             SolidStatKind kind);

/// Axis-by-axis compaction toward the corner: push along x, then y,
/// then z. The reported sums interpolate between all-reversed and
/// all-increasing ray hooks, flipping the pushed axis at each stage:
/// R* on X, then (x up) on X', then (x,y up) on X'', then R on Y.
struct SpaceShuffle {
    CubeSet x, x1, x2, y;
    long long sum_rstar_x = 0;
    long long sum_mid1_x1 = 0;
    long long sum_mid2_x2 = 0;
    long long sum_r_y = 0;
    bool chain_ok = false;
};
SpaceShuffle shuffle_space(const SolidPartition& solid, CubeSet x);

/// The two linear-extension lower bounds n!/prod(V) and n!/prod(V*),
/// with the exact count when the solid partition is small enough.
/// The first bound is never below the second.
struct LeBoundPair {
    BigRat bound_v;
    BigRat bound_vstar;
    std::optional<BigInt> exact;
    bool ordering_ok = false;
};
LeBoundPair le_bound_pair(const SolidPartition& solid, int le_limit);
LeBoundPair le_bound_pair(const SolidPartition& solid);

} // namespace hookforge

#endif
