#ifndef HOOKFORGE_YOUNG_HPP
#define HOOKFORGE_YOUNG_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hookforge/multiset.hpp"
#include "hookforge/numeric.hpp"

namespace hookforge {

// 1-based matrix coordinates: i grows downward, j to the right,
// the corner cell is (1,1).
struct Cell {
    int i = 0;
    int j = 0;
    auto operator<=>(const Cell&) const = default;
};

using CellSet = std::vector<Cell>; // kept sorted, duplicate-free

/// Young diagram of an integer partition. Parts are strictly positive
/// and non-increasing; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "4,3,1"; empty string is the empty partition
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    int size() const { return size_; }

    bool contains(int i, int j) const {
        return i >= 1 && i <= rows() && j >= 1 && j <= parts_[i - 1];
    }

    Partition conjugate() const;
    bool is_rectangle() const; // empty counts as a rectangle
    CellSet cells() const;     // row-major

    bool operator==(const Partition&) const = default;
    std::string to_text() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class CellStatKind {
    Hook,
    AntiHook,
    SemiHook,
    Arm,
    Leg,
    AntiArm,
    AntiLeg,
    Area,
    AntiArea,
};

CellStatKind cell_stat_kind_from_string(const std::string& name);
const char* to_string(CellStatKind kind);

/// Per-cell statistic; throws PreconditionError for cells outside the
/// diagram. The semi-hook is anti_arm + leg = j + conj_j - i, the unique
/// mix of the two that is sandwiched between the two shuffling steps
/// (either of the offset variants fails on a single cell).
long long cell_stat(const Partition& shape, CellStatKind kind, int i, int j);

Multiset stat_multiset(const Partition& shape, CellStatKind kind);

/// Count of standard Young tableaux: n! over the product of hooks.
/// The division is exact and asserted to be so.
BigInt syt_count(const Partition& shape);

/// Nonnegative weights on shift vectors (p,q) >= (0,0). Either a finite
/// table or one of the presets: `ones` (all shifts weigh 1, giving area
/// statistics) and `axes` (shifts with p = 0 or q = 0 weigh 1, giving
/// hook statistics).
class WeightFunction {
public:
    static WeightFunction ones();
    static WeightFunction axes();
    static WeightFunction from_table(std::map<std::pair<int, int>, BigRat> table);

    bool is_preset() const { return preset_ != Preset::Table; }
    std::string name() const;

    // weight of shift (p,q); table entries default to 0
    BigRat at(int p, int q) const;

    const std::map<std::pair<int, int>, BigRat>& table() const { return table_; }

private:
    enum class Preset { Table, Ones, Axes };
    Preset preset_ = Preset::Table;
    std::map<std::pair<int, int>, BigRat> table_;
};

/// psi(i,j)  = sum of g over shifts landing inside the diagram below-right,
/// psi*(i,j) = the same toward the corner. With g = ones this is
/// (area, anti-area); with g = axes it is (hook, anti-hook).
std::pair<Multiset, Multiset> weighted_stat_multisets(const Partition& shape,
                                                      const WeightFunction& g);
BigRat weighted_cell_stat(const Partition& shape, const WeightFunction& g,
                          int i, int j, bool starred);

/// Two compaction steps applied to a subset of squares: push up within
/// each column (X -> X'), then push left within each row (X' -> Y).
/// Both stay inside the diagram; sizes are preserved.
struct PlaneShuffle {
    CellSet x;
    CellSet x_up; // after the column push
    CellSet y;    // after the row push
};
PlaneShuffle shuffle_plane(const Partition& shape, CellSet x);

/// The inequalities that make the shuffle a majorization witness. Arms
/// and legs count cells excluding the anchor while anti-arms and
/// anti-legs include it, so the sum comparisons use the strict (anchor
/// excluded) anti counts on the right to compare like with like.
struct StepReport {
    PlaneShuffle shuffle;

    // step (1): pushing up preserves anti-arms and cannot shrink arms
    bool step1_cells_ok = false;
    // step (1): legs after the push dominate the strictly-above counts
    bool step1_leg_sum_ok = false;
    long long legs_x_up = 0;
    long long strict_anti_legs_x = 0;
    // step (2): arms after the push dominate the strictly-left counts
    bool step2_arm_sum_ok = false;
    long long arms_y = 0;
    long long strict_anti_arms_x_up = 0;
    // combined: sum of hooks over Y dominates sum of anti-hooks over X
    bool hook_ok = false;
    long long hooks_y = 0;
    long long anti_hooks_x = 0;

    // semi-hook sandwich h*(X) <= hmid(X') <= h(Y) with hmid = anti_arm+leg.
    // The two closed forms floating around for the semi-hook (i+conj_j-j
    // and j+conj_j-i-1) disagree; both sums over X' are reported and the
    // disagreement is flagged rather than resolved.
    long long semi_hooks_x_up = 0;
    bool semi_chain_ok = false;
    long long semi_variant_row_sum = 0;  // sum of i + conj_j - j over X'
    long long semi_variant_col_sum = 0;  // sum of j + conj_j - i - 1 over X'
    bool semi_variants_disagree = false;

    // area analogue a*(X) <= adeg(X') <= a(Y) with adeg(i,j) = j*(leg+1),
    // the rectangle below-left of the cell
    bool area_chain_ok = false;
    long long anti_areas_x = 0;
    long long mid_areas_x_up = 0;
    long long areas_y = 0;

    bool all_ok() const {
        return step1_cells_ok && step1_leg_sum_ok && step2_arm_sum_ok && hook_ok &&
               semi_chain_ok && area_chain_ok;
    }
};
StepReport verify_step_inequalities(const Partition& shape, CellSet x);

} // namespace hookforge

#endif
