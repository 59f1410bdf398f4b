#include "hookforge/solid.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "hookforge/errors.hpp"
#include "hookforge/poset.hpp"

namespace hookforge {

SolidPartition::SolidPartition(CubeSet cubes) : cubes_(std::move(cubes)) {
    std::sort(cubes_.begin(), cubes_.end());
    for (std::size_t idx = 0; idx < cubes_.size(); ++idx) {
        const Cube& c = cubes_[idx];
        if (idx > 0 && c == cubes_[idx - 1])
            throw InvalidObjectError("duplicate cube " + to_text());
        if (c.i < 1 || c.j < 1 || c.k < 1)
            throw InvalidObjectError("cube coordinates must be >= 1");
    }
    for (const Cube& c : cubes_) {
        for (const Cube below : {Cube{c.i - 1, c.j, c.k}, Cube{c.i, c.j - 1, c.k},
                                 Cube{c.i, c.j, c.k - 1}}) {
            if (below.i >= 1 && below.j >= 1 && below.k >= 1 &&
                !std::binary_search(cubes_.begin(), cubes_.end(), below))
                throw InvalidObjectError(
                    "not a lower ideal: (" + std::to_string(c.i) + "," +
                    std::to_string(c.j) + "," + std::to_string(c.k) + ") present but (" +
                    std::to_string(below.i) + "," + std::to_string(below.j) + "," +
                    std::to_string(below.k) + ") missing");
        }
    }
}

SolidPartition SolidPartition::from_matrix(const std::vector<std::vector<int>>& heights) {
    CubeSet cubes;
    for (std::size_t r = 0; r < heights.size(); ++r) {
        const auto& row = heights[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            const int h = row[c];
            if (h < 0)
                throw InvalidObjectError("height matrix entry is negative");
            if (c + 1 < row.size() && row[c + 1] > h)
                throw InvalidObjectError("height matrix rows must be weakly decreasing");
            if (r + 1 < heights.size() && c < heights[r + 1].size() &&
                heights[r + 1][c] > h)
                throw InvalidObjectError("height matrix columns must be weakly decreasing");
            for (int k = 1; k <= h; ++k)
                cubes.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1, k});
        }
    }
    return SolidPartition(std::move(cubes));
}

SolidPartition SolidPartition::box(int a, int b, int c) {
    CubeSet cubes;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k)
                cubes.push_back({i, j, k});
    return SolidPartition(std::move(cubes));
}

bool SolidPartition::contains(int i, int j, int k) const {
    return std::binary_search(cubes_.begin(), cubes_.end(), Cube{i, j, k});
}

std::string SolidPartition::to_text() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t idx = 0; idx < cubes_.size(); ++idx) {
        if (idx)
            out << ',';
        out << '[' << cubes_[idx].i << ',' << cubes_[idx].j << ',' << cubes_[idx].k << ']';
    }
    out << ']';
    return out.str();
}

SolidStatKind solid_stat_kind_from_string(const std::string& name) {
    if (name == "R" || name == "r") return SolidStatKind::RayHook;
    if (name == "Q" || name == "q") return SolidStatKind::QuadrantHook;
    if (name == "V" || name == "v") return SolidStatKind::Volume;
    throw ParseError("unknown solid statistic '" + name + "' (expected R, Q or V)");
}

const char* to_string(SolidStatKind kind) {
    switch (kind) {
    case SolidStatKind::RayHook: return "R";
    case SolidStatKind::QuadrantHook: return "Q";
    case SolidStatKind::Volume: return "V";
    }
    return "?";
}

namespace {

void require_cube(const SolidPartition& s, Cube at) {
    if (!s.contains(at.i, at.j, at.k))
        throw PreconditionError("cube (" + std::to_string(at.i) + "," +
                                std::to_string(at.j) + "," + std::to_string(at.k) +
                                ") is outside the solid partition");
}

// dir[a] = +1 collects the increasing ray along axis a, -1 the decreasing one
long long ray_union(const SolidPartition& s, Cube at, const int dir[3]) {
    std::set<Cube> seen;
    for (int axis = 0; axis < 3; ++axis) {
        Cube c = at;
        int* coord = axis == 0 ? &c.i : axis == 1 ? &c.j : &c.k;
        while (*coord >= 1 && s.contains(c.i, c.j, c.k)) {
            seen.insert(c);
            *coord += dir[axis];
        }
    }
    return static_cast<long long>(seen.size());
}

long long quadrant_union(const SolidPartition& s, Cube at, bool starred) {
    std::set<Cube> seen;
    for (const Cube& c : s.cubes()) {
        const bool ge_i = starred ? c.i <= at.i : c.i >= at.i;
        const bool ge_j = starred ? c.j <= at.j : c.j >= at.j;
        const bool ge_k = starred ? c.k <= at.k : c.k >= at.k;
        const bool plane_ij = c.k == at.k && ge_i && ge_j;
        const bool plane_ik = c.j == at.j && ge_i && ge_k;
        const bool plane_jk = c.i == at.i && ge_j && ge_k;
        if (plane_ij || plane_ik || plane_jk)
            seen.insert(c);
    }
    return static_cast<long long>(seen.size());
}

} // namespace

long long solid_stat(const SolidPartition& s, SolidStatKind kind, Cube at, bool starred) {
    require_cube(s, at);
    switch (kind) {
    case SolidStatKind::RayHook: {
        const int up[3] = {1, 1, 1};
        const int down[3] = {-1, -1, -1};
        return ray_union(s, at, starred ? down : up);
    }
    case SolidStatKind::QuadrantHook:
        return quadrant_union(s, at, starred);
    case SolidStatKind::Volume: {
        if (starred)
            return static_cast<long long>(at.i) * at.j * at.k;
        long long count = 0;
        for (const Cube& c : s.cubes())
            if (c.i >= at.i && c.j >= at.j && c.k >= at.k)
                ++count;
        return count;
    }
    }
    return 0;
}

long long r_hook(const SolidPartition& s, int i, int j, int k) {
    return solid_stat(s, SolidStatKind::RayHook, {i, j, k}, false);
}
long long r_hook_star(const SolidPartition& s, int i, int j, int k) {
    return solid_stat(s, SolidStatKind::RayHook, {i, j, k}, true);
}
long long q_hook(const SolidPartition& s, int i, int j, int k) {
    return solid_stat(s, SolidStatKind::QuadrantHook, {i, j, k}, false);
}
long long q_hook_star(const SolidPartition& s, int i, int j, int k) {
    return solid_stat(s, SolidStatKind::QuadrantHook, {i, j, k}, true);
}
long long volume(const SolidPartition& s, int i, int j, int k) {
    return solid_stat(s, SolidStatKind::Volume, {i, j, k}, false);
}
long long anti_volume(const SolidPartition& s, int i, int j, int k) {
    return solid_stat(s, SolidStatKind::Volume, {i, j, k}, true);
}

std::pair<Multiset, Multiset> stat_multisets(const SolidPartition& solid,
                                             SolidStatKind kind) {
    std::vector<long long> plain, star;
    plain.reserve(solid.cubes().size());
    star.reserve(solid.cubes().size());
    for (const Cube& c : solid.cubes()) {
        plain.push_back(solid_stat(solid, kind, c, false));
        star.push_back(solid_stat(solid, kind, c, true));
    }
    return {Multiset::of_integers(plain), Multiset::of_integers(star)};
}

namespace {

// compact the subset toward coordinate 1 along one axis, per grid line
CubeSet push_axis(CubeSet cubes, int axis) {
    std::map<std::pair<int, int>, int> per_line;
    for (const Cube& c : cubes) {
        const auto line = axis == 0   ? std::pair(c.j, c.k)
                          : axis == 1 ? std::pair(c.i, c.k)
                                      : std::pair(c.i, c.j);
        per_line[line]++;
    }
    CubeSet out;
    out.reserve(cubes.size());
    for (const auto& [line, count] : per_line) {
        for (int t = 1; t <= count; ++t) {
            Cube c;
            if (axis == 0)
                c = {t, line.first, line.second};
            else if (axis == 1)
                c = {line.first, t, line.second};
            else
                c = {line.first, line.second, t};
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SpaceShuffle shuffle_space(const SolidPartition& solid, CubeSet x) {
    std::sort(x.begin(), x.end());
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (idx > 0 && x[idx] == x[idx - 1])
            throw PreconditionError("duplicate cube in subset");
        require_cube(solid, x[idx]);
    }
    SpaceShuffle out;
    out.x = std::move(x);
    out.x1 = push_axis(out.x, 0);
    out.x2 = push_axis(out.x1, 1);
    out.y = push_axis(out.x2, 2);
#ifndef NDEBUG
    for (const CubeSet* stage : {&out.x1, &out.x2, &out.y})
        for (const Cube& c : *stage)
            assert(solid.contains(c.i, c.j, c.k) && "compaction stays inside the ideal");
#endif

    const int mid1[3] = {1, -1, -1}; // after the x push, its ray points up
    const int mid2[3] = {1, 1, -1};
    for (const Cube& c : out.x)
        out.sum_rstar_x += solid_stat(solid, SolidStatKind::RayHook, c, true);
    for (const Cube& c : out.x1)
        out.sum_mid1_x1 += ray_union(solid, c, mid1);
    for (const Cube& c : out.x2)
        out.sum_mid2_x2 += ray_union(solid, c, mid2);
    for (const Cube& c : out.y)
        out.sum_r_y += solid_stat(solid, SolidStatKind::RayHook, c, false);
    out.chain_ok = out.sum_rstar_x <= out.sum_mid1_x1 &&
                   out.sum_mid1_x1 <= out.sum_mid2_x2 && out.sum_mid2_x2 <= out.sum_r_y;
    return out;
}

LeBoundPair le_bound_pair(const SolidPartition& solid, int le_limit) {
    LeBoundPair out;
    const auto [v, vstar] = stat_multisets(solid, SolidStatKind::Volume);
    const BigInt fact = factorial(static_cast<unsigned>(solid.size()));
    out.bound_v = BigRat(fact) / v.product();
    out.bound_vstar = BigRat(fact) / vstar.product();
    out.ordering_ok = out.bound_v >= out.bound_vstar;
    if (solid.size() <= le_limit) {
        out.exact = le_count(FinitePoset::from_solid(solid), le_limit);
        out.ordering_ok = out.ordering_ok && BigRat(*out.exact) >= out.bound_v;
    }
    return out;
}

LeBoundPair le_bound_pair(const SolidPartition& solid) {
    return le_bound_pair(solid, le_count_limit());
}

} // namespace hookforge
