#include "hookforge/young.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hookforge/errors.hpp"

namespace hookforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (std::size_t idx = 0; idx < parts_.size(); ++idx) {
        const int p = parts_[idx];
        if (p <= 0)
            throw InvalidObjectError("partition part " + std::to_string(idx + 1) +
                                     " is not positive: " + std::to_string(p));
        if (idx > 0 && p > prev)
            throw InvalidObjectError("partition parts must be non-increasing at position " +
                                     std::to_string(idx + 1));
        prev = p;
        size_ += p;
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ',')
            ++end;
        std::string token = text.substr(pos, end - pos);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
            token.pop_back();
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
            parts.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + token + "' at position " +
                             std::to_string(pos));
        }
        pos = end + (end < text.size() ? 1 : 0);
        if (end < text.size() && end + 1 == text.size())
            throw ParseError("trailing comma in partition text");
    }
    return Partition(std::move(parts));
}

std::string Partition::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::conjugate() const {
    std::vector<int> conj(static_cast<std::size_t>(cols()), 0);
    for (int j = 1; j <= cols(); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j)
                ++count;
        conj[j - 1] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::is_rectangle() const {
    for (int p : parts_)
        if (p != parts_[0])
            return false;
    return true;
}

CellSet Partition::cells() const {
    CellSet out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j)
            out.push_back({i, j});
    return out;
}

CellStatKind cell_stat_kind_from_string(const std::string& name) {
    if (name == "hook") return CellStatKind::Hook;
    if (name == "anti-hook") return CellStatKind::AntiHook;
    if (name == "semi-hook") return CellStatKind::SemiHook;
    if (name == "arm") return CellStatKind::Arm;
    if (name == "leg") return CellStatKind::Leg;
    if (name == "anti-arm") return CellStatKind::AntiArm;
    if (name == "anti-leg") return CellStatKind::AntiLeg;
    if (name == "area") return CellStatKind::Area;
    if (name == "anti-area") return CellStatKind::AntiArea;
    throw ParseError("unknown cell statistic '" + name + "'");
}

const char* to_string(CellStatKind kind) {
    switch (kind) {
    case CellStatKind::Hook: return "hook";
    case CellStatKind::AntiHook: return "anti-hook";
    case CellStatKind::SemiHook: return "semi-hook";
    case CellStatKind::Arm: return "arm";
    case CellStatKind::Leg: return "leg";
    case CellStatKind::AntiArm: return "anti-arm";
    case CellStatKind::AntiLeg: return "anti-leg";
    case CellStatKind::Area: return "area";
    case CellStatKind::AntiArea: return "anti-area";
    }
    return "?";
}

namespace {

void require_cell(const Partition& shape, int i, int j) {
    if (!shape.contains(i, j))
        throw PreconditionError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is outside the diagram " + shape.to_text());
}

long long area_below_right(const Partition& shape, int i, int j) {
    long long count = 0;
    for (int p = i; p <= shape.rows(); ++p) {
        const int row = shape.parts()[p - 1];
        if (row < j)
            break; // rows only shrink downward
        count += row - j + 1;
    }
    return count;
}

} // namespace

long long cell_stat(const Partition& shape, CellStatKind kind, int i, int j) {
    require_cell(shape, i, j);
    const Partition conj = shape.conjugate();
    const int row = shape.parts()[i - 1];
    const int col = conj.parts()[j - 1];
    switch (kind) {
    case CellStatKind::Hook: return row - i + col - j + 1;
    case CellStatKind::AntiHook: return i + j - 1;
    case CellStatKind::SemiHook: return j + col - i; // anti-arm + leg
    case CellStatKind::Arm: return row - j;
    case CellStatKind::Leg: return col - i;
    case CellStatKind::AntiArm: return j;
    case CellStatKind::AntiLeg: return i;
    case CellStatKind::Area: return area_below_right(shape, i, j);
    case CellStatKind::AntiArea: return static_cast<long long>(i) * j;
    }
    return 0;
}

Multiset stat_multiset(const Partition& shape, CellStatKind kind) {
    std::vector<long long> values;
    values.reserve(static_cast<std::size_t>(shape.size()));
    const Partition conj = shape.conjugate();
    for (int i = 1; i <= shape.rows(); ++i) {
        const int row = shape.parts()[i - 1];
        for (int j = 1; j <= row; ++j) {
            const int col = conj.parts()[j - 1];
            long long v = 0;
            switch (kind) {
            case CellStatKind::Hook: v = row - i + col - j + 1; break;
            case CellStatKind::AntiHook: v = i + j - 1; break;
            case CellStatKind::SemiHook: v = j + col - i; break;
            case CellStatKind::Arm: v = row - j; break;
            case CellStatKind::Leg: v = col - i; break;
            case CellStatKind::AntiArm: v = j; break;
            case CellStatKind::AntiLeg: v = i; break;
            case CellStatKind::Area: v = area_below_right(shape, i, j); break;
            case CellStatKind::AntiArea: v = static_cast<long long>(i) * j; break;
            }
            values.push_back(v);
        }
    }
    return Multiset::of_integers(values);
}

BigInt syt_count(const Partition& shape) {
    BigInt hooks = 1;
    const Partition conj = shape.conjugate();
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = 1; j <= shape.parts()[i - 1]; ++j)
            hooks *= shape.parts()[i - 1] - i + conj.parts()[j - 1] - j + 1;
    const BigInt fact = factorial(static_cast<unsigned>(shape.size()));
    BigInt count, rem;
    mpz_fdiv_qr(count.get_mpz_t(), rem.get_mpz_t(), fact.get_mpz_t(), hooks.get_mpz_t());
    if (rem != 0)
        throw Error("hook product does not divide n! for " + shape.to_text());
    return count;
}

WeightFunction WeightFunction::ones() {
    WeightFunction g;
    g.preset_ = Preset::Ones;
    return g;
}

WeightFunction WeightFunction::axes() {
    WeightFunction g;
    g.preset_ = Preset::Axes;
    return g;
}

WeightFunction WeightFunction::from_table(std::map<std::pair<int, int>, BigRat> table) {
    WeightFunction g;
    g.preset_ = Preset::Table;
    for (const auto& [shift, w] : table) {
        if (shift.first < 0 || shift.second < 0)
            throw InvalidObjectError("weight shift has a negative component");
        if (sgn(w) < 0)
            throw InvalidObjectError("weight value is negative: " + to_string(w));
    }
    g.table_ = std::move(table);
    return g;
}

std::string WeightFunction::name() const {
    switch (preset_) {
    case Preset::Ones: return "ones";
    case Preset::Axes: return "axes";
    case Preset::Table: return "table";
    }
    return "?";
}

BigRat WeightFunction::at(int p, int q) const {
    if (p < 0 || q < 0)
        return 0;
    switch (preset_) {
    case Preset::Ones: return 1;
    case Preset::Axes: return (p == 0 || q == 0) ? 1 : 0;
    case Preset::Table: {
        auto it = table_.find({p, q});
        return it == table_.end() ? BigRat(0) : it->second;
    }
    }
    return 0;
}

BigRat weighted_cell_stat(const Partition& shape, const WeightFunction& g,
                          int i, int j, bool starred) {
    require_cell(shape, i, j);
    BigRat sum = 0;
    auto add = [&](int p, int q, const BigRat& w) {
        if (sgn(w) == 0)
            return;
        const int ti = starred ? i - p : i + p;
        const int tj = starred ? j - q : j + q;
        if (shape.contains(ti, tj))
            sum += w;
    };
    if (g.is_preset()) {
        // presets have full support; only the bounding box can contribute
        for (int p = 0; p < shape.rows(); ++p)
            for (int q = 0; q < shape.cols(); ++q)
                add(p, q, g.at(p, q));
    } else {
        for (const auto& [shift, w] : g.table())
            add(shift.first, shift.second, w);
    }
    return sum;
}

std::pair<Multiset, Multiset> weighted_stat_multisets(const Partition& shape,
                                                      const WeightFunction& g) {
    std::vector<BigRat> plain, star;
    plain.reserve(static_cast<std::size_t>(shape.size()));
    star.reserve(static_cast<std::size_t>(shape.size()));
    for (const Cell& c : shape.cells()) {
        plain.push_back(weighted_cell_stat(shape, g, c.i, c.j, false));
        star.push_back(weighted_cell_stat(shape, g, c.i, c.j, true));
    }
    return {Multiset(std::move(plain)), Multiset(std::move(star))};
}

namespace {

CellSet canonical_subset(const Partition& shape, CellSet x) {
    std::sort(x.begin(), x.end());
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (idx > 0 && x[idx] == x[idx - 1])
            throw PreconditionError("duplicate cell in subset");
        require_cell(shape, x[idx].i, x[idx].j);
    }
    return x;
}

} // namespace

PlaneShuffle shuffle_plane(const Partition& shape, CellSet x) {
    PlaneShuffle out;
    out.x = canonical_subset(shape, std::move(x));

    // push up: in each column the cells move to rows 1..count
    std::map<int, int> per_column;
    for (const Cell& c : out.x)
        per_column[c.j]++;
    for (const auto& [j, count] : per_column)
        for (int i = 1; i <= count; ++i)
            out.x_up.push_back({i, j});
    std::sort(out.x_up.begin(), out.x_up.end());

    // push left: in each row the cells move to columns 1..count
    std::map<int, int> per_row;
    for (const Cell& c : out.x_up)
        per_row[c.i]++;
    for (const auto& [i, count] : per_row)
        for (int j = 1; j <= count; ++j)
            out.y.push_back({i, j});
    std::sort(out.y.begin(), out.y.end());

#ifndef NDEBUG
    // compaction toward the corner keeps cells inside a Young diagram
    for (const Cell& c : out.x_up)
        assert(shape.contains(c.i, c.j));
    for (const Cell& c : out.y)
        assert(shape.contains(c.i, c.j));
#endif
    return out;
}

StepReport verify_step_inequalities(const Partition& shape, CellSet x) {
    StepReport r;
    r.shuffle = shuffle_plane(shape, std::move(x));
    const Partition conj = shape.conjugate();
    auto arm = [&](Cell c) { return shape.parts()[c.i - 1] - c.j; };
    auto leg = [&](Cell c) { return conj.parts()[c.j - 1] - c.i; };

    // pair X with X' column by column, in row order
    r.step1_cells_ok = true;
    {
        std::map<int, std::vector<int>> rows_before;
        for (const Cell& c : r.shuffle.x)
            rows_before[c.j].push_back(c.i);
        for (auto& [j, rows] : rows_before) {
            std::sort(rows.begin(), rows.end());
            for (std::size_t t = 0; t < rows.size(); ++t) {
                const Cell before{rows[t], j};
                const Cell after{static_cast<int>(t) + 1, j};
                if (arm(after) < arm(before))
                    r.step1_cells_ok = false; // anti-arm j is preserved by construction
            }
        }
    }

    for (const Cell& c : r.shuffle.x) {
        r.strict_anti_legs_x += c.i - 1;
        r.anti_hooks_x += c.i + c.j - 1;
        r.anti_areas_x += static_cast<long long>(c.i) * c.j;
    }
    for (const Cell& c : r.shuffle.x_up) {
        r.legs_x_up += leg(c);
        r.strict_anti_arms_x_up += c.j - 1;
        r.semi_hooks_x_up += c.j + leg(c);
        const long long by_row = c.i + conj.parts()[c.j - 1] - c.j;
        const long long by_col = c.j + conj.parts()[c.j - 1] - c.i - 1;
        r.semi_variant_row_sum += by_row;
        r.semi_variant_col_sum += by_col;
        if (by_row != by_col)
            r.semi_variants_disagree = true;
        r.mid_areas_x_up += static_cast<long long>(c.j) * (leg(c) + 1);
    }
    for (const Cell& c : r.shuffle.y) {
        r.arms_y += arm(c);
        r.hooks_y += arm(c) + leg(c) + 1;
        r.areas_y += cell_stat(shape, CellStatKind::Area, c.i, c.j);
    }

    r.step1_leg_sum_ok = r.legs_x_up >= r.strict_anti_legs_x;
    r.step2_arm_sum_ok = r.arms_y >= r.strict_anti_arms_x_up;
    r.hook_ok = r.hooks_y >= r.anti_hooks_x;
    r.semi_chain_ok = r.anti_hooks_x <= r.semi_hooks_x_up && r.semi_hooks_x_up <= r.hooks_y;
    r.area_chain_ok = r.anti_areas_x <= r.mid_areas_x_up && r.mid_areas_x_up <= r.areas_y;
    return r;
}

} // namespace hookforge
