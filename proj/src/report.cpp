#include "hookforge/report.hpp"

#include <algorithm>

#include "hookforge/errors.hpp"

namespace hookforge {

namespace {

Json base_report(const char* command, const AnyObject& object) {
    Json r;
    r["command"] = command;
    r["object"] = object.descriptor();
    r["counterexample"] = false;
    return r;
}

void attach_multiset(Json& r, const char* prefix, const Multiset& values) {
    const std::string p = prefix;
    r[p.empty() ? "multiset" : p + "_multiset"] = json_of(values);
    r[p.empty() ? "sum" : p + "_sum"] = json_of(values.total());
    r[p.empty() ? "product" : p + "_product"] = json_of(values.product());
}

// paired statistics also carry the majorization verdict the theorems assert
void attach_pair(Json& r, const Multiset& plain, const Multiset& star) {
    attach_multiset(r, "", plain);
    attach_multiset(r, "star", star);
    const MajorizationVerdict verdict = majorizes(plain, star);
    r["majorization"] = to_string(verdict);
    r["counterexample"] = verdict != MajorizationVerdict::Majorizes;
}

Json stats_for_partition(const AnyObject& object, const Partition& shape,
                         const std::string& kind, const std::string& weight_spec) {
    Json r = base_report("stats", object);
    if (kind == "weighted" || (!weight_spec.empty() && kind.empty())) {
        if (weight_spec.empty())
            throw ParseError("weighted statistics need a weight (ones, axes or a table)");
        const WeightFunction g = parse_plane_weight(weight_spec);
        r["kind"] = "weighted";
        r["weight"] = g.name();
        Json table = Json::array();
        for (const Cell& c : shape.cells())
            table.push_back({{"cell", {c.i, c.j}},
                             {"value", json_of(weighted_cell_stat(shape, g, c.i, c.j, false))},
                             {"star", json_of(weighted_cell_stat(shape, g, c.i, c.j, true))}});
        r["table"] = std::move(table);
        const auto [psi, psi_star] = weighted_stat_multisets(shape, g);
        attach_pair(r, psi, psi_star);
        return r;
    }
    const CellStatKind stat = cell_stat_kind_from_string(kind);
    r["kind"] = to_string(stat);
    Json table = Json::array();
    for (const Cell& c : shape.cells())
        table.push_back(
            {{"cell", {c.i, c.j}}, {"value", cell_stat(shape, stat, c.i, c.j)}});
    r["table"] = std::move(table);
    attach_multiset(r, "", stat_multiset(shape, stat));
    return r;
}

Json stats_for_tree(const AnyObject& object, const RootedTree& tree,
                    const std::string& kind) {
    Json r = base_report("stats", object);
    const bool branch = kind == "branch";
    if (!branch && kind != "distance")
        throw ParseError("tree statistics are 'branch' or 'distance', got '" + kind + "'");
    r["kind"] = kind;
    Json table = Json::array();
    for (int v = 1; v <= tree.size(); ++v)
        table.push_back({{"vertex", v},
                         {"value", branch ? tree.branch_size(v) : tree.distance(v)}});
    r["table"] = std::move(table);
    attach_multiset(r, "", branch ? tree.branch_sizes() : tree.distances());
    return r;
}

Json stats_for_solid(const AnyObject& object, const SolidPartition& solid,
                     const std::string& kind) {
    Json r = base_report("stats", object);
    const SolidStatKind stat = solid_stat_kind_from_string(kind);
    r["kind"] = to_string(stat);
    Json table = Json::array();
    for (const Cube& c : solid.cubes())
        table.push_back({{"cube", {c.i, c.j, c.k}},
                         {"value", solid_stat(solid, stat, c, false)},
                         {"star", solid_stat(solid, stat, c, true)}});
    r["table"] = std::move(table);
    const auto [plain, star] = stat_multisets(solid, stat);
    attach_pair(r, plain, star);
    return r;
}

Json stats_for_poset(const AnyObject& object, const FinitePoset& poset,
                     const std::string& kind) {
    if (kind != "upper-ideal")
        throw ParseError("poset statistics support kind 'upper-ideal', got '" + kind + "'");
    Json r = base_report("stats", object);
    r["kind"] = kind;
    const Multiset sizes = poset.upper_ideal_sizes();
    Json table = Json::array();
    for (int x = 1; x <= poset.size(); ++x) {
        long long br = 0;
        for (int y = 1; y <= poset.size(); ++y)
            br += poset.less_eq(x, y);
        table.push_back({{"element", x}, {"value", br}});
    }
    r["table"] = std::move(table);
    attach_multiset(r, "", sizes);
    return r;
}

Json stats_for_ideal(const AnyObject& object, const TreeProductIdeal& ideal,
                     const std::string& kind, const std::string& weight_spec) {
    if (!kind.empty() && kind != "H" && kind != "hooks")
        throw ParseError("ideal statistics support kind 'H', got '" + kind + "'");
    ShiftWeight g = [&] {
        if (!weight_spec.empty()) {
            int extent = 1;
            for (const RootedTree& t : ideal.factors())
                extent = std::max(extent, t.size());
            return parse_shift_weight(weight_spec, ideal.dims(), extent);
        }
        if (object.ideal_weight)
            return *object.ideal_weight;
        throw ParseError("ideal statistics need a weight (inline, ones, axes or faces)");
    }();
    Json r = base_report("stats", object);
    r["kind"] = "H";
    Json table = Json::array();
    for (const auto& v : ideal.elements()) {
        const auto [h, hstar] = hook_pair(ideal, g, v);
        table.push_back({{"element", v}, {"value", json_of(h)}, {"star", json_of(hstar)}});
    }
    r["table"] = std::move(table);
    const auto [h, hstar] = hook_multisets(ideal, g);
    attach_pair(r, h, hstar);
    return r;
}

} // namespace

Json stats_report(const AnyObject& object, const std::string& kind,
                  const std::string& weight_spec) {
    if (const auto* shape = std::get_if<Partition>(&object.value))
        return stats_for_partition(object, *shape, kind, weight_spec);
    if (const auto* tree = std::get_if<RootedTree>(&object.value))
        return stats_for_tree(object, *tree, kind);
    if (const auto* solid = std::get_if<SolidPartition>(&object.value))
        return stats_for_solid(object, *solid, kind);
    if (const auto* poset = std::get_if<FinitePoset>(&object.value))
        return stats_for_poset(object, *poset, kind);
    return stats_for_ideal(object, std::get<TreeProductIdeal>(object.value), kind,
                           weight_spec);
}

Json count_report(const AnyObject& object, int le_limit) {
    Json r = base_report("count", object);
    auto cross_check = [&](const BigInt& formula, const FinitePoset& poset) {
        Json c;
        if (poset.size() <= le_limit) {
            const BigInt exact = le_count(poset, le_limit);
            c["linear_extensions"] = json_of(exact);
            c["match"] = exact == formula;
            r["counterexample"] = exact != formula;
        } else {
            c["linear_extensions"] = nullptr;
            c["match"] = nullptr;
        }
        return c;
    };
    if (const auto* shape = std::get_if<Partition>(&object.value)) {
        const BigInt count = syt_count(*shape);
        r["count"] = json_of(count);
        r["method"] = "hook-length-formula";
        r["cross_check"] = cross_check(count, FinitePoset::from_partition(*shape));
    } else if (const auto* tree = std::get_if<RootedTree>(&object.value)) {
        const BigInt count = it_count(*tree);
        r["count"] = json_of(count);
        r["method"] = "branch-product-formula";
        r["cross_check"] = cross_check(count, FinitePoset::from_tree(*tree));
    } else {
        const FinitePoset poset = [&] {
            if (const auto* solid = std::get_if<SolidPartition>(&object.value))
                return FinitePoset::from_solid(*solid);
            if (const auto* ideal = std::get_if<TreeProductIdeal>(&object.value))
                return FinitePoset::from_ideal(*ideal);
            return std::get<FinitePoset>(object.value);
        }();
        r["count"] = json_of(le_count(poset, le_limit));
        r["method"] = "downset-dp";
    }
    return r;
}

namespace {

Json cells_json(const CellSet& cells) {
    Json out = Json::array();
    for (const Cell& c : cells)
        out.push_back({c.i, c.j});
    return out;
}

Json cubes_json(const CubeSet& cubes) {
    Json out = Json::array();
    for (const Cube& c : cubes)
        out.push_back({c.i, c.j, c.k});
    return out;
}

Json check_entry(const char* name, long long lhs, const char* rel, long long rhs, bool ok) {
    return Json{{"name", name}, {"lhs", lhs}, {"relation", rel}, {"rhs", rhs}, {"ok", ok}};
}

} // namespace

Json shuffle_report(const AnyObject& object, const std::string& subset_text,
                    const std::string& weight_spec) {
    Json r = base_report("shuffle", object);
    Json stages = Json::array();
    Json checks = Json::array();
    bool ok = true;

    if (const auto* shape = std::get_if<Partition>(&object.value)) {
        const StepReport report = verify_step_inequalities(*shape, parse_cell_subset(subset_text));
        stages.push_back({{"label", "X"}, {"members", cells_json(report.shuffle.x)}});
        stages.push_back({{"label", "X'"}, {"members", cells_json(report.shuffle.x_up)}});
        stages.push_back({{"label", "Y"}, {"members", cells_json(report.shuffle.y)}});
        checks.push_back(check_entry("step1-legs", report.legs_x_up, ">=",
                                     report.strict_anti_legs_x, report.step1_leg_sum_ok));
        checks.push_back(Json{{"name", "step1-cells"}, {"ok", report.step1_cells_ok}});
        checks.push_back(check_entry("step2-arms", report.arms_y, ">=",
                                     report.strict_anti_arms_x_up, report.step2_arm_sum_ok));
        checks.push_back(check_entry("step-hook", report.hooks_y, ">=", report.anti_hooks_x,
                                     report.hook_ok));
        checks.push_back(Json{{"name", "semi-hook-chain"},
                              {"chain", {report.anti_hooks_x, report.semi_hooks_x_up,
                                         report.hooks_y}},
                              {"variant_sums", {report.semi_variant_row_sum,
                                                report.semi_variant_col_sum}},
                              {"variants_disagree", report.semi_variants_disagree},
                              {"ok", report.semi_chain_ok}});
        checks.push_back(Json{{"name", "area-chain"},
                              {"chain", {report.anti_areas_x, report.mid_areas_x_up,
                                         report.areas_y}},
                              {"ok", report.area_chain_ok}});
        ok = report.all_ok();
    } else if (const auto* tree = std::get_if<RootedTree>(&object.value)) {
        const std::vector<int> x = parse_vertex_subset(subset_text);
        const std::vector<int> y = shuffle_tree(*tree, x);
        long long sum_b = 0, sum_d = 0;
        for (int v : x)
            sum_b += tree->branch_size(v);
        for (int v : y)
            sum_d += tree->distance(v);
        std::vector<int> sorted_x = x;
        std::sort(sorted_x.begin(), sorted_x.end());
        stages.push_back({{"label", "X"}, {"members", sorted_x}});
        stages.push_back({{"label", "Y"}, {"members", y}});
        ok = sum_d <= sum_b;
        checks.push_back(check_entry("distance-vs-branch", sum_d, "<=", sum_b, ok));
    } else if (const auto* solid = std::get_if<SolidPartition>(&object.value)) {
        const SpaceShuffle s = shuffle_space(*solid, parse_cube_subset(subset_text));
        stages.push_back({{"label", "X"}, {"members", cubes_json(s.x)}});
        stages.push_back({{"label", "X'"}, {"members", cubes_json(s.x1)}});
        stages.push_back({{"label", "X''"}, {"members", cubes_json(s.x2)}});
        stages.push_back({{"label", "Y"}, {"members", cubes_json(s.y)}});
        checks.push_back(Json{{"name", "ray-hook-chain"},
                              {"chain", {s.sum_rstar_x, s.sum_mid1_x1, s.sum_mid2_x2,
                                         s.sum_r_y}},
                              {"ok", s.chain_ok}});
        ok = s.chain_ok;
    } else if (const auto* ideal = std::get_if<TreeProductIdeal>(&object.value)) {
        ShiftWeight g = [&] {
            if (!weight_spec.empty()) {
                int extent = 1;
                for (const RootedTree& t : ideal->factors())
                    extent = std::max(extent, t.size());
                return parse_shift_weight(weight_spec, ideal->dims(), extent);
            }
            if (object.ideal_weight)
                return *object.ideal_weight;
            int extent = 1;
            for (const RootedTree& t : ideal->factors())
                extent = std::max(extent, t.size());
            return ShiftWeight::ones_box(ideal->dims(), extent);
        }();
        const ProductShuffle s = shuffle_product(*ideal, parse_element_subset(subset_text));
        for (std::size_t t = 0; t < s.stages.size(); ++t) {
            const std::string label =
                t == 0 ? "X" : t + 1 == s.stages.size() ? "Y" : "X" + std::string(t, '\'');
            stages.push_back({{"label", label}, {"members", s.stages[t]}});
        }
        BigRat sum_hstar_x = 0, sum_h_y = 0;
        for (const auto& v : s.stages.front())
            sum_hstar_x += hook_pair(*ideal, g, v).second;
        for (const auto& v : s.stages.back())
            sum_h_y += hook_pair(*ideal, g, v).first;
        ok = sum_h_y >= sum_hstar_x;
        checks.push_back(Json{{"name", "hook-vs-anti-hook"},
                              {"lhs", json_of(sum_h_y)},
                              {"relation", ">="},
                              {"rhs", json_of(sum_hstar_x)},
                              {"ok", ok}});
    } else {
        throw ParseError("shuffle applies to partitions, trees, solids and ideals");
    }

    r["stages"] = std::move(stages);
    r["checks"] = std::move(checks);
    r["monotone"] = ok;
    r["counterexample"] = !ok;
    return r;
}

Json bounds_report(const AnyObject& object, int le_limit) {
    const auto* solid = std::get_if<SolidPartition>(&object.value);
    if (!solid)
        throw ParseError("bounds apply to solid partitions");
    Json r = base_report("bounds", object);
    const LeBoundPair bounds = le_bound_pair(*solid, le_limit);
    r["exact"] = bounds.exact ? json_of(*bounds.exact) : Json(nullptr);
    r["bound_v"] = json_of(bounds.bound_v);
    r["bound_vstar"] = json_of(bounds.bound_vstar);
    r["ordering_ok"] = bounds.ordering_ok;
    r["counterexample"] = !bounds.ordering_ok;
    return r;
}

Json verify_report(const SweepResult& result, const SweepConfig& config) {
    Json r;
    r["command"] = "verify";
    r["theorem"] = result.theorem;
    r["config"] = {{"max_n", config.max_n ? Json(*config.max_n) : Json(nullptr)},
                   {"trials", config.trials ? Json(*config.trials) : Json(nullptr)},
                   {"seed", config.seed},
                   {"jobs", config.jobs}};
    r["instances"] = result.instances;
    Json failures = Json::array();
    for (const Counterexample& cx : result.counterexamples)
        failures.push_back({{"instance", cx.instance}, {"detail", cx.detail}});
    r["failures"] = std::move(failures);
    r["notes"] = result.notes;
    r["ok"] = result.ok();
    r["counterexample"] = !result.ok();
    return r;
}

bool report_flags_counterexample(const Json& report) {
    return report.value("counterexample", false);
}

} // namespace hookforge
