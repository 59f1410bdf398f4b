#include "hookforge/io.hpp"

#include <algorithm>

#include "hookforge/errors.hpp"

namespace hookforge {

namespace {

Json parse_json(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(std::string("malformed JSON for ") + what);
    return j;
}

int int_field(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string("expected an integer in ") + what);
    return j.get<int>();
}

BigRat rat_field(const Json& j, const char* what) {
    if (j.is_number_integer())
        return BigRat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    throw ParseError(std::string("expected an integer or \"p/q\" string in ") + what);
}

} // namespace

const char* AnyObject::type_name() const {
    switch (value.index()) {
    case 0: return "partition";
    case 1: return "tree";
    case 2: return "solid";
    case 3: return "poset";
    case 4: return "ideal";
    }
    return "?";
}

int AnyObject::object_size() const {
    return std::visit([](const auto& v) { return v.size(); }, value);
}

Json AnyObject::descriptor() const {
    Json d;
    d["type"] = type_name();
    d["size"] = object_size();
    if (const auto* p = std::get_if<Partition>(&value)) {
        d["parts"] = p->parts();
    } else if (const auto* t = std::get_if<RootedTree>(&value)) {
        d["parents"] = t->parent_array();
    } else if (const auto* s = std::get_if<SolidPartition>(&value)) {
        Json cubes = Json::array();
        for (const Cube& c : s->cubes())
            cubes.push_back({c.i, c.j, c.k});
        d["cubes"] = std::move(cubes);
    } else if (const auto* p = std::get_if<FinitePoset>(&value)) {
        Json covers = Json::array();
        for (const auto& [a, b] : p->covers())
            covers.push_back({a, b});
        d["covers"] = std::move(covers);
    } else if (const auto* i = std::get_if<TreeProductIdeal>(&value)) {
        Json factors = Json::array();
        for (const RootedTree& t : i->factors())
            factors.push_back(t.parent_array());
        d["factors"] = std::move(factors);
        d["elements"] = i->elements();
    }
    return d;
}

AnyObject parse_partition_any(const std::string& text) {
    std::string trimmed = text;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                                 [](char c) { return c == ' ' || c == '\n'; }),
                  trimmed.end());
    if (!trimmed.empty() && trimmed.front() == '[') {
        const Json j = parse_json(trimmed, "partition");
        std::vector<int> parts;
        for (const Json& e : j)
            parts.push_back(int_field(e, "partition"));
        return {Partition(std::move(parts)), std::nullopt};
    }
    return {Partition::parse(text), std::nullopt};
}

AnyObject parse_tree_any(const std::string& text) {
    return {RootedTree::parse(text), std::nullopt};
}

AnyObject parse_solid_any(const std::string& text) {
    const Json j = parse_json(text, "solid partition");
    if (j.is_object() && j.contains("matrix")) {
        std::vector<std::vector<int>> heights;
        for (const Json& row : j.at("matrix")) {
            std::vector<int>& r = heights.emplace_back();
            for (const Json& e : row)
                r.push_back(int_field(e, "height matrix"));
        }
        return {SolidPartition::from_matrix(heights), std::nullopt};
    }
    const Json& cubes_json = j.is_object() && j.contains("cubes") ? j.at("cubes") : j;
    if (!cubes_json.is_array())
        throw ParseError("solid partition JSON must be an array of [i,j,k] triples");
    CubeSet cubes;
    for (const Json& e : cubes_json) {
        if (!e.is_array() || e.size() != 3)
            throw ParseError("solid partition entries must be [i,j,k] triples");
        cubes.push_back({int_field(e[0], "cube"), int_field(e[1], "cube"),
                         int_field(e[2], "cube")});
    }
    return {SolidPartition(std::move(cubes)), std::nullopt};
}

AnyObject parse_poset_any(const std::string& text) {
    return {FinitePoset::parse(text), std::nullopt};
}

AnyObject parse_ideal_any(const std::string& text) {
    const Json j = parse_json(text, "tree-product ideal");
    if (!j.is_object() || !j.contains("factors") || !j.contains("elements"))
        throw ParseError("ideal JSON needs \"factors\" and \"elements\"");
    std::vector<RootedTree> factors;
    for (const Json& f : j.at("factors")) {
        std::vector<int> parents;
        for (const Json& e : f)
            parents.push_back(int_field(e, "factor parent array"));
        factors.emplace_back(std::move(parents));
    }
    std::vector<std::vector<int>> elements;
    for (const Json& e : j.at("elements")) {
        std::vector<int>& el = elements.emplace_back();
        for (const Json& v : e)
            el.push_back(int_field(v, "ideal element"));
    }
    AnyObject out{TreeProductIdeal(std::move(factors), std::move(elements)), std::nullopt};
    if (j.contains("weight")) {
        std::map<std::vector<int>, BigRat> table;
        for (const Json& entry : j.at("weight")) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
                throw ParseError("weight entries must be [[m1..md], value]");
            std::vector<int> shift;
            for (const Json& m : entry[0])
                shift.push_back(int_field(m, "weight shift"));
            table[std::move(shift)] = rat_field(entry[1], "weight value");
        }
        out.ideal_weight =
            ShiftWeight(std::get<TreeProductIdeal>(out.value).dims(), std::move(table));
    }
    return out;
}

WeightFunction parse_plane_weight(const std::string& spec) {
    if (spec == "ones")
        return WeightFunction::ones();
    if (spec == "axes")
        return WeightFunction::axes();
    const Json j = parse_json(spec, "weight function");
    std::map<std::pair<int, int>, BigRat> table;
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
            entry[0].size() != 2)
            throw ParseError("weight entries must be [[p,q], value]");
        table[{int_field(entry[0][0], "weight shift"), int_field(entry[0][1], "weight shift")}] =
            rat_field(entry[1], "weight value");
    }
    return WeightFunction::from_table(std::move(table));
}

ShiftWeight parse_shift_weight(const std::string& spec, int dims, int extent) {
    if (spec == "ones")
        return ShiftWeight::ones_box(dims, extent);
    if (spec == "axes")
        return ShiftWeight::axes_box(dims, extent, 1);
    if (spec == "faces")
        return ShiftWeight::axes_box(dims, extent, 2);
    const Json j = parse_json(spec, "shift weight");
    std::map<std::vector<int>, BigRat> table;
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
            throw ParseError("weight entries must be [[m1..md], value]");
        std::vector<int> shift;
        for (const Json& m : entry[0])
            shift.push_back(int_field(m, "weight shift"));
        table[std::move(shift)] = rat_field(entry[1], "weight value");
    }
    return ShiftWeight(dims, std::move(table));
}

CellSet parse_cell_subset(const std::string& text) {
    const Json j = parse_json(text, "cell subset");
    CellSet cells;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("cell subset entries must be [i,j] pairs");
        cells.push_back({int_field(e[0], "cell"), int_field(e[1], "cell")});
    }
    return cells;
}

CubeSet parse_cube_subset(const std::string& text) {
    const Json j = parse_json(text, "cube subset");
    CubeSet cubes;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw ParseError("cube subset entries must be [i,j,k] triples");
        cubes.push_back({int_field(e[0], "cube"), int_field(e[1], "cube"),
                         int_field(e[2], "cube")});
    }
    return cubes;
}

std::vector<int> parse_vertex_subset(const std::string& text) {
    const Json j = parse_json(text, "vertex subset");
    std::vector<int> vertices;
    for (const Json& e : j)
        vertices.push_back(int_field(e, "vertex"));
    return vertices;
}

std::vector<std::vector<int>> parse_element_subset(const std::string& text) {
    const Json j = parse_json(text, "element subset");
    std::vector<std::vector<int>> elements;
    for (const Json& e : j) {
        std::vector<int>& el = elements.emplace_back();
        for (const Json& v : e)
            el.push_back(int_field(v, "element"));
    }
    return elements;
}

Json json_of(const BigRat& value) { return to_string(value); }
Json json_of(const BigInt& value) { return to_string(value); }

Json json_of(const Multiset& values) {
    Json out = Json::array();
    for (const BigRat& v : values.values())
        out.push_back(to_string(v));
    return out;
}

} // namespace hookforge
