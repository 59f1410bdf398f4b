#ifndef HOOKFORGE_IO_HPP
#define HOOKFORGE_IO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hookforge/poset.hpp"
#include "hookforge/solid.hpp"
#include "hookforge/tree_product.hpp"
#include "hookforge/trees.hpp"
#include "hookforge/young.hpp"

namespace hookforge {

using Json = nlohmann::json;

/// One of the five object kinds the command surface accepts.
struct AnyObject {
    std::variant<Partition, RootedTree, SolidPartition, FinitePoset, TreeProductIdeal> value;
    std::optional<ShiftWeight> ideal_weight; // carried along from the ideal's JSON

    const char* type_name() const;
    int object_size() const;
    Json descriptor() const;
};

// "4,3,1" or a JSON array of integers; empty text is the empty partition
AnyObject parse_partition_any(const std::string& text);

// parent array with 0 for the root, "0,1,1,1,2,3,5,5"
AnyObject parse_tree_any(const std::string& text);

// JSON array of [i,j,k] triples, or {"cubes": [...]}, or the
// plane-partition height form {"matrix": [[...], ...]}
AnyObject parse_solid_any(const std::string& text);

// first line n, then "a < b" cover lines
AnyObject parse_poset_any(const std::string& text);

// {"factors": [[parent arrays]...], "elements": [[v1..vd]...],
//  "weight": [[[m1..md], value]...]} with the weight optional
AnyObject parse_ideal_any(const std::string& text);

// "ones", "axes", or a JSON array of [[p,q], value] entries
WeightFunction parse_plane_weight(const std::string& spec);

// "ones", "axes", "faces", or a JSON array of [[m1..md], value] entries;
// presets are materialized over the box {0..extent}^dims
ShiftWeight parse_shift_weight(const std::string& spec, int dims, int extent);

CellSet parse_cell_subset(const std::string& text);
CubeSet parse_cube_subset(const std::string& text);
std::vector<int> parse_vertex_subset(const std::string& text);
std::vector<std::vector<int>> parse_element_subset(const std::string& text);

// exact rationals travel as decimal strings ("p" or "p/q")
Json json_of(const BigRat& value);
Json json_of(const BigInt& value);
Json json_of(const Multiset& values); // descending array of strings

} // namespace hookforge

#endif
