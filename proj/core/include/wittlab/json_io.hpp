#pragma once

#include <nlohmann/json.hpp>

#include <string_view>
#include <utility>
#include <vector>

#include "wittlab/algebra.hpp"
#include "wittlab/linear_map_table.hpp"

namespace wittlab {

// Output uses ordered_json so keys keep insertion order and the bytes are
// deterministic.
using Json = nlohmann::ordered_json;

// {"algebra": "...", "truncation": {"min": lo, "max": hi},
//  "images": {"<k>": [[index, "p/q"], ...], ...}}
Json to_json(const LinearMapTable& d);
Json to_json(const SparseVector& v);  // [[index, "p/q"], ...]

// Every index of the truncation must have an image key; throws ParseError on
// malformed input and PreconditionError on semantic violations.
LinearMapTable table_from_json(std::string_view text);
LinearMapTable table_from_json_value(const nlohmann::json& j);

// {"algebra": "thin", "pairs": [["<element>", "<element>"], ...]}
struct PairsFile {
  AlgebraKind kind;
  std::vector<std::pair<Element, Element>> pairs;
};

PairsFile pairs_from_json(std::string_view text);

}  // namespace wittlab
