#pragma once

#include <string>

#include <json.hpp>

#include "crystal/element.hpp"

namespace crystal {

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {"Bk":{"k":1,"n":-2}}, {"T":{"lambda":[..],"root":[..]}}, {"S0":{}},
/// {"Tensor":[..]} or {"Model":{"w":{"0":[1,0]},"v":{"1,1":1}}}.
/// Vertex indices are 1-based in JSON.
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

/// {"w":{"<p>":[...]}, "v":{"<k>,<p>":dim}}, keys in k-then-p ascending order.
Json model_to_json(const ModelElement& x);
ModelElement model_from_json(const Json& j);

/// Compact dump of element_to_json; injective on distinct elements.
std::string canonical(const Element& x);

std::string format_ints(const std::vector<Int>& xs, char sep = ',');

/// {"preset": "A3"} or {"adjacency": [[...], ...]}.
RootDatum root_datum_from_json(const Json& j);

/// Reads a root datum file. Files ending in .toml may use `preset = "A3"` or
/// `adjacency = [[0, 1], [1, 0]]` (values may span lines, # starts a comment);
/// anything else is parsed as JSON.
RootDatum load_root_datum(const std::string& path);

}  // namespace crystal
