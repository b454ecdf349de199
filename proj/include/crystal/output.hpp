#pragma once

#include <string>

#include "crystal/explorer.hpp"
#include "crystal/serialize.hpp"

namespace crystal {

/// {nodes:[{id, kind, element, wt:{lambda,root}, eps:[..], phi:[..], frontier}],
///  edges:[{src,k,dst}]}; k is 1-based, -inf is the string "-inf".
Json graph_to_json(const CrystalGraph& g);

/// Node label is the pairing vector; edges carry label and color by k;
/// frontier nodes are dashed.
std::string graph_to_dot(const CrystalGraph& g);

/// "# complete=<bool>" line, a header, then one row per highest weight:
/// lambda coords, root coords, multiplicity (tab separated).
std::string decomposition_to_tsv(const DecompositionTable& table);
Json decomposition_to_json(const RootDatum& rd, const DecompositionTable& table);

}  // namespace crystal
