#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal/checks.hpp"
#include "crystal/graph.hpp"

namespace crystal {

/// B(lambda) through the profile model with all of lambda in slot 0.
CrystalGraph model_crystal(const RootDatum& rd, const std::vector<Int>& lambda, std::size_t depth,
                           const GenerateOptions& options = {});

/// The tensor product of explored crystals: every combination of nodes
/// (leftmost factor varies slowest) is a generator and is expanded once.
CrystalGraph tensor_graph(const RootDatum& rd, const std::vector<const CrystalGraph*>& factors,
                          const GenerateOptions& options = {});

/// Nodes with eps_k in {0, -inf} for every k.
std::vector<NodeId> highest_weight_elements(const CrystalGraph& g);

/// Connected components of the underlying undirected graph; label per node.
std::vector<std::size_t> component_labels(const CrystalGraph& g);

struct Component {
  NodeId highest = 0;
  Weight weight;
  std::size_t size = 0;
  bool complete = true;  // no frontier node in the component
};

struct DecompositionTable {
  std::map<Weight, Int> multiplicities;  // counted components only
  std::vector<Component> components;     // one per highest-weight element
  std::vector<Component> flagged;        // components cut by the frontier
  std::size_t depth = 0;
  bool complete = true;
};

/// Counts highest-weight elements per weight. Components that touch the
/// frontier are moved to `flagged` and never counted.
DecompositionTable decompose(const CrystalGraph& g);

struct IsomorphismResult {
  bool isomorphic = false;
  NodeMap witness;  // g1 node -> g2 node
  std::string reason;
};

/// Matches two connected highest-weight crystals by a simultaneous BFS from
/// their unique highest-weight elements along colored edges, then confirms
/// the witness with check_strict_morphism and injectivity. Frontier nodes
/// must correspond to frontier nodes; their missing edges are not compared.
/// Throws std::invalid_argument unless each graph has exactly one
/// highest-weight element.
IsomorphismResult is_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

/// Weight multiset of the nodes.
std::map<Weight, Int> character(const CrystalGraph& g);

}  // namespace crystal
