#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystal/element.hpp"

namespace crystal {

using NodeId = std::size_t;

/// Result of e~_k / f~_k at a node: a node id, the formal 0, or not
/// computed because the node lies on the frontier.
class Link {
 public:
  static constexpr Link zero() { return Link(kZero); }
  static constexpr Link unexplored() { return Link(kUnexplored); }
  static constexpr Link to(NodeId id) { return Link(static_cast<std::int64_t>(id)); }
  constexpr Link() = default;

  constexpr bool is_node() const { return raw_ >= 0; }
  constexpr bool is_zero() const { return raw_ == kZero; }
  constexpr bool is_unexplored() const { return raw_ == kUnexplored; }
  NodeId node() const;

  friend constexpr bool operator==(Link, Link) = default;

 private:
  static constexpr std::int64_t kZero = -1;
  static constexpr std::int64_t kUnexplored = -2;
  constexpr explicit Link(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = kUnexplored;
};

struct Node {
  Element element;
  Weight wt;
  std::vector<ExtInt> eps;
  std::vector<ExtInt> phi;
  std::vector<Link> raise_to;  // e~_k
  std::vector<Link> lower_to;  // f~_k
  std::size_t depth = 0;       // BFS distance from the generators
  bool frontier = true;        // operators not applied
};

struct Edge {
  NodeId src;
  std::size_t k;
  NodeId dst;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Explored part of a crystal. Edge (x, k, y) means f~_k x = y.
class CrystalGraph {
 public:
  explicit CrystalGraph(RootDatum rd) : rd_(std::move(rd)) {}

  const RootDatum& root_datum() const { return rd_; }
  std::size_t rank() const { return rd_.rank(); }
  std::size_t size() const { return nodes.size(); }

  std::optional<NodeId> find(const Element& x) const;
  /// Inserts an unexpanded node with its weight and statistics computed.
  NodeId insert(Element x, std::size_t depth);
  /// Inserts a node whose statistics are filled in later by the caller.
  NodeId insert_bare(Element x, std::size_t depth);
  void compute_stats(NodeId id);

  /// Sorted by (src, k, dst); includes every edge seen from an expanded end.
  std::vector<Edge> edges() const;
  std::size_t frontier_count() const;
  bool has_frontier() const { return frontier_count() != 0; }

  std::vector<Node> nodes;
  std::vector<NodeId> generators;
  std::size_t depth_bound = 0;

 private:
  RootDatum rd_;
  std::unordered_map<Element, NodeId, ElementHash> index_;
};

/// Thrown when generation exceeds its node budget; carries the partial graph.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t budget, std::shared_ptr<const CrystalGraph> partial);
  std::size_t budget() const { return budget_; }
  const std::shared_ptr<const CrystalGraph>& partial() const { return partial_; }

 private:
  std::size_t budget_;
  std::shared_ptr<const CrystalGraph> partial_;
};

struct GenerateOptions {
  std::size_t node_budget = 1'000'000;
};

/// CRYSTAL_NODE_BUDGET if set and valid, else 10^6.
std::size_t node_budget_from_env();

/// Breadth-first closure of the generators under every f~_k and e~_k, at most
/// `depth` operator applications away. Nodes at distance `depth` stay on the
/// frontier. Node ids follow discovery order: generators first, then by
/// parent id, then by k, f~ before e~.
CrystalGraph generate(const RootDatum& rd, const std::vector<Element>& generators, std::size_t depth,
                      const GenerateOptions& options = {});

/// Single-threaded reference for generate(); produces an identical graph.
CrystalGraph generate_serial(const RootDatum& rd, const std::vector<Element>& generators, std::size_t depth,
                             const GenerateOptions& options = {});

/// Graphs agree node by node (element, stats, links, frontier) and on generators.
bool same_graph(const CrystalGraph& a, const CrystalGraph& b);

}  // namespace crystal
