#include "crystal/explorer.hpp"

#include <numeric>
#include <stdexcept>

#include "crystal/quiver_model.hpp"

namespace crystal {

CrystalGraph model_crystal(const RootDatum& rd, const std::vector<Int>& lambda, std::size_t depth,
                           const GenerateOptions& options) {
  if (lambda.size() != rd.rank()) throw std::invalid_argument("weight length does not match the root datum");
  return generate(rd, {Element(model_highest(lambda))}, depth, options);
}

CrystalGraph tensor_graph(const RootDatum& rd, const std::vector<const CrystalGraph*>& factors,
                          const GenerateOptions& options) {
  std::vector<Element> generators;
  std::vector<std::size_t> odometer(factors.size(), 0);
  bool empty = factors.empty();
  for (const auto* f : factors) empty = empty || f->size() == 0;
  while (!empty) {
    TensorElement t;
    for (std::size_t i = 0; i < factors.size(); ++i) t.factors.push_back(factors[i]->nodes[odometer[i]].element);
    generators.emplace_back(std::move(t));
    if (generators.size() > options.node_budget) {
      CrystalGraph partial(rd);
      throw BudgetExceeded(options.node_budget, std::make_shared<const CrystalGraph>(std::move(partial)));
    }
    std::size_t pos = factors.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < factors[pos]->size()) break;
      odometer[pos] = 0;
      if (pos == 0) empty = true;
    }
  }
  return generate(rd, generators, 1, options);
}

std::vector<NodeId> highest_weight_elements(const CrystalGraph& g) {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < g.size(); ++id) {
    bool highest = true;
    for (const ExtInt e : g.nodes[id].eps) highest = highest && (e == ExtInt(0) || e.is_neg_infinity());
    if (highest) out.push_back(id);
  }
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::size_t> component_labels(const CrystalGraph& g) {
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const Edge& e : g.edges()) {
    const auto a = find_root(parent, e.src);
    const auto b = find_root(parent, e.dst);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (std::size_t i = 0; i < g.size(); ++i) parent[i] = find_root(parent, i);
  return parent;
}

DecompositionTable decompose(const CrystalGraph& g) {
  const auto labels = component_labels(g);
  std::vector<std::size_t> sizes(g.size(), 0);
  std::vector<bool> cut(g.size(), false);
  for (NodeId id = 0; id < g.size(); ++id) {
    ++sizes[labels[id]];
    if (g.nodes[id].frontier) cut[labels[id]] = true;
  }

  DecompositionTable table;
  table.depth = g.depth_bound;
  table.complete = !g.has_frontier();
  for (NodeId id : highest_weight_elements(g)) {
    Component c{id, g.nodes[id].wt, sizes[labels[id]], !cut[labels[id]]};
    if (c.complete) {
      ++table.multiplicities[c.weight];
      table.components.push_back(std::move(c));
    } else {
      table.complete = false;
      table.flagged.push_back(std::move(c));
    }
  }
  return table;
}

IsomorphismResult is_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  const auto hw1 = highest_weight_elements(g1);
  const auto hw2 = highest_weight_elements(g2);
  if (hw1.size() != 1 || hw2.size() != 1)
    throw std::invalid_argument("is_isomorphic needs exactly one highest-weight element in each graph");
  if (!(g1.root_datum() == g2.root_datum())) return {false, {}, "root data differ"};

  IsomorphismResult result;
  result.witness.assign(g1.size(), std::nullopt);
  std::vector<std::optional<NodeId>> inverse(g2.size());
  auto fail = [&result](std::string why) {
    result.isomorphic = false;
    result.reason = std::move(why);
    return result;
  };

  std::vector<std::pair<NodeId, NodeId>> queue{{hw1[0], hw2[0]}};
  result.witness[hw1[0]] = hw2[0];
  inverse[hw2[0]] = hw1[0];
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [a, b] = queue[head];
    const Node& x = g1.nodes[a];
    const Node& y = g2.nodes[b];
    if (x.wt != y.wt) return fail("weights differ at node " + std::to_string(a));
    if (x.eps != y.eps || x.phi != y.phi) return fail("eps/phi differ at node " + std::to_string(a));
    if (x.frontier != y.frontier) return fail("frontier mismatch at node " + std::to_string(a));
    if (x.frontier) continue;
    for (std::size_t k = 0; k < g1.rank(); ++k) {
      for (const auto& [lx, ly] : {std::pair{x.lower_to[k], y.lower_to[k]}, std::pair{x.raise_to[k], y.raise_to[k]}}) {
        if (lx.is_node() != ly.is_node()) return fail("edge mismatch at node " + std::to_string(a));
        if (!lx.is_node()) continue;
        const NodeId u = lx.node();
        const NodeId v = ly.node();
        if (result.witness[u]) {
          if (*result.witness[u] != v) return fail("inconsistent correspondence at node " + std::to_string(u));
          continue;
        }
        if (inverse[v]) return fail("correspondence is not injective at node " + std::to_string(u));
        result.witness[u] = v;
        inverse[v] = u;
        queue.emplace_back(u, v);
      }
    }
  }
  if (queue.size() != g1.size() || queue.size() != g2.size()) return fail("graphs are not both connected and equal in size");

  const CheckReport strict = check_strict_morphism(result.witness, g1, g2);
  if (!strict.ok()) return fail("witness is not a strict morphism: " + strict.violations.front().detail);
  if (!is_injective(result.witness)) return fail("witness is not injective");
  result.isomorphic = true;
  return result;
}

std::map<Weight, Int> character(const CrystalGraph& g) {
  std::map<Weight, Int> out;
  for (const Node& node : g.nodes) ++out[node.wt];
  return out;
}

}  // namespace crystal
