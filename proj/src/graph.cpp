#include "crystal/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>

#include "crystal/ops.hpp"

namespace crystal {

NodeId Link::node() const {
  if (raw_ < 0) throw std::logic_error("link does not point at a node");
  return static_cast<NodeId>(raw_);
}

std::optional<NodeId> CrystalGraph::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId CrystalGraph::insert_bare(Element x, std::size_t depth) {
  const NodeId id = nodes.size();
  auto [it, inserted] = index_.emplace(x, id);
  if (!inserted) return it->second;
  Node node;
  node.element = std::move(x);
  node.depth = depth;
  node.raise_to.assign(rank(), Link::unexplored());
  node.lower_to.assign(rank(), Link::unexplored());
  nodes.push_back(std::move(node));
  return id;
}

void CrystalGraph::compute_stats(NodeId id) {
  Node& node = nodes[id];
  node.wt = wt(rd_, node.element);
  node.eps.resize(rank());
  node.phi.resize(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    node.eps[k] = eps(rd_, node.element, k);
    node.phi[k] = phi(rd_, node.element, k);
  }
}

NodeId CrystalGraph::insert(Element x, std::size_t depth) {
  const std::size_t before = nodes.size();
  const NodeId id = insert_bare(std::move(x), depth);
  if (nodes.size() != before) compute_stats(id);
  return id;
}

std::vector<Edge> CrystalGraph::edges() const {
  std::vector<Edge> out;
  for (NodeId id = 0; id < nodes.size(); ++id) {
    const Node& node = nodes[id];
    for (std::size_t k = 0; k < rank(); ++k) {
      if (node.lower_to[k].is_node()) out.push_back({id, k, node.lower_to[k].node()});
      if (node.raise_to[k].is_node()) out.push_back({node.raise_to[k].node(), k, id});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t CrystalGraph::frontier_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.frontier; }));
}

BudgetExceeded::BudgetExceeded(std::size_t budget, std::shared_ptr<const CrystalGraph> partial)
    : std::runtime_error("node budget of " + std::to_string(budget) + " exceeded"),
      budget_(budget),
      partial_(std::move(partial)) {}

std::size_t node_budget_from_env() {
  constexpr std::size_t kDefault = 1'000'000;
  const char* raw = std::getenv("CRYSTAL_NODE_BUDGET");
  if (raw == nullptr) return kDefault;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefault;
  return value;
}

namespace {

// Operator images for one node, laid out as [f~_0, e~_0, f~_1, e~_1, ...].
using Images = std::vector<std::optional<Element>>;

Images apply_all(const RootDatum& rd, const Element& x) {
  Images out;
  out.reserve(2 * rd.rank());
  for (std::size_t k = 0; k < rd.rank(); ++k) {
    out.push_back(lower(rd, x, k));
    out.push_back(raise(rd, x, k));
  }
  return out;
}

CrystalGraph seed_graph(const RootDatum& rd, const std::vector<Element>& generators, std::size_t depth) {
  CrystalGraph g(rd);
  g.depth_bound = depth;
  for (const Element& x : generators) {
    const std::size_t before = g.size();
    const NodeId id = g.insert(x, 0);
    if (g.size() != before) g.generators.push_back(id);
  }
  return g;
}

void check_budget(CrystalGraph& g, std::size_t budget) {
  if (g.size() > budget) throw BudgetExceeded(budget, std::make_shared<const CrystalGraph>(std::move(g)));
}

// Links the images of `id` into the graph, appending new node ids to `fresh`.
void merge_images(CrystalGraph& g, NodeId id, Images& images, std::size_t depth, bool compute,
                  std::vector<NodeId>& fresh) {
  for (std::size_t k = 0; k < g.rank(); ++k) {
    for (int which = 0; which < 2; ++which) {
      auto& image = images[2 * k + static_cast<std::size_t>(which)];
      Link link = Link::zero();
      if (image) {
        const std::size_t before = g.size();
        const NodeId target = compute ? g.insert(std::move(*image), depth + 1) : g.insert_bare(std::move(*image), depth + 1);
        if (g.size() != before) fresh.push_back(target);
        link = Link::to(target);
      }
      (which == 0 ? g.nodes[id].lower_to[k] : g.nodes[id].raise_to[k]) = link;
    }
  }
  g.nodes[id].frontier = false;
}

}  // namespace

CrystalGraph generate_serial(const RootDatum& rd, const std::vector<Element>& generators, std::size_t depth,
                             const GenerateOptions& options) {
  CrystalGraph g = seed_graph(rd, generators, depth);
  check_budget(g, options.node_budget);
  std::size_t level_begin = 0;
  std::size_t level_end = g.size();
  std::vector<NodeId> fresh;
  for (std::size_t d = 0; d < depth && level_begin < level_end; ++d) {
    for (NodeId id = level_begin; id < level_end; ++id) {
      Images images = apply_all(rd, g.nodes[id].element);
      merge_images(g, id, images, d, true, fresh);
      check_budget(g, options.node_budget);
    }
    level_begin = level_end;
    level_end = g.size();
  }
  return g;
}

CrystalGraph generate(const RootDatum& rd, const std::vector<Element>& generators, std::size_t depth,
                      const GenerateOptions& options) {
  CrystalGraph g = seed_graph(rd, generators, depth);
  check_budget(g, options.node_budget);
  std::size_t level_begin = 0;
  std::size_t level_end = g.size();
  for (std::size_t d = 0; d < depth && level_begin < level_end; ++d) {
    const auto count = static_cast<std::ptrdiff_t>(level_end - level_begin);
    std::vector<Images> images(static_cast<std::size_t>(count));
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        images[static_cast<std::size_t>(i)] = apply_all(rd, g.nodes[level_begin + static_cast<std::size_t>(i)].element);
      } catch (...) {
#pragma omp critical(crystal_generate_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    // Merge in node order so ids match generate_serial.
    std::vector<NodeId> fresh;
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const NodeId id = level_begin + static_cast<std::size_t>(i);
      merge_images(g, id, images[static_cast<std::size_t>(i)], d, false, fresh);
      if (g.size() > options.node_budget) break;
    }

    const auto fresh_count = static_cast<std::ptrdiff_t>(fresh.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < fresh_count; ++i) {
      try {
        g.compute_stats(fresh[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical(crystal_generate_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    check_budget(g, options.node_budget);

    level_begin = level_end;
    level_end = g.size();
  }
  return g;
}

bool same_graph(const CrystalGraph& a, const CrystalGraph& b) {
  if (!(a.root_datum() == b.root_datum()) || a.size() != b.size() || a.generators != b.generators ||
      a.depth_bound != b.depth_bound)
    return false;
  for (NodeId id = 0; id < a.size(); ++id) {
    const Node& x = a.nodes[id];
    const Node& y = b.nodes[id];
    if (!(x.element == y.element) || !(x.wt == y.wt) || x.eps != y.eps || x.phi != y.phi ||
        x.raise_to != y.raise_to || x.lower_to != y.lower_to || x.depth != y.depth || x.frontier != y.frontier)
      return false;
  }
  return true;
}

}  // namespace crystal
