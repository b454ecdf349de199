#include "crystal/checks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crystal {

std::size_t CheckReport::count(const std::string& rule) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; }));
}

void CheckReport::merge(CheckReport other) {
  for (auto& v : other.violations) violations.push_back(std::move(v));
  checked += other.checked;
  skipped += other.skipped;
}

namespace {

void axioms_at(const CrystalGraph& g, NodeId id, CheckReport& report) {
  const Node& b = g.nodes[id];
  if (b.frontier) {
    ++report.skipped;
    return;
  }
  const RootDatum& rd = g.root_datum();
  auto fail = [&](std::size_t k, const char* rule, std::string detail) {
    report.violations.push_back({id, k, rule, std::move(detail)});
  };
  for (std::size_t k = 0; k < g.rank(); ++k) {
    ++report.checked;
    const Int pair = rd.pairing(k, b.wt);
    if (b.eps[k].is_finite() != b.phi[k].is_finite())
      fail(k, "a", "exactly one of eps, phi is -inf");
    else if (b.phi[k] != b.eps[k] + pair)
      fail(k, "a", "phi " + b.phi[k].to_string() + " != eps " + b.eps[k].to_string() + " + " + std::to_string(pair));

    if (b.phi[k].is_neg_infinity() && (!b.raise_to[k].is_zero() || !b.lower_to[k].is_zero()))
      fail(k, "e", "phi is -inf but an operator is defined");

    if (b.raise_to[k].is_node()) {
      const Node& up = g.nodes[b.raise_to[k].node()];
      if (up.wt != add_alpha(b.wt, k)) fail(k, "b", "wt(e~ b) != wt(b) + alpha");
      if (up.eps[k] != b.eps[k] - 1) fail(k, "b", "eps(e~ b) != eps(b) - 1");
      if (up.phi[k] != b.phi[k] + 1) fail(k, "b", "phi(e~ b) != phi(b) + 1");
      if (up.frontier)
        ++report.skipped;
      else if (up.lower_to[k] != Link::to(id))
        fail(k, "d", "e~ b = b' but f~ b' != b");
    }
    if (b.lower_to[k].is_node()) {
      const Node& down = g.nodes[b.lower_to[k].node()];
      if (down.wt != subtract_alpha(b.wt, k)) fail(k, "c", "wt(f~ b) != wt(b) - alpha");
      if (down.eps[k] != b.eps[k] + 1) fail(k, "c", "eps(f~ b) != eps(b) + 1");
      if (down.phi[k] != b.phi[k] - 1) fail(k, "c", "phi(f~ b) != phi(b) - 1");
      if (down.frontier)
        ++report.skipped;
      else if (down.raise_to[k] != Link::to(id))
        fail(k, "d", "f~ b = b' but e~ b' != b");
    }
  }
}

// Walks `steps` applications along `links`, then expects the formal 0.
enum class StringResult { ok, too_short, too_long, unknown };

StringResult walk_string(const CrystalGraph& g, NodeId start, std::size_t k, Int steps,
                         std::vector<Link> Node::*links) {
  NodeId cur = start;
  for (Int i = 0; i <= steps; ++i) {
    const Link next = (g.nodes[cur].*links)[k];
    if (next.is_unexplored()) return StringResult::unknown;
    if (i == steps) return next.is_zero() ? StringResult::ok : StringResult::too_long;
    if (next.is_zero()) return StringResult::too_short;
    cur = next.node();
  }
  return StringResult::unknown;
}

void normal_at(const CrystalGraph& g, NodeId id, CheckReport& report) {
  const Node& b = g.nodes[id];
  if (b.frontier) {
    ++report.skipped;
    return;
  }
  for (std::size_t k = 0; k < g.rank(); ++k) {
    ++report.checked;
    bool skipped = false;
    auto one = [&](ExtInt value, std::vector<Link> Node::*links, const char* name) {
      if (value.is_neg_infinity()) {
        report.violations.push_back({id, k, "normal", std::string(name) + " is -inf"});
        return;
      }
      if (value.value() < 0) {
        report.violations.push_back({id, k, "normal", std::string(name) + " = " + value.to_string() + " < 0"});
        return;
      }
      switch (walk_string(g, id, k, value.value(), links)) {
        case StringResult::ok: break;
        case StringResult::unknown: skipped = true; break;
        case StringResult::too_short:
          report.violations.push_back({id, k, "normal", std::string(name) + " exceeds the string length"});
          break;
        case StringResult::too_long:
          report.violations.push_back({id, k, "normal", std::string(name) + " is below the string length"});
          break;
      }
    };
    one(b.eps[k], &Node::raise_to, "eps");
    one(b.phi[k], &Node::lower_to, "phi");
    if (skipped) ++report.skipped;
  }
}

template <class Body>
CheckReport run_serial(const CrystalGraph& g, Body body) {
  CheckReport report;
  for (NodeId id = 0; id < g.size(); ++id) body(g, id, report);
  return report;
}

// Per-node reports merged in node order, so the result equals run_serial.
template <class Body>
CheckReport run_parallel(const CrystalGraph& g, Body body) {
  const auto n = static_cast<std::ptrdiff_t>(g.size());
  std::vector<CheckReport> partial(g.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(g, static_cast<NodeId>(i), partial[static_cast<std::size_t>(i)]);
  CheckReport report;
  for (auto& r : partial) report.merge(std::move(r));
  return report;
}

}  // namespace

CheckReport check_axioms(const CrystalGraph& g) { return run_parallel(g, axioms_at); }
CheckReport check_axioms_serial(const CrystalGraph& g) { return run_serial(g, axioms_at); }
CheckReport check_normal(const CrystalGraph& g) { return run_parallel(g, normal_at); }
CheckReport check_normal_serial(const CrystalGraph& g) { return run_serial(g, normal_at); }

CheckReport check_strict_morphism(const NodeMap& map, const CrystalGraph& g1, const CrystalGraph& g2) {
  if (map.size() != g1.size()) throw std::invalid_argument("node map size does not match the source graph");
  CheckReport report;
  for (NodeId id = 0; id < g1.size(); ++id) {
    const Node& b = g1.nodes[id];
    if (b.frontier) {
      ++report.skipped;
      continue;
    }
    if (!map[id]) throw std::invalid_argument("map undefined on node " + std::to_string(id));
    const Node& c = g2.nodes.at(*map[id]);
    if (c.wt != b.wt) report.violations.push_back({id, 0, "morphism", "weight not preserved"});
    for (std::size_t k = 0; k < g1.rank(); ++k) {
      ++report.checked;
      if (c.eps[k] != b.eps[k]) report.violations.push_back({id, k, "morphism", "eps not preserved"});
      if (c.phi[k] != b.phi[k]) report.violations.push_back({id, k, "morphism", "phi not preserved"});

      auto commute = [&](Link src, Link dst, const char* op) {
        // psi(op b) versus op psi(b)
        std::optional<std::optional<NodeId>> mapped;  // outer empty: unknown
        if (src.is_zero()) {
          mapped = std::optional<NodeId>{};
        } else if (src.is_node() && map[src.node()]) {
          mapped = std::optional<NodeId>{*map[src.node()]};
        }
        if (!mapped || dst.is_unexplored()) {
          ++report.skipped;
          return;
        }
        const std::optional<NodeId> direct = dst.is_zero() ? std::nullopt : std::optional<NodeId>{dst.node()};
        if (*mapped != direct)
          report.violations.push_back({id, k, "strict", std::string(op) + " does not commute with the map"});
      };
      commute(b.raise_to[k], c.raise_to[k], "e~");
      commute(b.lower_to[k], c.lower_to[k], "f~");
    }
  }
  return report;
}

bool is_injective(const NodeMap& map) {
  std::set<NodeId> seen;
  for (const auto& image : map)
    if (image && !seen.insert(*image).second) return false;
  return true;
}

}  // namespace crystal
