#include "crystal/output.hpp"

#include <array>
#include <sstream>

namespace crystal {

namespace {

Json ext_to_json(ExtInt v) {
  if (v.is_neg_infinity()) return "-inf";
  return v.value();
}

Json ext_vector(const std::vector<ExtInt>& xs) {
  Json out = Json::array();
  for (ExtInt x : xs) out.push_back(ext_to_json(x));
  return out;
}

constexpr std::array<const char*, 8> kPalette{"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};

}  // namespace

Json graph_to_json(const CrystalGraph& g) {
  Json nodes = Json::array();
  for (NodeId id = 0; id < g.size(); ++id) {
    const Node& node = g.nodes[id];
    nodes.push_back(Json{{"id", id},
                         {"kind", node.element.kind()},
                         {"element", element_to_json(node.element)},
                         {"wt", weight_to_json(node.wt)},
                         {"eps", ext_vector(node.eps)},
                         {"phi", ext_vector(node.phi)},
                         {"frontier", node.frontier}});
  }
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json{{"src", e.src}, {"k", e.k + 1}, {"dst", e.dst}});
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  node [shape=box];\n";
  for (NodeId id = 0; id < g.size(); ++id) {
    const Node& node = g.nodes[id];
    out << "  n" << id << " [label=\"(" << format_ints(g.root_datum().pairings(node.wt)) << ")\"";
    if (node.frontier) out << ", style=dashed";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.k + 1 << "\", color=" << kPalette[e.k % kPalette.size()]
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string decomposition_to_tsv(const DecompositionTable& table) {
  std::ostringstream out;
  out << "# complete=" << (table.complete ? "true" : "false") << "\n";
  out << "lambda\troot\tmultiplicity\n";
  for (const auto& [weight, mult] : table.multiplicities)
    out << format_ints(weight.lambda) << '\t' << format_ints(weight.root) << '\t' << mult << '\n';
  return out.str();
}

Json decomposition_to_json(const RootDatum& rd, const DecompositionTable& table) {
  Json entries = Json::array();
  for (const auto& [weight, mult] : table.multiplicities) {
    entries.push_back(Json{{"lambda", weight.lambda},
                           {"root", weight.root},
                           {"pairing", rd.pairings(weight)},
                           {"multiplicity", mult}});
  }
  Json flagged = Json::array();
  for (const Component& c : table.flagged) flagged.push_back(Json{{"node", c.highest}, {"wt", weight_to_json(c.weight)}});
  return Json{{"complete", table.complete},
              {"depth", table.depth},
              {"entries", std::move(entries)},
              {"flagged", std::move(flagged)}};
}

}  // namespace crystal
