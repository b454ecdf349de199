#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/graph.hpp"

namespace crystal {

struct Violation {
  NodeId node = 0;
  std::size_t k = 0;
  /// "a".."e" for the crystal axioms, "normal", "morphism", "strict".
  std::string rule;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Violations are data; assertions needing data beyond the frontier are
/// skipped and counted.
struct CheckReport {
  std::vector<Violation> violations;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& rule) const;
  void merge(CheckReport other);
};

/// For every non-frontier node b and every k:
///   (a) phi_k = eps_k + <h_k, wt>  (-inf on both sides or neither),
///   (b) e~_k b = b'  =>  wt + alpha_k, eps - 1, phi + 1,
///   (c) f~_k b = b'  =>  wt - alpha_k, eps + 1, phi - 1,
///   (d) f~_k b = b' iff e~_k b' = b,
///   (e) phi_k = -inf  =>  e~_k b = f~_k b = 0.
CheckReport check_axioms(const CrystalGraph& g);
CheckReport check_axioms_serial(const CrystalGraph& g);

/// eps_k / phi_k equal the lengths of the e~_k / f~_k strings. Strings that
/// leave the explored region are skipped.
CheckReport check_normal(const CrystalGraph& g);
CheckReport check_normal_serial(const CrystalGraph& g);

/// Node map from g1 into g2; std::nullopt means "not mapped".
using NodeMap = std::vector<std::optional<NodeId>>;

/// Resolves an element-level map into g2 node ids. Images missing from g2
/// are left unmapped.
template <class Fn>
NodeMap node_map_from(const CrystalGraph& g1, const CrystalGraph& g2, Fn&& fn) {
  NodeMap out(g1.size());
  for (NodeId id = 0; id < g1.size(); ++id) {
    if (auto image = fn(g1.nodes[id].element)) out[id] = g2.find(*image);
  }
  return out;
}

/// wt/eps/phi preservation and unconditional commutation with e~_k, f~_k
/// (0 maps to 0). Throws std::invalid_argument when a non-frontier node of
/// g1 is unmapped.
CheckReport check_strict_morphism(const NodeMap& map, const CrystalGraph& g1, const CrystalGraph& g2);

bool is_injective(const NodeMap& map);

}  // namespace crystal
