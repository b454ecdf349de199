#include <doctest.h>

#include "crystal/checks.hpp"
#include "crystal/explorer.hpp"
#include "crystal/quiver_model.hpp"

using namespace crystal;

TEST_CASE("T alone passes the axioms") {
  const auto a1 = RootDatum::preset("A1");
  const auto g = generate(a1, {Element(TElement{Weight({1}, {0})})}, 5);
  CHECK(g.size() == 1);
  CHECK(g.edges().empty());
  const auto report = check_axioms(g);
  CHECK(report.ok());
  CHECK(report.skipped == 0);
}

TEST_CASE("B_1 window satisfies the axioms but is not normal") {
  const auto a1 = RootDatum::preset("A1");
  const auto g = generate(a1, {Element(BkElement{0, 0})}, 3);
  CHECK(g.size() == 7);
  CHECK(g.frontier_count() == 2);
  const auto axioms = check_axioms(g);
  CHECK(axioms.ok());
  // two frontier nodes, plus the inverse check on each edge into them
  CHECK(axioms.skipped == 4);
  const auto normal = check_normal(g);
  CHECK_FALSE(normal.ok());
  CHECK(normal.count("normal") > 0);
}

TEST_CASE("forged edge violates rule d once") {
  const auto a1 = RootDatum::preset("A1");
  auto g = model_crystal(a1, {2}, 10);
  REQUIRE(g.size() == 3);
  NodeId middle = 0;
  NodeId bottom = 0;
  for (NodeId id = 0; id < g.size(); ++id) {
    if (g.nodes[id].depth == 1) middle = id;
    if (g.nodes[id].depth == 2) bottom = id;
  }
  // f~ of the lowest node was 0; e~ of the middle node is the top node.
  g.nodes[bottom].lower_to[0] = Link::to(middle);
  const auto report = check_axioms(g);
  CHECK(report.count("d") == 1);
  CHECK(check_axioms_serial(g).violations == report.violations);
}

TEST_CASE("B(L) in A1 is normal with nothing skipped") {
  const auto a1 = RootDatum::preset("A1");
  const auto g = model_crystal(a1, {1}, 5);
  const auto report = check_normal(g);
  CHECK(report.ok());
  CHECK(report.skipped == 0);
}

TEST_CASE("strict morphisms") {
  const auto a2 = RootDatum::preset("A2");
  const auto g = model_crystal(a2, {1, 0}, 10);
  NodeMap identity(g.size());
  for (NodeId id = 0; id < g.size(); ++id) identity[id] = id;
  CHECK(check_strict_morphism(identity, g, g).ok());
  CHECK(is_injective(identity));

  NodeMap shifted = identity;
  const NodeId top = *g.find(Element(model_highest({1, 0})));
  shifted[top] = g.nodes[top].lower_to[0].node();
  const auto report = check_strict_morphism(shifted, g, g);
  CHECK(report.count("morphism") > 0);
  CHECK_FALSE(is_injective(shifted));

  NodeMap missing = identity;
  missing[top] = std::nullopt;
  CHECK_THROWS(check_strict_morphism(missing, g, g));
}
