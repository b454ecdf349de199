#include <doctest.h>

#include "crystal/checks.hpp"
#include "crystal/explorer.hpp"
#include "crystal/quiver_model.hpp"

using namespace crystal;

TEST_CASE("parallel generation matches the serial reference") {
  for (const auto& [name, lambda, depth] :
       {std::tuple{"A3", std::vector<Int>{1, 1, 1}, 100}, std::tuple{"D4", std::vector<Int>{0, 1, 0, 0}, 100},
        std::tuple{"affineA1", std::vector<Int>{1, 1}, 5}}) {
    const auto rd = RootDatum::preset(name);
    const std::vector<Element> gens{Element(model_highest(lambda))};
    const auto parallel = generate(rd, gens, depth);
    const auto serial = generate_serial(rd, gens, depth);
    CHECK(same_graph(parallel, serial));
    CHECK(check_axioms(parallel).violations == check_axioms_serial(serial).violations);
    CHECK(check_normal(parallel).skipped == check_normal_serial(serial).skipped);
  }
}
