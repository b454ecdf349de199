#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "crystal/explorer.hpp"
#include "crystal/quiver_model.hpp"
#include "crystal/serialize.hpp"

using namespace crystal;

TEST_CASE("element formats") {
  CHECK(canonical(Element(BkElement{0, -2})) == R"({"Bk":{"k":1,"n":-2}})");
  CHECK(canonical(Element(S0Element{})) == R"({"S0":{}})");
  CHECK(canonical(Element(TElement{Weight({1, 0}, {0, 0})})) == R"({"T":{"lambda":[1,0],"root":[0,0]}})");
  auto x = model_highest({1, 0});
  x.adjust(0, 1, 1);
  CHECK(canonical(Element(x)) == R"({"Model":{"w":{"0":[1,0]},"v":{"1,1":1}}})");
  CHECK(format_ints({1, -2, 3}) == "1,-2,3");
}

TEST_CASE("round trip") {
  const auto a2 = RootDatum::preset("A2");
  const auto g1 = model_crystal(a2, {1, 1}, 50);
  const auto g2 = model_crystal(a2, {0, 2}, 50);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Element> factors{Element(S0Element{}), g1.nodes[rng() % g1.size()].element,
                                 Element(BkElement{rng() % 2, static_cast<Int>(rng() % 9) - 4}),
                                 tensor({g2.nodes[rng() % g2.size()].element, Element(TElement{Weight({1, 2}, {3, 4})})})};
    const Element x = tensor(factors);
    const Element back = element_from_json(Json::parse(canonical(x)));
    CHECK(back == x);
    CHECK(canonical(back) == canonical(x));
  }
  const Element empty(model_highest(std::vector<Int>{0, 0}));
  CHECK(element_from_json(element_to_json(empty)) == empty);
}

TEST_CASE("malformed json") {
  CHECK_THROWS(element_from_json(Json::parse(R"({"Nope":{}})")));
  CHECK_THROWS(element_from_json(Json::parse(R"({"Bk":{"k":0,"n":1}})")));
}

TEST_CASE("root datum files") {
  const auto dir = std::filesystem::temp_directory_path();
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
  };
  CHECK(load_root_datum(write("rd_preset.json", R"({"preset": "A3"})")) == RootDatum::preset("A3"));
  CHECK(load_root_datum(write("rd_adj.json", R"({"adjacency": [[0, 2], [2, 0]]})")) == RootDatum::preset("affineA1"));
  CHECK(load_root_datum(write("rd_preset.toml", "# type A\npreset = \"A2\"  # two nodes\n")) == RootDatum::preset("A2"));
  CHECK(load_root_datum(write("rd_adj.toml", "adjacency = [\n  [0, 1, 0],\n  [1, 0, 1],\n  [0, 1, 0],\n]\n")) ==
        RootDatum::preset("A3"));
  CHECK_THROWS_AS(load_root_datum(write("rd_bad.json", R"({"adjacency": [[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(load_root_datum(write("rd_none.json", R"({"rank": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(load_root_datum(write("rd_garbage.toml", "preset = A2\n")), std::invalid_argument);
  CHECK_THROWS_AS(load_root_datum((dir / "rd_missing.json").string()), std::invalid_argument);
}
