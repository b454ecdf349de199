#include <doctest.h>

#include <stdexcept>

#include "crystal/root_datum.hpp"

using crystal::IntMatrix;
using crystal::RootDatum;
using crystal::Weight;

TEST_CASE("presets give the expected Cartan matrices") {
  const auto a2 = RootDatum::preset("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.cartan(0, 0) == 2);
  CHECK(a2.cartan(0, 1) == -1);
  CHECK(a2.cartan(1, 0) == -1);

  const auto aff = RootDatum::from_adjacency(IntMatrix{{0, 2}, {2, 0}});
  CHECK(aff.cartan(0, 1) == -2);
  CHECK(aff.cartan(1, 0) == -2);
  CHECK(aff == RootDatum::preset("affineA1"));

  const auto d4 = RootDatum::preset("D4");
  int neighbours_of_center = 0;
  for (std::size_t l = 0; l < 4; ++l) neighbours_of_center += d4.cartan(1, l) == -1;
  CHECK(neighbours_of_center == 3);

  CHECK(RootDatum::preset("E8").rank() == 8);
  CHECK_THROWS_AS(RootDatum::preset("B3"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::preset("D3"), std::invalid_argument);
}

TEST_CASE("bad adjacency matrices name the offending entry") {
  CHECK_THROWS_WITH_AS(RootDatum::from_adjacency(IntMatrix{{1}}), "edge loop at vertex 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(RootDatum::from_adjacency(IntMatrix{{0, 1}, {2, 0}}),
                       doctest::Contains("not symmetric at (1,2)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RootDatum::from_adjacency(IntMatrix{{0, -1}, {-1, 0}}),
                       doctest::Contains("negative adjacency entry"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::from_adjacency(IntMatrix{{0, 1}}), std::invalid_argument);
}

TEST_CASE("pairing") {
  const auto a1 = RootDatum::preset("A1");
  CHECK(a1.pairing(0, Weight({1}, {0})) == 1);
  CHECK(a1.pairing(0, Weight({1}, {1})) == -1);
  const auto a2 = RootDatum::preset("A2");
  CHECK(a2.pairing(1, Weight({1, 0}, {1, 0})) == 1);
  CHECK_THROWS_AS(a2.pairing(2, Weight({1, 0}, {0, 0})), std::out_of_range);
}

TEST_CASE("dominance") {
  const auto a1 = RootDatum::preset("A1");
  const auto a2 = RootDatum::preset("A2");
  CHECK(a2.is_dominant(Weight({1, 1}, {0, 0})));
  CHECK_FALSE(a1.is_dominant(Weight({1}, {1})));
  CHECK(a2.is_dominant(Weight::zero(2)));
}

TEST_CASE("alpha shifts") {
  const Weight w({1}, {0});
  CHECK(crystal::subtract_alpha(w, 0) == Weight({1}, {1}));
  CHECK(crystal::add_alpha(crystal::subtract_alpha(w, 0), 0) == w);
}
