#include <doctest.h>

#include <random>

#include "../support/binary_rule.hpp"
#include "crystal/explorer.hpp"
#include "crystal/quiver_model.hpp"
#include "crystal/tensor.hpp"

using namespace crystal;

namespace {

std::vector<ExtInt> ext(std::initializer_list<Int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("profiles of b_hw (x) b_hw in A1") {
  const auto a1 = RootDatum::preset("A1");
  const Element hw(model_highest({1}));
  const auto x = tensor({hw, hw}).as<TensorElement>();
  CHECK(phi_profile(a1, x, 0) == ext({2, 1}));
  CHECK(eps_profile(a1, x, 0) == ext({0, -1}));
  CHECK(tensor_eps(a1, x, 0) == ExtInt(0));
  CHECK(tensor_phi(a1, x, 0) == ExtInt(2));

  // phi(b1) = 1 > eps(b2) = 0: f~ acts on the left factor.
  const auto down = tensor_lower(a1, x, 0);
  REQUIRE(down.has_value());
  CHECK(down->factors[0] == Element(*model_lower(a1, model_highest({1}), 0)));
  CHECK(down->factors[1] == hw);
}

TEST_CASE("two-factor eps and phi arithmetic") {
  const auto a1 = RootDatum::preset("A1");
  const auto top = model_highest({1});
  const auto bottom = *model_lower(a1, top, 0);
  // eps(b1) = 0, eps(b2) = 1, wt(b1) = 1.
  CHECK(tensor_eps(a1, tensor({Element(top), Element(bottom)}).as<TensorElement>(), 0) == ExtInt(0));
  // phi(b1) = 1, phi(b2) = 0, wt(b2) = -1.
  CHECK(tensor_phi(a1, tensor({Element(top), Element(bottom)}).as<TensorElement>(), 0) == ExtInt(0));
}

TEST_CASE("T (x) S0 has no operators") {
  const auto a1 = RootDatum::preset("A1");
  const auto x = tensor({Element(TElement{Weight({1}, {0})}), Element(S0Element{})}).as<TensorElement>();
  CHECK_FALSE(tensor_lower(a1, x, 0).has_value());
  CHECK_FALSE(tensor_raise(a1, x, 0).has_value());
  CHECK(tensor_wt(a1, x) == Weight({1}, {0}));
}

TEST_CASE("flatten removes brackets") {
  const Element a(BkElement{0, 1});
  const Element b(BkElement{0, 2});
  const Element c(S0Element{});
  const auto nested = tensor({tensor({a, b}), tensor({c, tensor({a})})}).as<TensorElement>();
  CHECK(flatten(nested) == tensor({a, b, c, a}).as<TensorElement>());
}

TEST_CASE("random elements of B(L1) (x) B(L2) in A2 agree with the two-factor rule") {
  const auto a2 = RootDatum::preset("A2");
  const auto g1 = model_crystal(a2, {1, 0}, 20);
  const auto g2 = model_crystal(a2, {0, 1}, 20);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::Factors xs{g1.nodes[rng() % g1.size()].element, g2.nodes[rng() % g2.size()].element};
    const auto x = tensor(xs).as<TensorElement>();
    CHECK(tensor_wt(a2, x) == oracle::stats(a2, xs, 0).wt);
    for (std::size_t k = 0; k < 2; ++k) {
      const auto s = oracle::stats(a2, xs, k);
      CHECK(tensor_eps(a2, x, k) == s.eps);
      CHECK(tensor_phi(a2, x, k) == s.phi);
      const auto up = tensor_raise(a2, x, k);
      const auto expect_up = oracle::raise(a2, xs, k);
      REQUIRE(up.has_value() == expect_up.has_value());
      if (up) CHECK(up->factors == *expect_up);
      const auto down = tensor_lower(a2, x, k);
      const auto expect_down = oracle::lower(a2, xs, k);
      REQUIRE(down.has_value() == expect_down.has_value());
      if (down) CHECK(down->factors == *expect_down);
    }
  }
}

TEST_CASE("n-fold rule agrees with iterated two-factor rule on B_k and T factors") {
  const auto a2 = RootDatum::preset("A2");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Factors xs;
    const std::size_t n = 2 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      switch (rng() % 3) {
        case 0: xs.emplace_back(BkElement{rng() % 2, static_cast<Int>(rng() % 7) - 3}); break;
        case 1: xs.emplace_back(TElement{Weight({static_cast<Int>(rng() % 3), 0}, {0, 0})}); break;
        default: xs.emplace_back(S0Element{}); break;
      }
    }
    const auto x = tensor(xs).as<TensorElement>();
    for (std::size_t k = 0; k < 2; ++k) {
      const auto s = oracle::stats(a2, xs, k);
      CHECK(tensor_eps(a2, x, k) == s.eps);
      CHECK(tensor_phi(a2, x, k) == s.phi);
      const auto down = tensor_lower(a2, x, k);
      const auto expect_down = oracle::lower(a2, xs, k);
      REQUIRE(down.has_value() == expect_down.has_value());
      if (down) CHECK(down->factors == *expect_down);
      const auto up = tensor_raise(a2, x, k);
      const auto expect_up = oracle::raise(a2, xs, k);
      REQUIRE(up.has_value() == expect_up.has_value());
      if (up) CHECK(up->factors == *expect_up);
    }
  }
}
