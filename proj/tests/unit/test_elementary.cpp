#include <doctest.h>

#include "crystal/elementary.hpp"
#include "crystal/ops.hpp"

using namespace crystal;

TEST_CASE("B_k elementary crystal") {
  const auto a2 = RootDatum::preset("A2");
  const BkElement b{0, 0};
  CHECK(bk_lower(b, 0) == BkElement{0, -1});
  CHECK_FALSE(bk_raise(BkElement{0, 5}, 1).has_value());
  CHECK_FALSE(bk_lower(BkElement{0, 5}, 1).has_value());
  for (Int n = -3; n <= 3; ++n) {
    const BkElement x{0, n};
    CHECK(bk_raise(*bk_lower(x, 0), 0) == x);
    CHECK(bk_eps(x, 0) == ExtInt(-n));
    CHECK(bk_phi(x, 0) == ExtInt(n));
    CHECK(bk_eps(x, 1).is_neg_infinity());
    CHECK(a2.pairing(0, bk_wt(a2, x)) == 2 * n);
    CHECK(a2.pairing(1, bk_wt(a2, x)) == -n);
  }
}

TEST_CASE("T and S0 differ only in eps/phi") {
  const auto a1 = RootDatum::preset("A1");
  const Element t(TElement{Weight({1}, {0})});
  const Element s(S0Element{});
  CHECK_FALSE(raise(a1, t, 0).has_value());
  CHECK_FALSE(lower(a1, s, 0).has_value());
  CHECK(phi(a1, s, 0) == ExtInt(0));
  CHECK(phi(a1, t, 0).is_neg_infinity());
  CHECK(eps(a1, t, 0).is_neg_infinity());
  CHECK(wt(a1, t) == Weight({1}, {0}));
  CHECK(wt(a1, s) == Weight::zero(1));
}

TEST_CASE("extended integers") {
  const ExtInt ninf;
  CHECK(ninf < ExtInt(-1000));
  CHECK((ninf + 5).is_neg_infinity());
  CHECK(max(ninf, ExtInt(3)) == ExtInt(3));
  CHECK(ninf.to_string() == "-inf");
  CHECK_THROWS(ninf.value());
}
