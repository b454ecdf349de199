#include "crystal/elementary.hpp"

namespace crystal {

Weight bk_wt(const RootDatum& rd, const BkElement& x) {
  Weight w = Weight::zero(rd.rank());
  w.root.at(x.k) = -x.n;
  return w;
}

ExtInt bk_eps(const BkElement& x, std::size_t l) {
  return l == x.k ? ExtInt(-x.n) : ExtInt::neg_infinity();
}

ExtInt bk_phi(const BkElement& x, std::size_t l) {
  return l == x.k ? ExtInt(x.n) : ExtInt::neg_infinity();
}

std::optional<BkElement> bk_raise(const BkElement& x, std::size_t l) {
  if (l != x.k) return std::nullopt;
  return BkElement{x.k, x.n + 1};
}

std::optional<BkElement> bk_lower(const BkElement& x, std::size_t l) {
  if (l != x.k) return std::nullopt;
  return BkElement{x.k, x.n - 1};
}

}  // namespace crystal
