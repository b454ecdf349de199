#pragma once

// Reference for the tensor product rule: the textbook two-factor rule,
// applied to (...((x1 (x) x2) (x) x3) ...) (x) xn. Only single-factor
// operations come from the library.

#include <optional>
#include <vector>

#include "crystal/ops.hpp"

namespace oracle {

using crystal::Element;
using crystal::ExtInt;
using crystal::Int;
using crystal::RootDatum;
using Factors = std::vector<Element>;

struct Stats {
  crystal::Weight wt;
  ExtInt eps;
  ExtInt phi;
};

inline Stats stats(const RootDatum& rd, const Factors& xs, std::size_t m, std::size_t k) {
  if (m == 1) return {crystal::wt(rd, xs[0]), crystal::eps(rd, xs[0], k), crystal::phi(rd, xs[0], k)};
  const Stats left = stats(rd, xs, m - 1, k);
  const Element& right = xs[m - 1];
  const ExtInt e2 = crystal::eps(rd, right, k);
  const ExtInt p2 = crystal::phi(rd, right, k);
  const Int w1 = rd.pairing(k, left.wt);
  const Int w2 = crystal::wt_k(rd, right, k);
  return {left.wt + crystal::wt(rd, right), max(left.eps, e2 - w1), max(p2, left.phi + w2)};
}

inline Stats stats(const RootDatum& rd, const Factors& xs, std::size_t k) { return stats(rd, xs, xs.size(), k); }

// Applies e~ (up) or f~ to the prefix xs[0..m).
inline bool apply(const RootDatum& rd, Factors& xs, std::size_t m, std::size_t k, bool up) {
  if (m == 1) {
    auto y = up ? crystal::raise(rd, xs[0], k) : crystal::lower(rd, xs[0], k);
    if (!y) return false;
    xs[0] = std::move(*y);
    return true;
  }
  const Stats left = stats(rd, xs, m - 1, k);
  const ExtInt e2 = crystal::eps(rd, xs[m - 1], k);
  const bool on_left = up ? left.phi >= e2 : left.phi > e2;
  if (on_left) return apply(rd, xs, m - 1, k, up);
  auto y = up ? crystal::raise(rd, xs[m - 1], k) : crystal::lower(rd, xs[m - 1], k);
  if (!y) return false;
  xs[m - 1] = std::move(*y);
  return true;
}

inline std::optional<Factors> raise(const RootDatum& rd, Factors xs, std::size_t k) {
  if (!apply(rd, xs, xs.size(), k, true)) return std::nullopt;
  return xs;
}

inline std::optional<Factors> lower(const RootDatum& rd, Factors xs, std::size_t k) {
  if (!apply(rd, xs, xs.size(), k, false)) return std::nullopt;
  return xs;
}

}  // namespace oracle
