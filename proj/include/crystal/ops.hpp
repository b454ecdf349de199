#pragma once

#include <optional>

#include "crystal/element.hpp"

namespace crystal {

// Crystal structure maps on any Element, dispatched on its kind.
// raise is e~_k and lower is f~_k; std::nullopt stands for the formal 0.

Weight wt(const RootDatum& rd, const Element& x);
ExtInt eps(const RootDatum& rd, const Element& x, std::size_t k);
ExtInt phi(const RootDatum& rd, const Element& x, std::size_t k);
std::optional<Element> raise(const RootDatum& rd, const Element& x, std::size_t k);
std::optional<Element> lower(const RootDatum& rd, const Element& x, std::size_t k);

/// <h_k, wt(x)>.
inline Int wt_k(const RootDatum& rd, const Element& x, std::size_t k) { return rd.pairing(k, wt(rd, x)); }

}  // namespace crystal
