#pragma once

#include <optional>

#include "crystal/element.hpp"

// Building-block crystals B_k, T_lambda and S_0.

namespace crystal {

/// wt(b_k(n)) = n alpha_k, so <h_k, wt> = 2n.
Weight bk_wt(const RootDatum& rd, const BkElement& x);
ExtInt bk_eps(const BkElement& x, std::size_t l);
ExtInt bk_phi(const BkElement& x, std::size_t l);
std::optional<BkElement> bk_raise(const BkElement& x, std::size_t l);
std::optional<BkElement> bk_lower(const BkElement& x, std::size_t l);

inline ExtInt t_eps(const TElement&, std::size_t) { return ExtInt::neg_infinity(); }
inline ExtInt t_phi(const TElement&, std::size_t) { return ExtInt::neg_infinity(); }
inline std::optional<TElement> t_raise(const TElement&, std::size_t) { return std::nullopt; }
inline std::optional<TElement> t_lower(const TElement&, std::size_t) { return std::nullopt; }

inline ExtInt s0_eps(const S0Element&, std::size_t) { return 0; }
inline ExtInt s0_phi(const S0Element&, std::size_t) { return 0; }
inline std::optional<S0Element> s0_raise(const S0Element&, std::size_t) { return std::nullopt; }
inline std::optional<S0Element> s0_lower(const S0Element&, std::size_t) { return std::nullopt; }

}  // namespace crystal
