#pragma once

#include <optional>
#include <vector>

#include "crystal/element.hpp"

// Tensor product rule for n factors.
//
// Convention: f~ acts on the LEFT factor when phi(b1) > eps(b2), e~ on the
// left when phi(b1) >= eps(b2). For n factors with
//   eps^p = eps(b_p) - sum_{q<p} wt_k(b_q),   phi^p = phi(b_p) + sum_{q>p} wt_k(b_q)
// e~ acts at the smallest position attaining max eps^p and f~ at the largest
// position attaining max phi^p. Positions are 0-based here and 1-based in
// serialized output.

namespace crystal {

Weight tensor_wt(const RootDatum& rd, const TensorElement& x);

std::vector<ExtInt> eps_profile(const RootDatum& rd, const TensorElement& x, std::size_t k);
std::vector<ExtInt> phi_profile(const RootDatum& rd, const TensorElement& x, std::size_t k);

ExtInt tensor_eps(const RootDatum& rd, const TensorElement& x, std::size_t k);
ExtInt tensor_phi(const RootDatum& rd, const TensorElement& x, std::size_t k);

std::optional<TensorElement> tensor_raise(const RootDatum& rd, const TensorElement& x, std::size_t k);
std::optional<TensorElement> tensor_lower(const RootDatum& rd, const TensorElement& x, std::size_t k);

/// Removes nested Tensor brackets: (a (x) b) (x) c  ->  a (x) b (x) c.
TensorElement flatten(const TensorElement& x);

}  // namespace crystal
