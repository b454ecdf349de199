#include "crystal/tensor.hpp"

#include "crystal/ops.hpp"

namespace crystal {

Weight tensor_wt(const RootDatum& rd, const TensorElement& x) {
  Weight total = Weight::zero(rd.rank());
  for (const Element& f : x.factors) total += wt(rd, f);
  return total;
}

namespace {

std::vector<Int> factor_wt_k(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  std::vector<Int> out;
  out.reserve(x.factors.size());
  for (const Element& f : x.factors) out.push_back(wt_k(rd, f, k));
  return out;
}

std::vector<ExtInt> eps_profile_with(const RootDatum& rd, const TensorElement& x, std::size_t k,
                                     const std::vector<Int>& wts) {
  std::vector<ExtInt> out;
  out.reserve(x.factors.size());
  Int left = 0;
  for (std::size_t p = 0; p < x.factors.size(); ++p) {
    out.push_back(eps(rd, x.factors[p], k) - left);
    left += wts[p];
  }
  return out;
}

std::vector<ExtInt> phi_profile_with(const RootDatum& rd, const TensorElement& x, std::size_t k,
                                     const std::vector<Int>& wts) {
  std::vector<ExtInt> out(x.factors.size());
  Int right = 0;
  for (std::size_t p = x.factors.size(); p-- > 0;) {
    out[p] = phi(rd, x.factors[p], k) + right;
    right += wts[p];
  }
  return out;
}

ExtInt profile_max(const std::vector<ExtInt>& profile) {
  ExtInt best = ExtInt::neg_infinity();
  for (ExtInt v : profile) best = max(best, v);
  return best;
}

}  // namespace

std::vector<ExtInt> eps_profile(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  return eps_profile_with(rd, x, k, factor_wt_k(rd, x, k));
}

std::vector<ExtInt> phi_profile(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  return phi_profile_with(rd, x, k, factor_wt_k(rd, x, k));
}

ExtInt tensor_eps(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  return profile_max(eps_profile(rd, x, k));
}

ExtInt tensor_phi(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  return profile_max(phi_profile(rd, x, k));
}

std::optional<TensorElement> tensor_raise(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  const auto profile = eps_profile(rd, x, k);
  const ExtInt best = profile_max(profile);
  if (best.is_neg_infinity()) return std::nullopt;
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (profile[p] != best) continue;
    auto moved = raise(rd, x.factors[p], k);
    if (!moved) return std::nullopt;
    TensorElement out = x;
    out.factors[p] = std::move(*moved);
    return out;
  }
  return std::nullopt;
}

std::optional<TensorElement> tensor_lower(const RootDatum& rd, const TensorElement& x, std::size_t k) {
  const auto profile = phi_profile(rd, x, k);
  const ExtInt best = profile_max(profile);
  if (best.is_neg_infinity()) return std::nullopt;
  for (std::size_t p = profile.size(); p-- > 0;) {
    if (profile[p] != best) continue;
    auto moved = lower(rd, x.factors[p], k);
    if (!moved) return std::nullopt;
    TensorElement out = x;
    out.factors[p] = std::move(*moved);
    return out;
  }
  return std::nullopt;
}

TensorElement flatten(const TensorElement& x) {
  TensorElement out;
  for (const Element& f : x.factors) {
    if (f.is<TensorElement>()) {
      auto inner = flatten(f.as<TensorElement>());
      for (Element& g : inner.factors) out.factors.push_back(std::move(g));
    } else {
      out.factors.push_back(f);
    }
  }
  return out;
}

}  // namespace crystal
