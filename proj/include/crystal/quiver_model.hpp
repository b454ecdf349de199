#pragma once

#include <optional>
#include <vector>

#include "crystal/element.hpp"

// Combinatorial model of the crystal B(w) on dimension profiles v_k^p.
//
// For vertex k and slot p the three-term complex
//   V_k^p -> (+)_{l<k} V_l^{p-1}^{m_kl} (+) (+)_{l>k} V_l^p^{m_kl} (+) W_k^{p-1} -> V_k^{p-1}
// has Euler rank
//   rank(k,p) = w_k^{p-1} - v_k^p - v_k^{p-1} + sum_{l<k} m_kl v_l^{p-1} + sum_{l>k} m_kl v_l^p.
// With epsbar^p = -sum_{q>p} rank(k,q) and phibar^p = sum_{q<=p} rank(k,q):
//   eps_k = max_p epsbar^p,  phi_k = max_p phibar^p   (both >= 0),
//   e~_k decrements v_k^p at the LARGEST p attaining eps_k (0 if eps_k = 0),
//   f~_k increments v_k^p at the SMALLEST p attaining phi_k (0 if phi_k = 0).

namespace crystal {

/// Closed slot range [lo, hi].
struct SlotWindow {
  Int lo = 0;
  Int hi = 0;
  friend bool operator==(const SlotWindow&, const SlotWindow&) = default;
};

/// v == 0 against the given W-profile: the highest-weight element.
ModelElement model_highest(std::shared_ptr<const WProfile> wp);
/// v == 0 with all of lambda in slot 0.
ModelElement model_highest(const std::vector<Int>& lambda);

Weight model_wt(const ModelElement& x);

/// [L, R] such that rank(k,p) = 0 for every k and every p outside it, where
/// L = min(supp v, supp w + 1) and R = max(supp v, supp w + 1).
/// std::nullopt when both supports are empty.
std::optional<SlotWindow> rank_support(const ModelElement& x);
/// [L - 1, R + 1]; the partial sums are constant outside it.
SlotWindow evaluation_window(const ModelElement& x);

Int rank_complex(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p);
Int eps_bar(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p);
Int phi_bar(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p);

Int model_eps(const RootDatum& rd, const ModelElement& x, std::size_t k);
Int model_phi(const RootDatum& rd, const ModelElement& x, std::size_t k);

/// Throws std::logic_error if the selected entry would become negative.
std::optional<ModelElement> model_raise(const RootDatum& rd, const ModelElement& x, std::size_t k);
std::optional<ModelElement> model_lower(const RootDatum& rd, const ModelElement& x, std::size_t k);

/// Slots where e~_k / f~_k would act, or std::nullopt under the cap.
std::optional<Int> raise_slot(const RootDatum& rd, const ModelElement& x, std::size_t k);
std::optional<Int> lower_slot(const RootDatum& rd, const ModelElement& x, std::size_t k);

/// Smallest window with one empty slot of margin on both sides of the
/// supports of v and of w (as placed in the tensor, i.e. unshifted).
SlotWindow embedding_window(const ModelElement& x);
SlotWindow window_union(const SlotWindow& a, const SlotWindow& b);

/// s_0 (x) [slot hi] (x) ... (x) [slot lo] (x) s_0 where slot p is
///   t_{w^p} (x) b_1(-v_1^p) (x) ... (x) b_n(-v_n^p).
/// Throws std::invalid_argument naming the first slot of a support that the
/// window does not cover with a margin of one.
TensorElement embed_psi(const ModelElement& x, const SlotWindow& window);

}  // namespace crystal
