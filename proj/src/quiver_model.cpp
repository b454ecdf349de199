#include "crystal/quiver_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystal {

ModelElement model_highest(std::shared_ptr<const WProfile> wp) {
  if (!wp) throw std::invalid_argument("model element needs a W-profile");
  return ModelElement{std::move(wp), {}};
}

ModelElement model_highest(const std::vector<Int>& lambda) {
  return model_highest(std::make_shared<const WProfile>(WProfile::single_slot(lambda)));
}

Weight model_wt(const ModelElement& x) {
  Weight w = x.wp->total();
  for (const auto& [key, dim] : x.v) w.root[key.first] += dim;
  return w;
}

std::optional<SlotWindow> rank_support(const ModelElement& x) {
  std::optional<SlotWindow> win;
  auto include = [&win](Int p) {
    if (!win) win = SlotWindow{p, p};
    win->lo = std::min(win->lo, p);
    win->hi = std::max(win->hi, p);
  };
  for (const auto& [key, dim] : x.v) include(key.second);
  for (const auto& [p, dims] : x.wp->slots) include(p + 1);
  return win;
}

SlotWindow evaluation_window(const ModelElement& x) {
  const auto support = rank_support(x);
  if (!support) return {-1, 1};
  return {support->lo - 1, support->hi + 1};
}

namespace {

Int rank_at(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p) {
  Int r = x.wp->at(k, p - 1) - x.at(k, p) - x.at(k, p - 1);
  for (std::size_t l = 0; l < k; ++l) r += rd.edges(k, l) * x.at(l, p - 1);
  for (std::size_t l = k + 1; l < rd.rank(); ++l) r += rd.edges(k, l) * x.at(l, p);
  return r;
}

// epsbar / phibar over the evaluation window for one vertex.
struct PartialSums {
  SlotWindow window;
  std::vector<Int> eps_bar;
  std::vector<Int> phi_bar;

  Int eps_max() const { return *std::max_element(eps_bar.begin(), eps_bar.end()); }
  Int phi_max() const { return *std::max_element(phi_bar.begin(), phi_bar.end()); }
};

PartialSums partial_sums(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  if (k >= rd.rank()) throw std::out_of_range("vertex index " + std::to_string(k + 1) + " out of range");
  if (x.wp->n != rd.rank()) throw std::invalid_argument("W-profile rank does not match root datum");
  PartialSums s;
  s.window = evaluation_window(x);
  const auto width = static_cast<std::size_t>(s.window.hi - s.window.lo + 1);
  std::vector<Int> ranks(width);
  for (std::size_t i = 0; i < width; ++i) ranks[i] = rank_at(rd, x, k, s.window.lo + static_cast<Int>(i));

  s.phi_bar.resize(width);
  Int running = 0;
  for (std::size_t i = 0; i < width; ++i) {
    running += ranks[i];
    s.phi_bar[i] = running;
  }
  // Telescoping: the full sum of ranks is <h_k, wt>.
  if (running != rd.pairing(k, model_wt(x)))
    throw std::logic_error("rank telescoping identity violated at vertex " + std::to_string(k + 1));

  s.eps_bar.resize(width);
  running = 0;
  for (std::size_t i = width; i-- > 0;) {
    s.eps_bar[i] = -running;
    running += ranks[i];
  }
  return s;
}

}  // namespace

Int rank_complex(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p) {
  if (k >= rd.rank()) throw std::out_of_range("vertex index " + std::to_string(k + 1) + " out of range");
  return rank_at(rd, x, k, p);
}

Int eps_bar(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p) {
  const SlotWindow win = evaluation_window(x);
  Int sum = 0;
  for (Int q = std::max(p + 1, win.lo); q <= win.hi; ++q) sum += rank_complex(rd, x, k, q);
  return -sum;
}

Int phi_bar(const RootDatum& rd, const ModelElement& x, std::size_t k, Int p) {
  const SlotWindow win = evaluation_window(x);
  Int sum = 0;
  for (Int q = win.lo; q <= std::min(p, win.hi); ++q) sum += rank_complex(rd, x, k, q);
  return sum;
}

// The S_0 caps contribute 0 to both maxima; the interior maxima already
// dominate them because the partial sums reach 0 at the window ends.
Int model_eps(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  return std::max<Int>(0, partial_sums(rd, x, k).eps_max());
}

Int model_phi(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  return std::max<Int>(0, partial_sums(rd, x, k).phi_max());
}

std::optional<Int> raise_slot(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  const PartialSums s = partial_sums(rd, x, k);
  const Int best = s.eps_max();
  if (best <= 0) return std::nullopt;
  for (std::size_t i = s.eps_bar.size(); i-- > 0;)
    if (s.eps_bar[i] == best) return s.window.lo + static_cast<Int>(i);
  return std::nullopt;
}

std::optional<Int> lower_slot(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  const PartialSums s = partial_sums(rd, x, k);
  const Int best = s.phi_max();
  if (best <= 0) return std::nullopt;
  for (std::size_t i = 0; i < s.phi_bar.size(); ++i)
    if (s.phi_bar[i] == best) return s.window.lo + static_cast<Int>(i);
  return std::nullopt;
}

std::optional<ModelElement> model_raise(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  const auto slot = raise_slot(rd, x, k);
  if (!slot) return std::nullopt;
  if (x.at(k, *slot) <= 0)
    throw std::logic_error("e~_" + std::to_string(k + 1) + " would make v at slot " + std::to_string(*slot) +
                           " negative");
  ModelElement out = x;
  out.adjust(k, *slot, -1);
  return out;
}

std::optional<ModelElement> model_lower(const RootDatum& rd, const ModelElement& x, std::size_t k) {
  const auto slot = lower_slot(rd, x, k);
  if (!slot) return std::nullopt;
  ModelElement out = x;
  out.adjust(k, *slot, +1);
  return out;
}

SlotWindow embedding_window(const ModelElement& x) {
  std::optional<SlotWindow> win;
  auto include = [&win](Int p) {
    if (!win) win = SlotWindow{p, p};
    win->lo = std::min(win->lo, p);
    win->hi = std::max(win->hi, p);
  };
  for (const auto& [key, dim] : x.v) include(key.second);
  for (const auto& [p, dims] : x.wp->slots) include(p);
  if (!win) return {-1, 1};
  return {win->lo - 1, win->hi + 1};
}

SlotWindow window_union(const SlotWindow& a, const SlotWindow& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

TensorElement embed_psi(const ModelElement& x, const SlotWindow& window) {
  const SlotWindow needed = embedding_window(x);
  if (needed.lo < window.lo)
    throw std::invalid_argument("embedding window does not cover slot " + std::to_string(needed.lo));
  if (needed.hi > window.hi)
    throw std::invalid_argument("embedding window does not cover slot " + std::to_string(needed.hi));

  const std::size_t n = x.wp->n;
  TensorElement out;
  out.factors.reserve(static_cast<std::size_t>(window.hi - window.lo + 1) * (n + 1) + 2);
  out.factors.emplace_back(S0Element{});
  for (Int p = window.hi; p >= window.lo; --p) {
    Weight w = Weight::zero(n);
    for (std::size_t k = 0; k < n; ++k) w.lambda[k] = x.wp->at(k, p);
    out.factors.emplace_back(TElement{std::move(w)});
    for (std::size_t k = 0; k < n; ++k) out.factors.emplace_back(BkElement{k, -x.at(k, p)});
  }
  out.factors.emplace_back(S0Element{});
  return out;
}

}  // namespace crystal
