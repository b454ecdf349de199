#include "crystal/element.hpp"

#include <functional>
#include <stdexcept>

namespace crystal {

Int ExtInt::value() const {
  if (!finite_) throw std::logic_error("value() of -infinity");
  return value_;
}

WProfile WProfile::single_slot(const std::vector<Int>& lambda) {
  WProfile wp;
  wp.n = lambda.size();
  for (Int x : lambda)
    if (x < 0) throw std::invalid_argument("W-profile entries must be nonnegative");
  bool any = false;
  for (Int x : lambda) any = any || x != 0;
  if (any) wp.slots.emplace(0, lambda);
  return wp;
}

Int WProfile::at(std::size_t k, Int p) const {
  auto it = slots.find(p);
  return it == slots.end() ? 0 : it->second.at(k);
}

Weight WProfile::total() const {
  Weight w = Weight::zero(n);
  for (const auto& [p, dims] : slots)
    for (std::size_t k = 0; k < n; ++k) w.lambda[k] += dims[k];
  return w;
}

bool WProfile::empty_support() const { return slots.empty(); }

Int ModelElement::at(std::size_t k, Int p) const {
  auto it = v.find({k, p});
  return it == v.end() ? 0 : it->second;
}

void ModelElement::adjust(std::size_t k, Int p, Int delta) {
  auto [it, inserted] = v.try_emplace({k, p}, 0);
  it->second += delta;
  if (it->second == 0) v.erase(it);
}

namespace {

struct KindName {
  const char* operator()(const BkElement&) const { return "Bk"; }
  const char* operator()(const TElement&) const { return "T"; }
  const char* operator()(const S0Element&) const { return "S0"; }
  const char* operator()(const TensorElement&) const { return "Tensor"; }
  const char* operator()(const ModelElement&) const { return "Model"; }
};

void mix(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

void mix_vector(std::size_t& seed, const std::vector<Int>& xs) {
  mix(seed, xs.size());
  for (Int x : xs) mix(seed, std::hash<Int>{}(x));
}

}  // namespace

const char* Element::kind() const { return std::visit(KindName{}, value); }

Element tensor(std::vector<Element> factors) { return Element(TensorElement{std::move(factors)}); }

std::size_t hash_value(const Element& x) {
  std::size_t seed = x.value.index();
  std::visit(
      [&seed](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, BkElement>) {
          mix(seed, e.k);
          mix(seed, std::hash<Int>{}(e.n));
        } else if constexpr (std::is_same_v<T, TElement>) {
          mix_vector(seed, e.lambda.lambda);
          mix_vector(seed, e.lambda.root);
        } else if constexpr (std::is_same_v<T, TensorElement>) {
          mix(seed, e.factors.size());
          for (const Element& f : e.factors) mix(seed, hash_value(f));
        } else if constexpr (std::is_same_v<T, ModelElement>) {
          for (const auto& [key, val] : e.v) {
            mix(seed, key.first);
            mix(seed, std::hash<Int>{}(key.second));
            mix(seed, std::hash<Int>{}(val));
          }
          if (e.wp)
            for (const auto& [p, dims] : e.wp->slots) {
              mix(seed, std::hash<Int>{}(p));
              mix_vector(seed, dims);
            }
        }
      },
      x.value);
  return seed;
}

}  // namespace crystal
