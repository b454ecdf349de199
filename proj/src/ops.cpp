#include "crystal/ops.hpp"

#include "crystal/elementary.hpp"
#include "crystal/quiver_model.hpp"
#include "crystal/tensor.hpp"

namespace crystal {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

template <class T>
std::optional<Element> lift(std::optional<T> x) {
  if (!x) return std::nullopt;
  return Element(std::move(*x));
}

}  // namespace

Weight wt(const RootDatum& rd, const Element& x) {
  return std::visit(Overloaded{
                        [&](const BkElement& e) { return bk_wt(rd, e); },
                        [&](const TElement& e) { return e.lambda; },
                        [&](const S0Element&) { return Weight::zero(rd.rank()); },
                        [&](const TensorElement& e) { return tensor_wt(rd, e); },
                        [&](const ModelElement& e) { return model_wt(e); },
                    },
                    x.value);
}

ExtInt eps(const RootDatum& rd, const Element& x, std::size_t k) {
  return std::visit(Overloaded{
                        [&](const BkElement& e) { return bk_eps(e, k); },
                        [&](const TElement& e) { return t_eps(e, k); },
                        [&](const S0Element& e) { return s0_eps(e, k); },
                        [&](const TensorElement& e) { return tensor_eps(rd, e, k); },
                        [&](const ModelElement& e) { return ExtInt(model_eps(rd, e, k)); },
                    },
                    x.value);
}

ExtInt phi(const RootDatum& rd, const Element& x, std::size_t k) {
  return std::visit(Overloaded{
                        [&](const BkElement& e) { return bk_phi(e, k); },
                        [&](const TElement& e) { return t_phi(e, k); },
                        [&](const S0Element& e) { return s0_phi(e, k); },
                        [&](const TensorElement& e) { return tensor_phi(rd, e, k); },
                        [&](const ModelElement& e) { return ExtInt(model_phi(rd, e, k)); },
                    },
                    x.value);
}

std::optional<Element> raise(const RootDatum& rd, const Element& x, std::size_t k) {
  return std::visit(Overloaded{
                        [&](const BkElement& e) { return lift(bk_raise(e, k)); },
                        [&](const TElement& e) { return lift(t_raise(e, k)); },
                        [&](const S0Element& e) { return lift(s0_raise(e, k)); },
                        [&](const TensorElement& e) { return lift(tensor_raise(rd, e, k)); },
                        [&](const ModelElement& e) { return lift(model_raise(rd, e, k)); },
                    },
                    x.value);
}

std::optional<Element> lower(const RootDatum& rd, const Element& x, std::size_t k) {
  return std::visit(Overloaded{
                        [&](const BkElement& e) { return lift(bk_lower(e, k)); },
                        [&](const TElement& e) { return lift(t_lower(e, k)); },
                        [&](const S0Element& e) { return lift(s0_lower(e, k)); },
                        [&](const TensorElement& e) { return lift(tensor_lower(rd, e, k)); },
                        [&](const ModelElement& e) { return lift(model_lower(rd, e, k)); },
                    },
                    x.value);
}

}  // namespace crystal
