#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crystal/root_datum.hpp"

namespace crystal {

/// Value of epsilon_k / phi_k: a finite integer or the sentinel -infinity.
class ExtInt {
 public:
  constexpr ExtInt() = default;  // -infinity
  constexpr ExtInt(Int v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt neg_infinity() { return {}; }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_infinity() const { return !finite_; }
  /// Precondition: is_finite().
  Int value() const;

  friend constexpr ExtInt operator+(ExtInt a, Int b) { return a.finite_ ? ExtInt(a.value_ + b) : a; }
  friend constexpr ExtInt operator-(ExtInt a, Int b) { return a.finite_ ? ExtInt(a.value_ - b) : a; }
  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.finite_ ? a.value_ <=> b.value_ : std::strong_ordering::equal;
  }
  friend constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  Int value_ = 0;
};

/// Element b_k(n) of the elementary crystal B_k.
struct BkElement {
  std::size_t k = 0;
  Int n = 0;
  friend bool operator==(const BkElement&, const BkElement&) = default;
};

/// The single element t_lambda of T_lambda.
struct TElement {
  Weight lambda;
  friend bool operator==(const TElement&, const TElement&) = default;
};

/// The single element s_0 of S_0 (epsilon = phi = 0, not -infinity).
struct S0Element {
  friend bool operator==(const S0Element&, const S0Element&) = default;
};

/// Slot placement of the framing dimensions: slot p -> (w_k^p)_k.
struct WProfile {
  std::size_t n = 0;
  std::map<Int, std::vector<Int>> slots;

  /// All of lambda in slot 0.
  static WProfile single_slot(const std::vector<Int>& lambda);

  Int at(std::size_t k, Int p) const;
  /// Sum over slots, as a weight with zero root part.
  Weight total() const;
  bool empty_support() const;

  friend bool operator==(const WProfile&, const WProfile&) = default;
};

/// Profile element (v_k^p) of the quiver-variety model against a fixed W-profile.
struct ModelElement {
  /// Key (k, p); zero entries are never stored.
  using Key = std::pair<std::size_t, Int>;

  std::shared_ptr<const WProfile> wp;
  std::map<Key, Int> v;

  Int at(std::size_t k, Int p) const;
  /// Adds delta to v_k^p, erasing the entry when it becomes zero.
  void adjust(std::size_t k, Int p, Int delta);

  friend bool operator==(const ModelElement& a, const ModelElement& b) {
    return a.v == b.v && (a.wp == b.wp || (a.wp && b.wp && *a.wp == *b.wp));
  }
};

struct Element;

/// Ordered factors b_1 (x) ... (x) b_n, left to right.
struct TensorElement {
  std::vector<Element> factors;
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// Tagged union over the element kinds. The formal element 0 is never an
/// Element; operators return std::nullopt for it.
struct Element {
  using Variant = std::variant<BkElement, TElement, S0Element, TensorElement, ModelElement>;
  Variant value;

  Element() : value(S0Element{}) {}
  Element(BkElement x) : value(std::move(x)) {}        // NOLINT(google-explicit-constructor)
  Element(TElement x) : value(std::move(x)) {}         // NOLINT(google-explicit-constructor)
  Element(S0Element x) : value(x) {}                   // NOLINT(google-explicit-constructor)
  Element(TensorElement x) : value(std::move(x)) {}    // NOLINT(google-explicit-constructor)
  Element(ModelElement x) : value(std::move(x)) {}     // NOLINT(google-explicit-constructor)

  template <class T>
  bool is() const { return std::holds_alternative<T>(value); }
  template <class T>
  const T& as() const { return std::get<T>(value); }

  /// "Bk", "T", "S0", "Tensor" or "Model".
  const char* kind() const;

  friend bool operator==(const Element&, const Element&) = default;
};

Element tensor(std::vector<Element> factors);

std::size_t hash_value(const Element& x);

struct ElementHash {
  std::size_t operator()(const Element& x) const { return hash_value(x); }
};

}  // namespace crystal
