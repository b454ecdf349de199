#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crystal {

using Int = std::int64_t;
using IntMatrix = std::vector<std::vector<Int>>;

/// Weight  sum_k lambda[k] Lambda_k - sum_k root[k] alpha_k.
///
/// Both coordinate vectors are stored exactly; two weights are equal only
/// when both vectors agree. Nothing is ever reconstructed from pairings.
struct Weight {
  std::vector<Int> lambda;
  std::vector<Int> root;

  Weight() = default;
  Weight(std::vector<Int> lam, std::vector<Int> rt)
      : lambda(std::move(lam)), root(std::move(rt)) {}

  static Weight zero(std::size_t n) { return {std::vector<Int>(n, 0), std::vector<Int>(n, 0)}; }
  static Weight fundamental(std::size_t n, std::size_t k);

  std::size_t rank() const { return lambda.size(); }

  Weight& operator+=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Adds alpha_k (root part decreases by one).
Weight add_alpha(Weight wt, std::size_t k);
/// Subtracts alpha_k (root part increases by one).
Weight subtract_alpha(Weight wt, std::size_t k);

/// Symmetric Kac-Moody root datum given by a loop-free graph.
///
/// Vertices are 0-based in the C++ API and carry their numbering; the quiver
/// orientation is implicit: an edge from l to k belongs to Omega iff l < k.
class RootDatum {
 public:
  /// Builds from an adjacency (edge multiplicity) matrix. Throws
  /// std::invalid_argument naming the offending entry (1-based) when the
  /// matrix is not square, not symmetric, negative, or has a loop.
  static RootDatum from_adjacency(const IntMatrix& adjacency);
  /// Builds from a generalized Cartan matrix (C = 2I - adjacency).
  static RootDatum from_cartan(const IntMatrix& cartan);
  /// "A<n>", "D<n>" (n >= 4), "E6", "E7", "E8", "affineA1".
  static RootDatum preset(std::string_view name);

  std::size_t rank() const { return n_; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& edge_mult() const { return edge_mult_; }
  Int cartan(std::size_t k, std::size_t l) const { return cartan_[k][l]; }
  Int edges(std::size_t k, std::size_t l) const { return edge_mult_[k][l]; }
  const std::string& name() const { return name_; }

  /// <h_k, wt> = lambda_k - sum_l C_kl root_l.
  Int pairing(std::size_t k, const Weight& wt) const;
  std::vector<Int> pairings(const Weight& wt) const;
  bool is_dominant(const Weight& wt) const;

  /// Weight with the given fundamental-weight coordinates and zero root part.
  Weight weight_from_lambda(std::vector<Int> lambda) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.cartan_ == b.cartan_; }

 private:
  RootDatum(std::string name, IntMatrix adjacency);
  void check_index(std::size_t k) const;

  std::string name_;
  std::size_t n_ = 0;
  IntMatrix cartan_;
  IntMatrix edge_mult_;
};

}  // namespace crystal
