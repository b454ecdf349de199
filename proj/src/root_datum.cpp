#include "crystal/root_datum.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace crystal {

Weight Weight::fundamental(std::size_t n, std::size_t k) {
  Weight w = zero(n);
  w.lambda.at(k) = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    lambda[i] += other.lambda[i];
    root[i] += other.root[i];
  }
  return *this;
}

Weight add_alpha(Weight wt, std::size_t k) {
  wt.root.at(k) -= 1;
  return wt;
}

Weight subtract_alpha(Weight wt, std::size_t k) {
  wt.root.at(k) += 1;
  return wt;
}

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void add_edge(IntMatrix& m, std::size_t a, std::size_t b, Int count = 1) {
  m[a][b] += count;
  m[b][a] += count;
}

IntMatrix empty_graph(std::size_t n) { return IntMatrix(n, std::vector<Int>(n, 0)); }

// Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4.
IntMatrix type_e(std::size_t n) {
  IntMatrix m = empty_graph(n);
  add_edge(m, 0, 2);
  add_edge(m, 1, 3);
  for (std::size_t k = 2; k + 1 < n; ++k) add_edge(m, k, k + 1);
  return m;
}

}  // namespace

RootDatum::RootDatum(std::string name, IntMatrix adjacency)
    : name_(std::move(name)), n_(adjacency.size()), edge_mult_(std::move(adjacency)) {
  if (n_ == 0) throw std::invalid_argument("root datum needs at least one vertex");
  for (std::size_t i = 0; i < n_; ++i) {
    if (edge_mult_[i].size() != n_)
      throw std::invalid_argument("adjacency matrix is not square (row " + std::to_string(i + 1) + ")");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (edge_mult_[i][i] != 0) throw std::invalid_argument("edge loop at vertex " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n_; ++j) {
      if (edge_mult_[i][j] < 0) throw std::invalid_argument("negative adjacency entry at " + entry_name(i, j));
      if (edge_mult_[i][j] != edge_mult_[j][i])
        throw std::invalid_argument("adjacency matrix not symmetric at " + entry_name(i, j));
    }
  }
  cartan_ = empty_graph(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) cartan_[i][j] = (i == j ? 2 : 0) - edge_mult_[i][j];
}

RootDatum RootDatum::from_adjacency(const IntMatrix& adjacency) { return RootDatum("custom", adjacency); }

RootDatum RootDatum::from_cartan(const IntMatrix& cartan) {
  IntMatrix adj = cartan;
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    if (cartan[i].size() != cartan.size())
      throw std::invalid_argument("Cartan matrix is not square (row " + std::to_string(i + 1) + ")");
    for (std::size_t j = 0; j < cartan.size(); ++j) {
      if (i == j) {
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal entry at " + entry_name(i, i) + " is not 2");
        adj[i][j] = 0;
      } else {
        adj[i][j] = -cartan[i][j];
      }
    }
  }
  return RootDatum("custom", std::move(adj));
}

RootDatum RootDatum::preset(std::string_view name) {
  const std::string label(name);
  if (name == "affineA1") {
    IntMatrix m = empty_graph(2);
    add_edge(m, 0, 1, 2);
    return RootDatum(label, std::move(m));
  }
  if (name.size() < 2) throw std::invalid_argument("unknown root datum preset '" + label + "'");
  std::size_t n = 0;
  const auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0)
    throw std::invalid_argument("unknown root datum preset '" + label + "'");

  switch (name.front()) {
    case 'A': {
      IntMatrix m = empty_graph(n);
      for (std::size_t k = 0; k + 1 < n; ++k) add_edge(m, k, k + 1);
      return RootDatum(label, std::move(m));
    }
    case 'D': {
      if (n < 4) throw std::invalid_argument("preset D<n> needs n >= 4");
      IntMatrix m = empty_graph(n);
      for (std::size_t k = 0; k + 2 < n - 1; ++k) add_edge(m, k, k + 1);
      add_edge(m, n - 3, n - 2);
      add_edge(m, n - 3, n - 1);
      return RootDatum(label, std::move(m));
    }
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("preset E<n> needs 6 <= n <= 8");
      return RootDatum(label, type_e(n));
    default:
      throw std::invalid_argument("unknown root datum preset '" + label + "'");
  }
}

void RootDatum::check_index(std::size_t k) const {
  if (k >= n_)
    throw std::out_of_range("vertex index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n_));
}

Int RootDatum::pairing(std::size_t k, const Weight& wt) const {
  check_index(k);
  if (wt.rank() != n_) throw std::invalid_argument("weight rank does not match root datum");
  Int value = wt.lambda[k];
  for (std::size_t l = 0; l < n_; ++l) value -= cartan_[k][l] * wt.root[l];
  return value;
}

std::vector<Int> RootDatum::pairings(const Weight& wt) const {
  std::vector<Int> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = pairing(k, wt);
  return out;
}

bool RootDatum::is_dominant(const Weight& wt) const {
  for (std::size_t k = 0; k < n_; ++k)
    if (pairing(k, wt) < 0) return false;
  return true;
}

Weight RootDatum::weight_from_lambda(std::vector<Int> lambda) const {
  if (lambda.size() != n_)
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " entries, root datum has rank " +
                                std::to_string(n_));
  return Weight(std::move(lambda), std::vector<Int>(n_, 0));
}

}  // namespace crystal
