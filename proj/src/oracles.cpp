#include "crystal/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crystal {

namespace {

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in oracle arithmetic");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in oracle arithmetic");
  return out;
}

void require_finite(const RootDatum& rd) {
  if (!finite_type_check(rd)) throw std::invalid_argument("root datum '" + rd.name() + "' is not of finite type");
}

// (x, y) = x^T C y on simple-root coordinates.
Int form(const RootDatum& rd, const std::vector<Int>& x, const std::vector<Int>& y) {
  Int total = 0;
  for (std::size_t i = 0; i < rd.rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rd.rank(); ++j) total += x[i] * rd.cartan(i, j) * y[j];
  }
  return total;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), Int{0});
}

}  // namespace

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
  // Bareiss: after step k, a[k][k] is the (k+1)-th leading principal minor.
  IntMatrix a = m;
  const std::size_t n = a.size();
  std::vector<Int> minors;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] <= 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = checked_sub(checked_mul(a[k][k], a[i][j]), checked_mul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return minors;
}

bool finite_type_check(const RootDatum& rd) {
  const auto minors = leading_principal_minors(rd.cartan());
  return minors.size() == rd.rank() && std::all_of(minors.begin(), minors.end(), [](Int d) { return d > 0; });
}

std::vector<std::vector<Int>> positive_roots(const RootDatum& rd) {
  require_finite(rd);
  const std::size_t n = rd.rank();
  std::set<std::vector<Int>> found;
  std::vector<std::vector<Int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> simple(n, 0);
    simple[i] = 1;
    found.insert(simple);
    queue.push_back(std::move(simple));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(beta) = beta - <h_i, beta> alpha_i
      std::vector<Int> reflected = queue[head];
      Int coroot = 0;
      for (std::size_t j = 0; j < n; ++j) coroot += rd.cartan(i, j) * reflected[j];
      reflected[i] -= coroot;
      if (std::any_of(reflected.begin(), reflected.end(), [](Int c) { return c < 0; })) continue;
      if (found.insert(reflected).second) queue.push_back(std::move(reflected));
    }
  }
  std::vector<std::vector<Int>> roots(found.begin(), found.end());
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), Int{0}) < std::accumulate(b.begin(), b.end(), Int{0});
  });
  return roots;
}

Int weyl_dim(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw std::invalid_argument("weyl_dim needs a dominant weight");
  const auto labels = rd.pairings(lambda);
  Int num = 1;
  Int den = 1;
  for (const auto& alpha : positive_roots(rd)) {
    // Simply laced: (lambda + rho, alpha) = sum_i alpha_i (a_i + 1), (rho, alpha) = height.
    Int top = 0;
    Int height = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      top += alpha[i] * (labels[i] + 1);
      height += alpha[i];
    }
    const Int g1 = std::gcd(top, den);
    const Int g2 = std::gcd(height, num);
    num = checked_mul(num / g2, top / g1);
    den = checked_mul(den / g1, height / g2);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula produced a non-integer");
  return num / den;
}

std::map<Weight, Int> freudenthal_multiplicities(const RootDatum& rd, const Weight& lambda) {
  require_finite(rd);
  if (!rd.is_dominant(lambda)) throw std::invalid_argument("freudenthal_multiplicities needs a dominant weight");
  const std::size_t n = rd.rank();
  const auto labels = rd.pairings(lambda);
  const auto roots = positive_roots(rd);

  // Multiplicity of lambda - beta, keyed by beta (simple-root coordinates).
  std::map<std::vector<Int>, Int> mult;
  const std::vector<Int> top(n, 0);
  mult[top] = 1;

  std::vector<Int> lambda_rho(n);
  for (std::size_t i = 0; i < n; ++i) lambda_rho[i] = labels[i] + 1;

  std::set<std::vector<Int>> level{top};
  while (!level.empty()) {
    std::set<std::vector<Int>> candidates;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < n; ++i) {
        auto next = beta;
        ++next[i];
        candidates.insert(std::move(next));
      }
    std::set<std::vector<Int>> next_level;
    for (const auto& beta : candidates) {
      // (lambda+rho)^2 - (mu+rho)^2 = 2 (lambda+rho, beta) - (beta, beta)
      const Int denom = 2 * dot(lambda_rho, beta) - form(rd, beta, beta);
      if (denom <= 0) continue;
      Int numer = 0;
      for (const auto& alpha : roots) {
        const Int lambda_alpha = dot(labels, alpha);
        const Int beta_alpha = form(rd, beta, alpha);
        std::vector<Int> shifted = beta;
        for (Int j = 1;; ++j) {
          bool nonneg = true;
          for (std::size_t i = 0; i < n; ++i) {
            shifted[i] -= alpha[i];
            nonneg = nonneg && shifted[i] >= 0;
          }
          if (!nonneg) break;
          auto it = mult.find(shifted);
          if (it == mult.end()) continue;
          // (mu + j alpha, alpha) with (alpha, alpha) = 2
          numer += (lambda_alpha - beta_alpha + 2 * j) * it->second;
        }
      }
      numer *= 2;
      if (numer == 0) continue;
      if (numer % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
      mult[beta] = numer / denom;
      next_level.insert(beta);
    }
    level = std::move(next_level);
  }

  std::map<Weight, Int> out;
  for (const auto& [beta, m] : mult) {
    Weight mu = lambda;
    for (std::size_t i = 0; i < n; ++i) mu.root[i] += beta[i];
    out.emplace(std::move(mu), m);
  }
  return out;
}

}  // namespace crystal
