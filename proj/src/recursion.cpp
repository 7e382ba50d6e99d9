#include "hallpoly/recursion.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hallpoly {

namespace {

std::mutex cache_mutex;
std::vector<std::vector<Integer>> pascal = {{Integer(1)}};
std::vector<Rational> bernoulli_values = {Rational(1)};

Integer binomial_locked(unsigned n, unsigned k) {
  while (pascal.size() <= n) {
    const auto& prev = pascal.back();
    std::vector<Integer> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  std::lock_guard lock(cache_mutex);
  return binomial_locked(n, k);
}

Rational bernoulli(unsigned k) {
  std::lock_guard lock(cache_mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 determines B_m from B_0..B_{m-1}.
  while (bernoulli_values.size() <= k) {
    const unsigned m = static_cast<unsigned>(bernoulli_values.size());
    Rational sum = 0;
    for (unsigned j = 0; j < m; ++j) sum += Rational(binomial_locked(m + 1, j)) * bernoulli_values[j];
    Rational bm = -sum / Rational(m + 1);
    bm.canonicalize();
    bernoulli_values.push_back(bm);
  }
  return bernoulli_values[k];
}

Polynomial solve_recursion(const Polynomial& g, Var var, const Polynomial& f0) {
  if (f0.involves(var))
    throw std::invalid_argument("solve_recursion: f0 must not involve " + var.name());

  std::vector<Polynomial> c;  // c[e] = coefficient of var^e in g
  for (const auto& [key, value] : split_by_vars(g, VarSet::of({var}))) {
    auto e = key.exponent(var);
    if (c.size() <= e) c.resize(e + 1);
    c[e] = value;
  }
  Polynomial f = f0;
  if (c.empty()) return f;
  const unsigned l = static_cast<unsigned>(c.size()) - 1;

  for (unsigned m = 1; m <= l + 1; ++m) {
    Polynomial fm;
    for (unsigned k = 0; k + m <= l + 1; ++k) {
      const auto& coeff = c[m + k - 1];
      if (coeff.is_zero()) continue;
      Rational b = bernoulli(k);
      if (sgn(b) == 0) continue;
      Rational factor = b * Rational(binomial(m + k, k)) / Rational(m + k);
      factor.canonicalize();
      Polynomial scaled = coeff;
      scaled *= factor;
      fm += scaled;
    }
    f += fm * Polynomial(Monomial(var, m), Rational(1));
  }
  return f;
}

}  // namespace hallpoly
