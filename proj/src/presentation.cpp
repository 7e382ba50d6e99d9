#include "hallpoly/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallpoly/errors.hpp"

namespace hallpoly {

std::string Triple::to_string() const {
  return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

std::vector<Triple> triples(int n) {
  std::vector<Triple> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
  return out;
}

std::size_t triple_count(int n) {
  if (n < 3) return 0;
  auto m = static_cast<std::size_t>(n);
  return m * (m - 1) * (m - 2) / 6;
}

std::size_t triple_index(int n, const Triple& t) {
  if (!(1 <= t.i && t.i < t.j && t.j < t.k && t.k <= n))
    throw std::out_of_range("triple " + t.to_string() + " out of range for n = " + std::to_string(n));
  // Triples with first entry < i, then with first entry i and second < j.
  std::size_t idx = 0;
  for (int a = 1; a < t.i; ++a) {
    auto rest = static_cast<std::size_t>(n - a);
    idx += rest * (rest - 1) / 2;
  }
  for (int b = t.i + 1; b < t.j; ++b) idx += static_cast<std::size_t>(n - b);
  return idx + static_cast<std::size_t>(t.k - t.j - 1);
}

char projection_name(Projection p) {
  switch (p) {
    case Projection::U: return 'U';
    case Projection::V: return 'V';
    case Projection::W: return 'W';
  }
  return '?';
}

ProjectionMap projection_map(int n, Projection kind) {
  if (n < 2) throw std::invalid_argument("projection requires n >= 2");
  ProjectionMap pm{kind, n, {}};
  for (int i = 1; i <= n - 1; ++i) {
    switch (kind) {
      case Projection::U: pm.index_map.push_back(i + 1); break;
      case Projection::V: pm.index_map.push_back(i == 1 ? 1 : i + 1); break;
      case Projection::W: pm.index_map.push_back(i); break;
    }
  }
  return pm;
}

// ---------------------------------------------------------------- params

PresentationParams PresentationParams::generic(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  PresentationParams p;
  p.n_ = n;
  p.symbolic_ = true;
  for (const auto& t : triples(n)) p.entries_.emplace_back(Var::param(t.i, t.j, t.k));
  return p;
}

PresentationParams PresentationParams::concrete(int n, std::vector<std::int64_t> values) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (values.size() != triple_count(n))
    throw DimensionMismatch("expected " + std::to_string(triple_count(n)) + " parameters for n = " +
                            std::to_string(n) + ", got " + std::to_string(values.size()));
  PresentationParams p;
  p.n_ = n;
  p.symbolic_ = false;
  for (auto v : values) p.entries_.emplace_back(v);
  return p;
}

PresentationParams PresentationParams::zero(int n) {
  return concrete(n, std::vector<std::int64_t>(triple_count(n), 0));
}

PresentationParams PresentationParams::from_entries(int n, std::vector<ParamValue> entries,
                                                    bool symbolic_if_empty) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (entries.size() != triple_count(n))
    throw DimensionMismatch("expected " + std::to_string(triple_count(n)) + " parameters");
  std::size_t symbolic = 0;
  for (const auto& e : entries) {
    if (const auto* v = std::get_if<Var>(&e)) {
      if (v->kind() != VarKind::Param) throw std::invalid_argument("symbolic entries must be Param variables");
      ++symbolic;
    }
  }
  if (symbolic != 0 && symbolic != entries.size())
    throw std::invalid_argument("mixed symbolic and concrete parameters");
  PresentationParams p;
  p.n_ = n;
  p.symbolic_ = entries.empty() ? symbolic_if_empty : symbolic != 0;
  p.entries_ = std::move(entries);
  return p;
}

std::int64_t PresentationParams::value(const Triple& t) const {
  const auto& e = at(t);
  if (const auto* v = std::get_if<std::int64_t>(&e)) return *v;
  throw std::logic_error("parameter " + t.to_string() + " is symbolic");
}

std::vector<std::int64_t> PresentationParams::values() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries_) {
    const auto* v = std::get_if<std::int64_t>(&e);
    if (v == nullptr) throw std::logic_error("symbolic parameters have no values");
    out.push_back(*v);
  }
  return out;
}

Polynomial PresentationParams::polynomial(const Triple& t) const {
  const auto& e = at(t);
  if (const auto* v = std::get_if<Var>(&e)) return Polynomial(*v);
  return Polynomial(Rational(static_cast<long>(std::get<std::int64_t>(e))));
}

PresentationParams PresentationParams::with_value(const Triple& t, std::int64_t v) const {
  if (symbolic_) throw std::logic_error("with_value requires concrete parameters");
  PresentationParams p = *this;
  p.entries_.at(triple_index(n_, t)) = v;
  return p;
}

PresentationParams PresentationParams::padded(int new_n) const {
  if (symbolic_) throw std::logic_error("padded requires concrete parameters");
  if (new_n < n_) throw std::invalid_argument("cannot pad to fewer generators");
  PresentationParams p = zero(new_n);
  for (const auto& t : triples(n_)) p.entries_[triple_index(new_n, t)] = value(t);
  return p;
}

std::pair<PresentationParams, ProjectionMap> project(const PresentationParams& p, Projection kind) {
  auto pm = projection_map(p.n(), kind);
  std::vector<ParamValue> entries;
  for (const auto& t : triples(p.n() - 1)) entries.push_back(p.at(pm(t)));
  auto sub = PresentationParams::from_entries(p.n() - 1, std::move(entries), p.is_symbolic());
  return {sub, pm};
}

// ---------------------------------------------------------------- matrices

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix identity(int d) {
  Matrix m(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const auto d = a.size();
  Matrix c(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

// (I + e E_{ab})^{-1} = I - e E_{ab}; powers are I + e E_{ab}.
Matrix elementary(int d, std::pair<int, int> ab, std::int64_t e) {
  Matrix m = identity(d);
  m[ab.first - 1][ab.second - 1] = e;
  return m;
}

// Unitriangular inverse by back substitution.
Matrix inverse_unitriangular(const Matrix& m) {
  const int d = static_cast<int>(m.size());
  Matrix inv = identity(d);
  for (int j = 0; j < d; ++j)
    for (int i = j - 1; i >= 0; --i) {
      std::int64_t s = 0;
      for (int l = i + 1; l <= j; ++l) s += m[i][l] * inv[l][j];
      inv[i][j] = -s;
    }
  return inv;
}

// Exponents of m = g_1^{x_1} ... g_r^{x_r}, peeling basis elements from the left.
std::vector<std::int64_t> sift(Matrix m, int d, const std::vector<std::pair<int, int>>& basis) {
  std::vector<std::int64_t> x;
  const Matrix original = m;
  for (const auto& ab : basis) {
    std::int64_t e = m[ab.first - 1][ab.second - 1];
    x.push_back(e);
    m = elementary(d, ab, -e) * m;
  }
  if (m != identity(d)) throw std::logic_error("sift: basis does not cover the matrix");
  Matrix rebuilt = identity(d);
  for (std::size_t i = 0; i < basis.size(); ++i) rebuilt = rebuilt * elementary(d, basis[i], x[i]);
  if (rebuilt != original) throw std::logic_error("sift: reconstruction mismatch");
  return x;
}

}  // namespace

PresentationParams unitriangular_params(int d, const std::vector<std::pair<int, int>>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n != d * (d - 1) / 2) throw std::invalid_argument("basis must have d(d-1)/2 elements");
  std::vector<Matrix> gens;
  for (const auto& ab : basis) gens.push_back(elementary(d, ab, 1));
  PresentationParams p = PresentationParams::zero(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto& gi = gens[i - 1];
      const auto& gj = gens[j - 1];
      // a_j a_i = a_i a_j c  =>  c = (a_i a_j)^{-1} a_j a_i
      Matrix c = inverse_unitriangular(gi * gj) * (gj * gi);
      auto x = sift(c, d, basis);
      for (int m = 1; m <= j; ++m)
        if (x[m - 1] != 0)
          throw std::logic_error("unitriangular basis is not ordered by a central series");
      for (int k = j + 1; k <= n; ++k) p = p.with_value({i, j, k}, x[k - 1]);
    }
  }
  return p;
}

// ---------------------------------------------------------------- catalog

std::vector<CatalogEntry> catalog(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("catalog covers 1 <= n <= 7");
  std::vector<CatalogEntry> out;
  out.push_back({"free-abelian", PresentationParams::zero(n)});
  if (n < 3) return out;

  // UT_3(Z) with basis (E23, E12, E13): a_2 a_1 = a_1 a_2 a_3.
  const auto heisenberg = unitriangular_params(3, {{2, 3}, {1, 2}, {1, 3}});
  out.push_back({"heisenberg", heisenberg.padded(n)});

  if (n == 3) {
    out.push_back({"heisenberg-2", PresentationParams::concrete(3, {2})});
    out.push_back({"heisenberg-neg3", PresentationParams::concrete(3, {-3})});
    return out;
  }

  out.push_back({"heisenberg-central-last", PresentationParams::zero(n).with_value({1, 2, n}, 1)});

  // Z^{n-1} extended by a_1 acting as a unipotent Jordan block.
  auto filiform = PresentationParams::zero(n);
  for (int j = 2; j < n; ++j) filiform = filiform.with_value({1, j, j + 1}, 1);
  out.push_back({"maximal-class", filiform});

  if (n == 4) {
    out.push_back({"mixed-4", PresentationParams::concrete(4, {2, -1, 1, 3})});
    return out;
  }

  // Free nilpotent of rank 2, class 3: a_3 = [a_2,a_1], a_4 = [a_3,a_1], a_5 = [a_3,a_2].
  auto free23 = PresentationParams::zero(5).with_value({1, 2, 3}, 1).with_value({1, 3, 4}, 1).with_value(
      {2, 3, 5}, 1);
  out.push_back({"free-nilpotent-2-3", free23.padded(n)});

  if (n >= 6) {
    auto h2 = PresentationParams::zero(6).with_value({1, 2, 5}, 1).with_value({3, 4, 6}, 1);
    out.push_back({"heisenberg-squared", h2.padded(n)});
    const auto ut4 = unitriangular_params(4, {{3, 4}, {2, 3}, {1, 2}, {2, 4}, {1, 3}, {1, 4}});
    out.push_back({"unitriangular-4", ut4.padded(n)});
  }
  return out;
}

}  // namespace hallpoly
