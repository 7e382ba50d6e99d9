#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hallpoly/collector.hpp"
#include "hallpoly/errors.hpp"
#include "hallpoly/presentation.hpp"

using namespace hallpoly;

namespace {

using Matrix = std::vector<std::vector<long>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<long>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < a.size(); ++l)
      for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Matrix elementary_power(int d, std::pair<int, int> ab, long e) {
  Matrix m(d, std::vector<long>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  m[ab.first - 1][ab.second - 1] = e;
  return m;
}

// Checks every relation a_j a_i = a_i a_j prod a_k^{t_ijk} on the matrices.
void check_relations_on_matrices(const PresentationParams& t, int d,
                                 const std::vector<std::pair<int, int>>& basis) {
  const int n = t.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto lhs = mat_mul(elementary_power(d, basis[j - 1], 1), elementary_power(d, basis[i - 1], 1));
      auto rhs = mat_mul(elementary_power(d, basis[i - 1], 1), elementary_power(d, basis[j - 1], 1));
      for (int k = j + 1; k <= n; ++k) rhs = mat_mul(rhs, elementary_power(d, basis[k - 1], t.value({i, j, k})));
      CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("triple indexing is lexicographic") {
  for (int n = 1; n <= 8; ++n) {
    auto ts = triples(n);
    CHECK(ts.size() == triple_count(n));
    for (std::size_t idx = 0; idx < ts.size(); ++idx) CHECK(triple_index(n, ts[idx]) == idx);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
  }
  CHECK_THROWS(triple_index(4, {1, 2, 5}));
}

TEST_CASE("generic presentations") {
  auto g3 = PresentationParams::generic(3);
  CHECK(g3.entries().size() == 1);
  CHECK(std::get<Var>(g3.at({1, 2, 3})) == Var::param(1, 2, 3));
  CHECK(PresentationParams::generic(5).entries().size() == 10);
  CHECK(PresentationParams::generic(1).entries().empty());
  CHECK(PresentationParams::generic(1).is_symbolic());
}

TEST_CASE("mixed assignments are rejected") {
  std::vector<ParamValue> mixed{Var::param(1, 2, 3), std::int64_t{3}, std::int64_t{0}, std::int64_t{1}};
  CHECK_THROWS_AS(PresentationParams::from_entries(4, mixed), std::invalid_argument);
  CHECK_THROWS_AS(PresentationParams::concrete(4, {1, 2}), DimensionMismatch);
}

TEST_CASE("projections of the generic presentation") {
  auto g4 = PresentationParams::generic(4);
  auto [u, pu] = project(g4, Projection::U);
  CHECK(u.n() == 3);
  CHECK(std::get<Var>(u.at({1, 2, 3})) == Var::param(2, 3, 4));
  CHECK(pu.index_map == std::vector<int>{2, 3, 4});
  auto [w, pw] = project(g4, Projection::W);
  CHECK(std::get<Var>(w.at({1, 2, 3})) == Var::param(1, 2, 3));
  CHECK(pw.index_map == std::vector<int>{1, 2, 3});
  auto [v, pv] = project(g4, Projection::V);
  CHECK(std::get<Var>(v.at({1, 2, 3})) == Var::param(1, 3, 4));
  CHECK(pv.index_map == std::vector<int>{1, 3, 4});
  for (const auto& t : triples(3)) {
    auto m = pv(t);
    CHECK(m.i < m.j);
    CHECK(m.j < m.k);
  }
}

TEST_CASE("U after U drops generators 1 and 2") {
  for (int n = 3; n <= 7; ++n) {
    auto [u1, m1] = project(PresentationParams::generic(n), Projection::U);
    auto [u2, m2] = project(u1, Projection::U);
    for (const auto& t : triples(n - 2))
      CHECK(std::get<Var>(u2.at(t)) == Var::param(t.i + 2, t.j + 2, t.k + 2));
  }
}

TEST_CASE("consistency of small presentations") {
  CHECK(check_consistency(PresentationParams::zero(5)));
  for (long t = -4; t <= 4; ++t) CHECK(check_consistency(PresentationParams::concrete(3, {t})));
}

TEST_CASE("catalog") {
  for (int n = 1; n <= 7; ++n) {
    auto cat = catalog(n);
    CHECK(cat.front().params == PresentationParams::zero(n));
    if (n >= 3) CHECK(cat.size() >= 3);
    for (const auto& entry : cat) {
      INFO("n = " << n << ", " << entry.name);
      CHECK(entry.params.n() == n);
      CHECK(check_consistency(entry.params));
      if (n >= 2)
        for (auto kind : {Projection::U, Projection::V, Projection::W})
          CHECK(check_consistency(project(entry.params, kind).first));
    }
  }
  auto c3 = catalog(3);
  CHECK(std::any_of(c3.begin(), c3.end(), [](const auto& e) { return e.params.value({1, 2, 3}) == 1; }));
}

TEST_CASE("unitriangular tuples satisfy the relations as matrices") {
  const std::vector<std::pair<int, int>> b3{{2, 3}, {1, 2}, {1, 3}};
  auto h = unitriangular_params(3, b3);
  CHECK(h.value({1, 2, 3}) == 1);
  check_relations_on_matrices(h, 3, b3);

  const std::vector<std::pair<int, int>> b4{{3, 4}, {2, 3}, {1, 2}, {2, 4}, {1, 3}, {1, 4}};
  auto ut4 = unitriangular_params(4, b4);
  check_relations_on_matrices(ut4, 4, b4);
  auto c6 = catalog(6);
  CHECK(std::any_of(c6.begin(), c6.end(), [&](const auto& e) { return e.params == ut4; }));
  CHECK(check_consistency(ut4));

  CHECK_THROWS(unitriangular_params(3, {{1, 3}, {1, 2}, {2, 3}}));
}
