#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "hallpoly/collector.hpp"
#include "hallpoly/consistency.hpp"
#include "hallpoly/errors.hpp"
#include "hallpoly/runtime.hpp"
#include "test_support.hpp"

using namespace hallpoly;

namespace {

const Polynomial X1 = Var::x(1), X2 = Var::x(2), X3 = Var::x(3), Y1 = Var::y(1), Y3 = Var::y(3), Z = Var::z();
const auto heis = PresentationParams::concrete(3, {1});

}  // namespace

TEST_CASE("specialization") {
  auto hs = derive(3);
  CHECK(specialize(hs, heis).F[2] == X3 + Y3 + X2 * Y1);
  auto zero = specialize(hs, PresentationParams::zero(3));
  for (int i = 1; i <= 3; ++i) CHECK(zero.F[i - 1] == Polynomial(Var::x(i)) + Polynomial(Var::y(i)));
  CHECK(specialize(hs, PresentationParams::concrete(3, {2})).K[2] == X3 * Z + X1 * X2 * (Z * Z - Z));
  CHECK_THROWS_AS(specialize(hs, PresentationParams::zero(4)), DimensionMismatch);
  for (const auto& f : specialize(derive(5), catalog(5).back().params).F)
    CHECK_FALSE(f.involves_any(VarSet::of_kinds({VarKind::Param})));
}

TEST_CASE("Horner evaluation matches direct evaluation") {
  std::mt19937_64 rng(17);
  const std::vector<Var> vars{Var::x(1), Var::x(2), Var::y(1), Var::y(2), Var::z()};
  auto slot = [](Var v) {
    if (v.kind() == VarKind::X) return v.index() - 1;
    if (v.kind() == VarKind::Y) return 2 + v.index() - 1;
    return 4;
  };
  for (int s = 0; s < 200; ++s) {
    auto p = testing::random_polynomial(rng, vars, 5, 8);
    HornerTree h(p, slot);
    std::vector<Integer> values;
    std::map<Var, Rational> at;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const long v = static_cast<long>(rng() % 11) - 5;
      values.emplace_back(v);
      at[vars[i]] = Rational(v);
    }
    const Rational expected = p.evaluate(at);
    Rational scaled(h.eval_scaled(values), h.denominator());
    scaled.canonicalize();
    CHECK(scaled == expected);
    if (expected.get_den() == 1)
      CHECK(h.eval_integral(values) == expected.get_num());
    else
      CHECK_THROWS_AS(h.eval_integral(values), NonIntegralError);
  }
  HornerTree zero(Polynomial(), slot);
  CHECK(zero.eval_integral({}) == 0);
}

TEST_CASE("evaluation examples in the Heisenberg group") {
  auto ss = specialize(derive(3), heis);
  CHECK(eval_multiply(ss, {2, -1, 3}, {0, 0, 0}) == ExpVec{2, -1, 3});
  CHECK(eval_multiply(ss, {1, 1, 0}, {1, 0, 0}) == ExpVec{2, 1, 1});
  CHECK(eval_power(ss, {2, -1, 3}, 0) == ExpVec{0, 0, 0});
  CHECK(eval_power(ss, {1, 1, 0}, 3) == ExpVec{3, 3, 3});
  CHECK(eval_power(ss, {1, 1, 0}, 3) == oracle_power(heis, {1, 1, 0}, 3));
  auto inv = eval_power(ss, {1, 2, 3}, -1);
  CHECK(eval_multiply(ss, {1, 2, 3}, inv) == ExpVec{0, 0, 0});
  CHECK_THROWS_AS(eval_multiply(ss, {1, 2}, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("non-integral values are reported") {
  HallSystem hs;
  hs.n = 1;
  hs.F = {X1 * Polynomial(Rational(1, 2)) + Y1};
  hs.K = {X1 * Z};
  auto ss = specialize(hs, PresentationParams::zero(1));
  CHECK(eval_multiply(ss, {2}, {1}) == ExpVec{2});
  CHECK_THROWS_AS(eval_multiply(ss, {1}, {1}), NonIntegralError);
}

TEST_CASE("evaluation agrees with collection on the catalog") {
  std::mt19937_64 rng(31337);
  for (int n = 3; n <= 6; ++n) {
    auto hs = derive(n);
    auto reduced = n >= 5 ? reduce_system(hs, buchberger(coefficients(assoc_defect(hs)))) : hs;
    for (const auto& entry : catalog(n)) {
      INFO(entry.name << ", n = " << n);
      const auto ss = specialize(hs, entry.params);
      const auto rs = specialize(reduced, entry.params);
      Collector c(entry.params);
      std::uniform_int_distribution<std::int64_t> ez(-4, 4);
      const int samples = n <= 4 ? 200 : 40;
      for (int s = 0; s < samples; ++s) {
        auto x = testing::random_vector(rng, n, 3), y = testing::random_vector(rng, n, 3),
             w = testing::random_vector(rng, n, 3);
        const auto z = ez(rng);
        const auto xy = c.multiply(x, y);
        CHECK(eval_multiply(ss, x, y) == xy);
        CHECK(eval_multiply(rs, x, y) == xy);
        const auto xz = c.power(x, z);
        CHECK(eval_power(ss, x, z) == xz);
        CHECK(eval_power(rs, x, z) == xz);
        CHECK(eval_multiply(ss, eval_multiply(ss, x, y), w) == eval_multiply(ss, x, eval_multiply(ss, y, w)));
      }
    }
  }
}

TEST_CASE("large exponents for n = 3") {
  std::mt19937_64 rng(8);
  auto hs = derive(3);
  for (const auto& entry : catalog(3)) {
    auto ss = specialize(hs, entry.params);
    Collector c(entry.params);
    for (int s = 0; s < 5; ++s) {
      auto x = testing::random_vector(rng, 3, 1000), y = testing::random_vector(rng, 3, 1000);
      CHECK(eval_multiply(ss, x, y) == c.multiply(x, y));
    }
    CHECK(eval_power(ss, {1000, -1000, 7}, 3) == c.power({1000, -1000, 7}, 3));
  }
}

TEST_CASE("specialization commutes with evaluation") {
  std::mt19937_64 rng(4);
  auto hs = derive(5);
  for (const auto& entry : catalog(5)) {
    auto ss = specialize(hs, entry.params);
    for (int s = 0; s < 10; ++s) {
      auto x = testing::random_vector(rng, 5, 3), y = testing::random_vector(rng, 5, 3);
      std::map<Var, Rational> at;
      for (const auto& tr : triples(5)) at[Var::param(tr.i, tr.j, tr.k)] = Rational(entry.params.value(tr));
      for (int i = 1; i <= 5; ++i) {
        at[Var::x(i)] = Rational(x[i - 1]);
        at[Var::y(i)] = Rational(y[i - 1]);
      }
      auto got = eval_multiply(ss, x, y);
      for (int i = 1; i <= 5; ++i) CHECK(hs.f(i).evaluate(at) == Rational(got[i - 1]));
    }
  }
}

TEST_CASE("bench report") {
  auto ss = specialize(derive(3), heis);
  BenchSpec spec{50, 3, 11};
  CHECK(bench_workload(3, spec) == bench_workload(3, spec));
  CHECK(bench_workload(3, spec) != bench_workload(3, BenchSpec{50, 3, 12}));
  auto r = bench(ss, heis, spec);
  CHECK(r.n == 3);
  CHECK(r.iters == 50);
  CHECK(r.seed == 11);
  CHECK(r.eval_ns_total > 0);
  CHECK(r.collect_ns_total > 0);
  CHECK(r.t_digest == tuple_digest(heis));
  CHECK(r.t_digest.size() == 16);
  CHECK(tuple_digest(heis) != tuple_digest(PresentationParams::concrete(3, {2})));
  auto j = nlohmann::json::parse(r.to_json());
  for (const char* key : {"n", "t_digest", "iters", "range", "eval_ns_total", "collect_ns_total", "ratio", "seed"})
    CHECK(j.contains(key));
}
