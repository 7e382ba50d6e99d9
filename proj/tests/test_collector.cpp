#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hallpoly/collector.hpp"
#include "test_support.hpp"

using namespace hallpoly;

namespace {
const auto heis = PresentationParams::concrete(3, {1});
}

TEST_CASE("collection in the Heisenberg group") {
  CHECK(normal_form({{2, 1}, {1, 1}}, heis) == ExpVec{1, 1, 1});
  // a_1 a_2 a_1^{-1} = a_2 a_3^{-1}, so a_2 a_1^{-1} = a_1^{-1} a_2 a_3^{-1}.
  CHECK(normal_form({{2, 1}, {1, -1}}, heis) == ExpVec{-1, 1, -1});
  CHECK(normal_form({{1, -1}, {2, 1}, {1, 1}}, heis) == ExpVec{0, 1, 1});
  CHECK(normal_form({{2, 3}, {1, 2}}, heis) == ExpVec{2, 3, 6});
  CHECK(normal_form({}, heis) == ExpVec{0, 0, 0});
}

TEST_CASE("free abelian collection adds exponents") {
  auto zero = PresentationParams::zero(5);
  CHECK(normal_form({{5, 2}, {3, -1}, {1, 4}, {3, 3}, {2, 1}}, zero) == ExpVec{4, 1, 2, 0, 2});
  CHECK(oracle_multiply(zero, {1, 2, 3, 4, 5}, {-1, 0, 2, 1, 1}) == ExpVec{0, 2, 5, 5, 6});
}

TEST_CASE("oracle multiplication and powering") {
  CHECK(oracle_multiply(heis, {1, 1, 0}, {1, 0, 0}) == ExpVec{2, 1, 1});
  CHECK(oracle_multiply(heis, {2, -1, 3}, {0, 0, 0}) == ExpVec{2, -1, 3});
  CHECK(oracle_power(heis, {2, -1, 3}, 0) == ExpVec{0, 0, 0});
  CHECK(oracle_power(heis, {2, -1, 3}, 1) == ExpVec{2, -1, 3});
  CHECK(oracle_power(heis, {1, 1, 0}, 2) == ExpVec{2, 2, 1});
  CHECK(oracle_power(heis, {1, 1, 0}, 2) == oracle_multiply(heis, {1, 1, 0}, {1, 1, 0}));
  Collector c(heis);
  auto inv = c.inverse({1, 1, 0});
  CHECK(c.multiply({1, 1, 0}, inv) == ExpVec{0, 0, 0});
  CHECK(c.power({1, 1, 0}, -1) == inv);
}

TEST_CASE("conjugates by inverses") {
  Collector c(PresentationParams::concrete(4, {2, -1, 1, 3}));
  for (int g = 1; g <= 4; ++g)
    for (int k = g + 1; k <= 4; ++k) {
      // a_g^{-1} (a_g a_k a_g^{-1}) a_g = a_k
      const auto& minus = c.conjugate(k, g, -1);
      Word w{{g, -1}};
      for (auto s : word_of(minus)) w.push_back(s);
      w.push_back({g, 1});
      ExpVec unit(4, 0);
      unit[k - 1] = 1;
      CHECK(c.normal_form(w) == unit);
    }
}

TEST_CASE("group axioms on catalog instances") {
  std::mt19937_64 rng(1234);
  int cases = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& entry : catalog(n)) {
      Collector c(entry.params);
      for (int s = 0; s < 10; ++s, ++cases) {
        INFO(entry.name << " n=" << n);
        auto x = testing::random_vector(rng, n, 3);
        auto y = testing::random_vector(rng, n, 3);
        auto w = testing::random_vector(rng, n, 3);
        CHECK(c.multiply(c.multiply(x, y), w) == c.multiply(x, c.multiply(y, w)));
        CHECK(c.multiply(x, c.inverse(x)) == ExpVec(n, 0));
        std::uniform_int_distribution<int> ez(-3, 3);
        const int a = ez(rng), b = ez(rng);
        CHECK(c.power(x, a + b) == c.multiply(c.power(x, a), c.power(x, b)));
        // Collection is idempotent on normal words.
        auto nf = c.normal_form(word_of(x));
        CHECK(nf == x);
        CHECK(c.normal_form(word_of(nf)) == nf);
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("coordinates below the first nonzero entry add") {
  std::mt19937_64 rng(55);
  for (int n = 3; n <= 6; ++n)
    for (const auto& entry : catalog(n)) {
      Collector c(entry.params);
      for (int s = 0; s < 10; ++s) {
        auto x = testing::random_vector(rng, n, 3);
        auto y = testing::random_vector(rng, n, 3);
        std::uniform_int_distribution<int> cut(1, n);
        const int i = cut(rng);
        for (int j = 0; j < i - 1; ++j) x[j] = y[j] = 0;
        auto p = c.multiply(x, y);
        CHECK(p[i - 1] == x[i - 1] + y[i - 1]);
      }
    }
}

TEST_CASE("large exponents in the Heisenberg group") {
  Collector c(heis);
  // a_2^b a_1^a = a_1^a a_2^b a_3^{ab}
  CHECK(c.multiply({0, 1000, 0}, {1000, 0, 0}) == ExpVec{1000, 1000, 1000000});
  CHECK(c.multiply({0, -700, 5}, {300, 0, 0}) == ExpVec{300, -700, 5 - 210000});
}
