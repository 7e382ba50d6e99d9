#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hallpoly/errors.hpp"
#include "hallpoly/io.hpp"
#include "test_support.hpp"

using namespace hallpoly;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("hallpoly_test_io_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("coefficient strings") {
  CHECK(coeff_to_string(Rational(-1, 2)) == "-1/2");
  CHECK(coeff_to_string(Rational(3)) == "3");
  CHECK(coeff_from_string("-1/2", "") == Rational(-1, 2));
  CHECK(coeff_from_string("17", "") == 17);
  for (const char* bad : {"2/4", "0", "1/0", "abc", "01", "1/-2", "+3", "", "1/1", "-0"})
    CHECK_THROWS_AS(coeff_from_string(bad, "/x"), ParseError);
}

TEST_CASE("polynomial serialization") {
  CHECK(terms_to_json(Polynomial()).empty());
  auto j = terms_to_json(Polynomial(Var::x(1)) * Polynomial(Rational(-1, 2)));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["coeff"] == "-1/2");
  CHECK(j[0]["vars"]["x1"] == 1);

  std::mt19937_64 rng(3);
  const std::vector<Var> vars{Var::param(1, 2, 3), Var::param(2, 4, 5), Var::x(1), Var::y(3), Var::w(2),
                              Var::z(),           Var::u(),           Var::v()};
  for (int s = 0; s < 100; ++s) {
    auto p = testing::random_polynomial(rng, vars, 4, 8);
    PolynomialFile f{5, 'K', 2, {}, false, p};
    const auto text = dump(to_json(f));
    auto back = polynomial_file_from_json(parse_json(text, "test"));
    CHECK(back.poly == p);
    CHECK(back.index == 2);
    CHECK(dump(to_json(back)) == text);
  }
  PolynomialFile r{4, 'R', 0, {1, 3, 4}, true, Polynomial(Var::u())};
  auto back = polynomial_file_from_json(to_json(r));
  CHECK(back.kind == 'R');
  CHECK(back.triple == Triple{1, 3, 4});
  CHECK(back.reduced);
}

TEST_CASE("malformed input carries a position") {
  try {
    parse_json("{\"schema\": 1, \"n\": ", "input");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where().rfind("byte ", 0) == 0);
  }
  auto good = to_json(PolynomialFile{3, 'F', 3, {}, false, Polynomial(Var::x(3)) + Polynomial(Var::y(3))});
  auto expect_error_at = [](const Json& j, const std::string& where) {
    try {
      polynomial_file_from_json(j);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.where() == where);
    }
  };
  auto j = good;
  j["terms"][1]["coeff"] = "2/4";
  expect_error_at(j, "/terms/1/coeff");
  j = good;
  j["terms"][0]["vars"]["q7"] = 1;
  expect_error_at(j, "/terms/0/vars/q7");
  j = good;
  j["terms"][0]["vars"]["x3"] = 0;
  expect_error_at(j, "/terms/0/vars/x3");
  j = good;
  j.erase("kind");
  expect_error_at(j, "");
  j = good;
  j["index"] = 9;
  expect_error_at(j, "/index");
  j = good;
  j["schema"] = 2;
  expect_error_at(j, "/schema");
  j = good;
  j["terms"].push_back(j["terms"][0]);
  expect_error_at(j, "/terms");
}

TEST_CASE("tuples") {
  auto t = PresentationParams::concrete(4, {1, 0, -2, 3});
  auto j = tuple_to_json(t);
  CHECK(j["t"]["1,3,4"] == -2);
  CHECK(tuple_from_json(j) == t);
  CHECK(tuple_from_json(parse_json(R"({"n": 2, "t": {}})", "t")) == PresentationParams::zero(2));
  auto missing = j;
  missing["t"].erase("2,3,4");
  CHECK_THROWS_AS(tuple_from_json(missing), ParseError);
  auto extra = j;
  extra["t"]["1,2,5"] = 1;
  CHECK_THROWS_AS(tuple_from_json(extra), ParseError);
  auto bad = j;
  bad["t"]["1,2,3"] = "one";
  CHECK_THROWS_AS(tuple_from_json(bad), ParseError);
  auto bad_key = j;
  bad_key["t"].erase("1,2,3");
  bad_key["t"]["2,1,3"] = 1;
  CHECK_THROWS_AS(tuple_from_json(bad_key), ParseError);
}

TEST_CASE("bases") {
  GroebnerBasis gb;
  gb.elements = {Polynomial(Var::param(1, 2, 3)) * Polynomial(Var::param(3, 4, 5))};
  auto j = basis_to_json(5, "GB", gb.elements, &gb);
  CHECK(j["order"] == "grevlex");
  CHECK(j["degree_bound"].is_null());
  CHECK(basis_from_json(j, "GB") == gb.elements);
  CHECK_THROWS_AS(basis_from_json(j, "C"), ParseError);
  CHECK(basis_from_json(basis_to_json(4, "GB", {}, &gb), "GB").empty());
}

TEST_CASE("systems round trip through files deterministically") {
  auto hs = derive(4);
  auto d1 = scratch_dir("a"), d2 = scratch_dir("b");
  auto names = write_system(d1, hs);
  write_system(d2, hs);
  CHECK(names.size() == 4 + 4 + 4);
  for (const auto& name : names) CHECK(slurp(d1 / name) == slurp(d2 / name));
  Json manifest{{"schema", 1}, {"n", 4}, {"files", names}};
  write_json_file(d1 / "manifest.json", manifest);
  auto back = read_system(d1);
  CHECK(back.F == hs.F);
  CHECK(back.K == hs.K);
  CHECK(back.R == hs.R);
  fs::remove(d1 / "R_1_2_4.json");
  CHECK_THROWS(read_system(d1));
  fs::remove_all(d1);
  fs::remove_all(d2);
}
