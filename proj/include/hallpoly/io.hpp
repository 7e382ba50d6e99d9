// JSON serialization: polynomial files, tuples, Groebner bases, manifests.
//
// Polynomial file (schema 1):
//   {"schema": 1, "n": 3, "kind": "F", "index": 3, "reduced": false,
//    "terms": [{"coeff": "-1/2", "vars": {"T[1,2,3]": 1, "x1": 1}}, ...]}
// R files carry "triple": "1,2,3" instead of "index".  GB and C files hold
// a list "elements" of term lists.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hallpoly/consistency.hpp"
#include "hallpoly/engine.hpp"
#include "hallpoly/presentation.hpp"

namespace hallpoly {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// "p/q" in lowest terms, or "p" when integral.
std::string coeff_to_string(const Rational& c);
Rational coeff_from_string(const std::string& s, const std::string& where);

/// Terms in canonical (descending graded reverse-lex) order.
Json terms_to_json(const Polynomial& p);
Polynomial terms_from_json(const Json& j, const std::string& where);

struct PolynomialFile {
  int n = 0;
  char kind = 'F';  // F | K | R
  int index = 0;    // F, K
  Triple triple;    // R
  bool reduced = false;
  Polynomial poly;
};

Json to_json(const PolynomialFile& f);
PolynomialFile polynomial_file_from_json(const Json& j);

/// "GB" or "C" file.
Json basis_to_json(int n, const std::string& kind, const std::vector<Polynomial>& elements, const GroebnerBasis* gb);
std::vector<Polynomial> basis_from_json(const Json& j, const std::string& expected_kind);

/// {"n": 4, "t": {"1,2,3": 1, ...}} with all C(n,3) keys present.
Json tuple_to_json(const PresentationParams& t);
PresentationParams tuple_from_json(const Json& j);

/// Parses text; syntax errors become ParseError with the byte offset.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

/// Writes one file per polynomial plus manifest.json; returns the file names.
std::vector<std::string> write_system(const std::filesystem::path& dir, const HallSystem& hs,
                                      const std::string& prefix = "");
/// Reads F_*, K_*, R_* files listed in a manifest written by write_system.
HallSystem read_system(const std::filesystem::path& dir, bool reduced = false);

}  // namespace hallpoly
