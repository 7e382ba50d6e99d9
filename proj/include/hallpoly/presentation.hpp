// Parametrised nilpotent presentations
//
//   G(t) = < a_1..a_n | a_j a_i = a_i a_j a_{j+1}^{t_{i,j,j+1}} ... a_n^{t_{i,j,n}} >
//
// with one parameter per triple i < j < k, either symbolic (T[i,j,k]) or a
// concrete integer.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hallpoly/polyring.hpp"

namespace hallpoly {

struct Triple {
  int i = 0, j = 0, k = 0;
  auto operator<=>(const Triple&) const = default;
  std::string to_string() const;  // "i,j,k"
};

/// All triples 1 <= i < j < k <= n in lexicographic order.
std::vector<Triple> triples(int n);
std::size_t triple_count(int n);
/// Position of `t` in triples(n).
std::size_t triple_index(int n, const Triple& t);

enum class Projection { U, V, W };
char projection_name(Projection p);

/// Re-indexing of a sub-presentation on n-1 generators into its parent:
/// U = <a_2..a_n>, V = <a_1, a_3..a_n>, W = G / <a_n>.
struct ProjectionMap {
  Projection kind;
  int source_n;
  std::vector<int> index_map;  // index_map[i-1] = parent index of sub generator i

  int operator()(int i) const { return index_map.at(static_cast<std::size_t>(i - 1)); }
  Triple operator()(const Triple& t) const { return {(*this)(t.i), (*this)(t.j), (*this)(t.k)}; }
};

ProjectionMap projection_map(int n, Projection kind);

using ParamValue = std::variant<Var, std::int64_t>;

class PresentationParams {
public:
  /// Symbolic parameters T[i,j,k].
  static PresentationParams generic(int n);
  /// Concrete values in lexicographic triple order.
  static PresentationParams concrete(int n, std::vector<std::int64_t> values);
  /// Concrete parameters, all zero (free abelian).
  static PresentationParams zero(int n);
  /// Rejects mixed symbolic/concrete assignments and wrong sizes.  With no
  /// entries (n < 3) the kind is taken from `symbolic_if_empty`.
  static PresentationParams from_entries(int n, std::vector<ParamValue> entries,
                                         bool symbolic_if_empty = false);

  int n() const { return n_; }
  bool is_symbolic() const { return symbolic_; }
  bool is_concrete() const { return !symbolic_; }

  const std::vector<ParamValue>& entries() const { return entries_; }
  const ParamValue& at(const Triple& t) const { return entries_.at(triple_index(n_, t)); }
  /// Concrete value; throws std::logic_error on symbolic parameters.
  std::int64_t value(const Triple& t) const;
  std::vector<std::int64_t> values() const;
  /// The parameter as a polynomial (a Param variable or an integer constant).
  Polynomial polynomial(const Triple& t) const;

  PresentationParams with_value(const Triple& t, std::int64_t v) const;
  /// Embeds into n' >= n generators by appending central generators.
  PresentationParams padded(int new_n) const;

  bool operator==(const PresentationParams&) const = default;

private:
  int n_ = 0;
  bool symbolic_ = false;
  std::vector<ParamValue> entries_;
};

std::pair<PresentationParams, ProjectionMap> project(const PresentationParams& p, Projection kind);

/// Overlap test a_k (a_j a_i) = (a_k a_j) a_i for all n >= k > j > i >= 1,
/// evaluated by collection.  Requires concrete parameters.
bool check_consistency(const PresentationParams& t);

struct CatalogEntry {
  std::string name;
  PresentationParams params;
};

/// Consistent test presentations for 1 <= n <= 7: the free abelian group,
/// Heisenberg-type products padded with central generators, a group of
/// maximal class, the free nilpotent group of rank 2 and class 3 and tuples
/// read off unitriangular matrix groups.
std::vector<CatalogEntry> catalog(int n);

/// Structure constants of the unitriangular group UT_d(Z) with respect to an
/// ordered basis of elementary matrices I + E_{a,b}; the basis must be
/// ordered by superdiagonal level.  Hirsch length d(d-1)/2.
PresentationParams unitriangular_params(int d, const std::vector<std::pair<int, int>>& basis);

}  // namespace hallpoly
