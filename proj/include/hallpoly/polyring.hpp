// Exact multivariate polynomials over the rationals.
//
// The indeterminate universe is fixed: structure parameters T[i,j,k] and the
// variables x_i, y_i, w_i, z, u, v plus an auxiliary pool.  Every variable has
// a 32-bit code whose integer order is the canonical variable order, so
// monomials can be kept as sorted (code, exponent) lists.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace hallpoly {

using Integer = mpz_class;
using Rational = mpq_class;

enum class VarKind : std::uint8_t { Param = 0, X = 1, Y = 2, W = 3, Z = 4, U = 5, V = 6, Aux = 7 };

/// An indeterminate.  Ordering: all Param (lexicographic in (i,j,k)) <
/// X(1..) < Y(1..) < W(1..) < Z < U < V < Aux(1..).
class Var {
public:
  static Var param(int i, int j, int k);
  static Var x(int i) { return indexed(VarKind::X, i); }
  static Var y(int i) { return indexed(VarKind::Y, i); }
  static Var w(int i) { return indexed(VarKind::W, i); }
  static Var z() { return Var(code_of(VarKind::Z, 0)); }
  static Var u() { return Var(code_of(VarKind::U, 0)); }
  static Var v() { return Var(code_of(VarKind::V, 0)); }
  static Var aux(int m) { return indexed(VarKind::Aux, m); }
  static Var from_code(std::uint32_t code) { return Var(code); }

  /// Parses the names produced by name(): "T[1,2,3]", "x4", "z", "aux2".
  static Var parse(std::string_view name);

  VarKind kind() const { return static_cast<VarKind>(code_ >> 24); }
  /// Index of an X/Y/W/Aux variable.
  int index() const { return static_cast<int>(code_ & 0xffffffu); }
  /// Components of a Param variable.
  int i() const { return static_cast<int>((code_ >> 16) & 0xffu); }
  int j() const { return static_cast<int>((code_ >> 8) & 0xffu); }
  int k() const { return static_cast<int>(code_ & 0xffu); }

  std::uint32_t code() const { return code_; }
  std::string name() const;

  auto operator<=>(const Var&) const = default;

private:
  explicit Var(std::uint32_t code) : code_(code) {}
  static Var indexed(VarKind kind, int index);
  static constexpr std::uint32_t code_of(VarKind kind, std::uint32_t low) {
    return (static_cast<std::uint32_t>(kind) << 24) | low;
  }

  std::uint32_t code_;
};

/// A set of variables described by kinds plus explicitly listed members.
class VarSet {
public:
  VarSet() = default;
  static VarSet of_kinds(std::initializer_list<VarKind> kinds);
  static VarSet of(std::initializer_list<Var> vars);
  VarSet& add(Var v);
  VarSet& add_kind(VarKind kind);

  bool contains(Var v) const;

private:
  std::uint32_t kind_mask_ = 0;
  std::vector<Var> members_;  // sorted
};

/// Power product of variables; exponents are positive, the empty product is 1.
class Monomial {
public:
  struct Factor {
    Var var;
    std::uint32_t exp;
  };

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exp = 1);
  /// Builds from arbitrary (var, exp) pairs; repeated variables are merged and
  /// zero exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  bool is_one() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }
  Factor factor(std::size_t idx) const {
    return {Var::from_code(static_cast<std::uint32_t>(data_[idx] >> 32)),
            static_cast<std::uint32_t>(data_[idx] & 0xffffffffu)};
  }
  std::vector<Factor> factors() const;

  std::uint32_t exponent(Var v) const;
  std::uint64_t degree() const;
  std::uint64_t degree_in(const VarSet& vars) const;

  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Splits into the part over `vars` and the complementary part.
  std::pair<Monomial, Monomial> split(const VarSet& vars) const;
  /// Removes v, returning its former exponent.
  std::uint32_t remove(Var v);
  /// Renames variables; the map must be injective on the variables present.
  Monomial rename(const std::function<Var(Var)>& map) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.data_ == b.data_; }

  /// Graded reverse-lexicographic comparison: negative if a < b.
  friend int grevlex_compare(const Monomial& a, const Monomial& b);

private:
  static std::uint64_t pack(Var v, std::uint32_t exp) {
    return (static_cast<std::uint64_t>(v.code()) << 32) | exp;
  }
  // Sorted by variable code; each entry is (code << 32) | exponent.
  boost::container::small_vector<std::uint64_t, 4> data_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial.  Terms are kept in descending graded reverse-lex order
/// with nonzero coefficients, so equal polynomials have equal representations.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& c);                  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Polynomial(Var v);                               // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& c);

  /// Builds from arbitrary terms: like terms are collected, zeros dropped.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  std::vector<Var> variables() const;
  bool involves(Var v) const;
  bool involves_any(const VarSet& vars) const;
  bool involves_only(const VarSet& vars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial& p, const Polynomial& q);

  Polynomial pow(unsigned e) const;
  /// p * c * m, in one pass (order is preserved by monomial multiplication).
  Polynomial scaled(const Rational& c, const Monomial& m) const;
  /// this - c*m*q.
  Polynomial& sub_scaled(const Rational& c, const Monomial& m, const Polynomial& q);

  Rational evaluate(const std::map<Var, Rational>& values) const;
  Polynomial rename(const std::function<Var(Var)>& map) const;

  /// Divides by the leading coefficient (no-op on zero).
  Polynomial monic() const;

  std::string to_string() const;

private:
  void normalize_sorted();  // after construction from collected terms
  std::vector<Term> terms_;
  friend class PolynomialBuilder;
};

/// Accumulates terms with like-term collection; build() yields the canonical
/// polynomial.
class PolynomialBuilder {
public:
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add(const Polynomial& p);
  void add_scaled(const Polynomial& p, const Rational& c, const Monomial& m);
  Polynomial build();
  bool empty() const { return acc_.empty(); }

private:
  std::vector<std::pair<Monomial, Rational>> acc_;
  std::vector<std::size_t> buckets_;  // open addressing into acc_
  std::size_t mask_ = 0;
  void grow();
  std::size_t find_slot(const Monomial& m, std::size_t h) const;
};

using Substitution = std::map<Var, Polynomial>;

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Simultaneous substitution; unmapped variables stay fixed.
Polynomial substitute(const Polynomial& p, const Substitution& map);

/// Coefficients of p viewed as a polynomial in `vars`: keys are monomials
/// purely in `vars` (descending grevlex), values the nonzero cofactors in the
/// remaining variables.
std::vector<std::pair<Monomial, Polynomial>> split_by_vars(const Polynomial& p,
                                                           const VarSet& vars);

/// Maximal degree of a term restricted to `vars`; -1 for the zero polynomial.
long degree_in(const Polynomial& p, const VarSet& vars);
/// Number of distinct monomials in `vars` with nonzero cofactor.
std::size_t monomial_count_in(const Polynomial& p, const VarSet& vars);

/// Greatest total degree; -1 for zero.
long total_degree(const Polynomial& p);

}  // namespace hallpoly
