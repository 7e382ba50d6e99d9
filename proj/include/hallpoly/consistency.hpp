// Associativity defect of the generic multiplication polynomials, the
// consistency ideal I_n(T) in Q[T] and reduction of a Hall system modulo it.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hallpoly/engine.hpp"

namespace hallpoly {

/// P = F(F(x,y),w) - F(x,F(y,w)), one entry per coordinate.
std::vector<Polynomial> assoc_defect(const HallSystem& hs);

/// All coefficients of the P_i as polynomials in x, y, w; zeros dropped,
/// duplicates removed, order of first appearance.
std::vector<Polynomial> coefficients(const std::vector<Polynomial>& P);

struct GroebnerBasis {
  /// Monic, inter-reduced, sorted by descending leading monomial.
  std::vector<Polynomial> elements;
  std::string order = "grevlex";
  std::optional<int> degree_bound;
  /// Pairs whose lcm exceeded the bound (zero without a bound).
  std::size_t skipped_pairs = 0;
  std::size_t reductions = 0;

  bool empty() const { return elements.empty(); }
  /// True when no pair was skipped, i.e. the result is the reduced basis.
  bool complete() const { return skipped_pairs == 0; }
};

/// Buchberger with the product and chain criteria (Gebauer-Moeller update)
/// and normal selection, in graded reverse-lex order over the Param
/// variables.  With `degree_bound`, S-pairs whose lcm has larger total
/// degree are skipped.  Inputs must involve Param variables only.
/// Throws ResourceLimitExceeded when the installed budget runs out.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::optional<int> degree_bound = std::nullopt);

struct BuchbergerProgress {
  std::size_t inputs_done = 0, inputs_total = 0;
  std::size_t basis_size = 0, pending_pairs = 0, reductions = 0;
};
/// Same, reporting progress every `every` installed inputs or reductions.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::optional<int> degree_bound,
                         const std::function<void(const BuchbergerProgress&)>& progress, std::size_t every = 100);

/// Full reduction of a polynomial in Q[T] by the basis.
Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb);

/// Reduces every Q[T]-coefficient of p (split by the non-Param variables).
Polynomial normal_form_mod(const Polynomial& p, const GroebnerBasis& gb);

HallSystem reduce_system(const HallSystem& hs, const GroebnerBasis& gb);

struct ConsistencyIdeal {
  int n = 0;
  std::vector<Polynomial> generators;
  std::optional<GroebnerBasis> reduced_gb;
};

/// Generators C_i of I_n(T), plus the basis when `with_basis` is set.
ConsistencyIdeal consistency_ideal(const HallSystem& hs, bool with_basis = true,
                                   std::optional<int> degree_bound = std::nullopt);

struct ConjectureReport {
  bool coefficients_vanish = false;
  bool consistent = false;
  /// Vanishing everywhere while inconsistent would refute the converse.
  bool refutes() const { return coefficients_vanish && !consistent; }
};

ConjectureReport conjecture_probe(const PresentationParams& t, const std::vector<Polynomial>& C);

/// Evaluates a polynomial in Q[T] at a concrete tuple.
Rational evaluate_params(const Polynomial& p, const PresentationParams& t);

}  // namespace hallpoly
