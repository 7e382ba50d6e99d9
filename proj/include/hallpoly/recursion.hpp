// Bernoulli numbers and closed-form solutions of f(x+1) = f(x) + g(x).

#pragma once

#include "hallpoly/polyring.hpp"

namespace hallpoly {

/// B_k with the convention B_1 = -1/2.  Thread-safe; values are cached.
Rational bernoulli(unsigned k);

/// Binomial coefficient from a cached Pascal triangle.
Integer binomial(unsigned n, unsigned k);

/// Returns the unique polynomial f with f(0) = f0 and f(x+1) - f(x) = g(x),
/// where x is `var`.  The coefficients of g in `var` may be arbitrary
/// polynomials in the other variables.  Throws std::invalid_argument if f0
/// involves `var`.
Polynomial solve_recursion(const Polynomial& g, Var var, const Polynomial& f0);

}  // namespace hallpoly
