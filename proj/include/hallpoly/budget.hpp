// Resource budgets for the expensive stages (derivation, Groebner bases).
//
// A Budget is installed for the current thread with BudgetScope; hot loops
// call budget_tick() which throws ResourceLimitExceeded once a limit is hit.

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

namespace hallpoly {

struct Budget {
  std::optional<std::chrono::duration<double>> wall_time;
  /// Largest polynomial (in terms) any stage may build.
  std::optional<std::size_t> max_terms;
  /// Number of S-polynomial reductions Buchberger may perform.
  std::optional<std::size_t> max_pairs;

  /// Parses "seconds=600,terms=5000000,pairs=200000"; unknown keys throw.
  static Budget parse(const std::string& spec);
  /// Reads HALLPOLY_BUDGET, falling back to `fallback` when unset.
  static Budget from_env(const Budget& fallback);
};

class BudgetScope {
public:
  explicit BudgetScope(const Budget& budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

  struct State;

private:
  State* previous_;
};

/// Cheap periodic check of the wall-clock limit.
void budget_tick();
void budget_check_terms(std::size_t terms);
/// Counts one S-pair reduction against max_pairs.
void budget_count_pair();

}  // namespace hallpoly
