// Hall polynomials specialised at a concrete tuple t and evaluated over Z.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallpoly/collector.hpp"
#include "hallpoly/engine.hpp"

namespace hallpoly {

/// Integer polynomial in Horner form: split by the largest variable, then
/// recursively by the remaining ones.
class HornerTree {
public:
  HornerTree() = default;
  /// Variables are addressed by slot; `slot_of` maps each variable of p to
  /// its position in the value array passed to eval().
  HornerTree(const Polynomial& p, const std::function<int(Var)>& slot_of);

  /// Value of D*p at the given point, where D = denominator().
  Integer eval_scaled(const std::vector<Integer>& values) const;
  /// Exact value; throws NonIntegralError if it is not an integer.
  Integer eval_integral(const std::vector<Integer>& values) const;
  const Integer& denominator() const { return denom_; }

private:
  struct Node {
    int slot = -1;  // -1: constant leaf
    Integer constant;
    std::vector<std::pair<std::uint32_t, std::size_t>> branches;  // (exponent, child) descending
  };
  std::size_t build(std::vector<std::pair<std::vector<std::uint32_t>, Integer>> terms, int top_slot);
  Integer eval_node(std::size_t idx, const std::vector<Integer>& values) const;

  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  Integer denom_ = 1;
  int slots_ = 0;
};

struct SpecializedSystem {
  int n = 0;
  std::vector<Polynomial> F, K;  // no Param variables
  bool reduced = false;
  std::vector<HornerTree> F_eval, K_eval;
};

/// Substitutes t for T and compiles the evaluators.
SpecializedSystem specialize(const HallSystem& hs, const PresentationParams& t);

/// (F_1(x,y), ..., F_n(x,y)); throws NonIntegralError on a non-integral
/// coordinate and std::overflow_error if a coordinate leaves int64.
ExpVec eval_multiply(const SpecializedSystem& ss, const ExpVec& x, const ExpVec& y);
ExpVec eval_power(const SpecializedSystem& ss, const ExpVec& x, std::int64_t z);

struct BenchSpec {
  std::size_t iters = 1000;
  std::int64_t range = 3;
  std::uint64_t seed = 1;
};

struct BenchReport {
  int n = 0;
  std::string t_digest;
  std::size_t iters = 0;
  std::int64_t range = 0;
  std::uint64_t eval_ns_total = 0;
  std::uint64_t collect_ns_total = 0;
  double ratio = 0;  // collect / eval
  std::uint64_t seed = 0;

  std::string to_json() const;
};

/// Random pairs with entries in [-range, range] from mt19937_64(seed).
std::vector<std::pair<ExpVec, ExpVec>> bench_workload(int n, const BenchSpec& spec);

/// Times eval_multiply against collection on the same workload; the results
/// are compared and a mismatch throws InternalConsistencyError.
BenchReport bench(const SpecializedSystem& ss, const PresentationParams& t, const BenchSpec& spec);

/// FNV-1a digest of the tuple, as 16 hex digits.
std::string tuple_digest(const PresentationParams& t);

}  // namespace hallpoly
