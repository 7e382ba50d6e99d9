// Collection from the left in a concrete presentation G(t).
//
// This is the brute-force reference for every derived polynomial: it knows
// nothing about Hall polynomials and works only with the defining relations.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hallpoly/presentation.hpp"

namespace hallpoly {

struct Syllable {
  int gen;           // 1..n
  std::int64_t exp;  // nonzero
  bool operator==(const Syllable&) const = default;
};

using Word = std::vector<Syllable>;
/// Exponents of the normal form a_1^{x_1} ... a_n^{x_n}.
using ExpVec = std::vector<std::int64_t>;

/// The normal word of x (zero exponents skipped).
Word word_of(const ExpVec& x);
/// Reversed word with negated exponents.
Word inverse_word(const Word& w);

/// Collector for one concrete presentation.  Conjugates a_k^{a_g^{+-1}} are
/// memoized, so an instance is not safe for concurrent use; create one per
/// task instead.
class Collector {
public:
  explicit Collector(PresentationParams t);

  int n() const { return n_; }
  const PresentationParams& params() const { return t_; }

  ExpVec normal_form(const Word& w);
  ExpVec multiply(const ExpVec& x, const ExpVec& y);
  ExpVec inverse(const ExpVec& x);
  /// z-fold product for z >= 0; the |z|-th power of the inverse for z < 0.
  ExpVec power(const ExpVec& x, std::int64_t z);

  /// Normal form of a_g^{-sign} a_k a_g^{sign} for g < k, sign = +-1.
  const ExpVec& conjugate(int k, int g, int sign);

  /// Number of syllables absorbed since construction (work measure).
  std::uint64_t steps() const { return steps_; }

private:
  struct Frame {
    Word word;
    std::int64_t reps;
    std::size_t pos = 0;
  };

  void collect(ExpVec& state, std::vector<Frame> stack);
  void absorb(ExpVec& state, std::vector<Frame>& stack, int gen, std::int64_t exp);
  bool is_trivial(int k, int g, int sign);
  bool commutes_with_tail(const ExpVec& state, int gen, int sign);
  std::size_t conj_slot(int k, int g, int sign) const;

  int n_;
  PresentationParams t_;
  std::vector<std::optional<ExpVec>> conj_;
  std::vector<std::int8_t> trivial_;  // -1 unknown, 0 nontrivial, 1 trivial
  std::uint64_t steps_ = 0;
};

ExpVec normal_form(const Word& w, const PresentationParams& t);
ExpVec oracle_multiply(const PresentationParams& t, const ExpVec& x, const ExpVec& y);
ExpVec oracle_power(const PresentationParams& t, const ExpVec& x, std::int64_t z);

}  // namespace hallpoly
