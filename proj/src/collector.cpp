#include "hallpoly/collector.hpp"

#include <stdexcept>

namespace hallpoly {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("collector exponent overflow");
  return r;
}

}  // namespace

Word word_of(const ExpVec& x) {
  Word w;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) w.push_back({static_cast<int>(i) + 1, x[i]});
  return w;
}

Word inverse_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
  return r;
}

Collector::Collector(PresentationParams t) : n_(t.n()), t_(std::move(t)) {
  if (!t_.is_concrete()) throw std::invalid_argument("collector requires concrete parameters");
  const auto slots = static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1) * 2;
  conj_.resize(slots);
  trivial_.assign(slots, -1);
}

std::size_t Collector::conj_slot(int k, int g, int sign) const {
  return (static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(g)) * 2 +
         (sign > 0 ? 1 : 0);
}

const ExpVec& Collector::conjugate(int k, int g, int sign) {
  if (!(1 <= g && g < k && k <= n_)) throw std::out_of_range("conjugate needs 1 <= g < k <= n");
  const auto slot = conj_slot(k, g, sign);
  if (conj_[slot]) return *conj_[slot];

  ExpVec result(static_cast<std::size_t>(n_), 0);
  if (sign > 0) {
    // a_g^{-1} a_k a_g = a_k a_{k+1}^{t_{g,k,k+1}} ... a_n^{t_{g,k,n}}
    result[k - 1] = 1;
    for (int m = k + 1; m <= n_; ++m) result[m - 1] = t_.value({g, k, m});
  } else {
    // With tau = prod_m a_m^{t_{g,k,m}}: a_g a_k a_g^{-1} = a_k (a_g tau a_g^{-1})^{-1}.
    ExpVec conj_tail(static_cast<std::size_t>(n_), 0);
    std::vector<Frame> frames;
    for (int m = n_; m > k; --m) {
      const auto e = t_.value({g, k, m});
      if (e == 0) continue;
      Word w = word_of(conjugate(m, g, -1));
      if (e < 0) w = inverse_word(w);
      frames.push_back({std::move(w), e < 0 ? -e : e});
    }
    collect(conj_tail, std::move(frames));
    ExpVec inv(static_cast<std::size_t>(n_), 0);
    collect(inv, {{inverse_word(word_of(conj_tail)), 1}});
    result = inv;
    result[k - 1] = 1;
  }
  conj_[slot] = std::move(result);
  return *conj_[slot];
}

bool Collector::is_trivial(int k, int g, int sign) {
  const auto slot = conj_slot(k, g, sign);
  if (trivial_[slot] < 0) {
    const auto& c = conjugate(k, g, sign);
    bool triv = true;
    for (int m = k + 1; m <= n_; ++m) triv = triv && c[m - 1] == 0;
    trivial_[slot] = triv ? 1 : 0;
  }
  return trivial_[slot] == 1;
}

bool Collector::commutes_with_tail(const ExpVec& state, int gen, int sign) {
  for (int k = gen + 1; k <= n_; ++k)
    if (state[k - 1] != 0 && !is_trivial(k, gen, sign)) return false;
  return true;
}

void Collector::absorb(ExpVec& state, std::vector<Frame>& stack, int gen, std::int64_t exp) {
  ++steps_;
  const int sign = exp > 0 ? 1 : -1;
  if (commutes_with_tail(state, gen, sign)) {
    state[gen - 1] = checked_add(state[gen - 1], exp);
    return;
  }
  // collected * a_g^sign = prefix a_g^{c+sign} (tail)^{a_g^sign}; the rest of
  // the syllable follows the conjugated tail.
  if (exp != sign) stack.push_back({Word{{gen, exp - sign}}, 1});
  state[gen - 1] = checked_add(state[gen - 1], sign);
  for (int k = n_; k > gen; --k) {
    const auto e = state[k - 1];
    if (e == 0) continue;
    state[k - 1] = 0;
    if (is_trivial(k, gen, sign)) {
      stack.push_back({Word{{k, e}}, 1});
    } else {
      Word w = word_of(conjugate(k, gen, sign));
      if (e < 0) w = inverse_word(w);
      stack.push_back({std::move(w), e < 0 ? -e : e});
    }
  }
}

void Collector::collect(ExpVec& state, std::vector<Frame> stack) {
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.pos == top.word.size()) {
      if (--top.reps > 0) {
        top.pos = 0;
      } else {
        stack.pop_back();
      }
      continue;
    }
    const Syllable s = top.word[top.pos++];
    if (s.exp == 0) continue;
    if (s.gen < 1 || s.gen > n_) throw std::out_of_range("generator index out of range");
    absorb(state, stack, s.gen, s.exp);
  }
}

ExpVec Collector::normal_form(const Word& w) {
  ExpVec state(static_cast<std::size_t>(n_), 0);
  collect(state, {{w, 1}});
  return state;
}

ExpVec Collector::multiply(const ExpVec& x, const ExpVec& y) {
  if (x.size() != static_cast<std::size_t>(n_) || y.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("exponent vector has wrong length");
  ExpVec state = x;
  collect(state, {{word_of(y), 1}});
  return state;
}

ExpVec Collector::inverse(const ExpVec& x) {
  if (x.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("exponent vector has wrong length");
  return normal_form(inverse_word(word_of(x)));
}

ExpVec Collector::power(const ExpVec& x, std::int64_t z) {
  const ExpVec base = z < 0 ? inverse(x) : x;
  const std::int64_t count = z < 0 ? -z : z;
  ExpVec result(static_cast<std::size_t>(n_), 0);
  for (std::int64_t r = 0; r < count; ++r) result = multiply(result, base);
  return result;
}

ExpVec normal_form(const Word& w, const PresentationParams& t) { return Collector(t).normal_form(w); }

ExpVec oracle_multiply(const PresentationParams& t, const ExpVec& x, const ExpVec& y) {
  return Collector(t).multiply(x, y);
}

ExpVec oracle_power(const PresentationParams& t, const ExpVec& x, std::int64_t z) {
  return Collector(t).power(x, z);
}

bool check_consistency(const PresentationParams& t) {
  Collector c(t);
  const int n = t.n();
  for (int k = 3; k <= n; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        // a_k (a_j a_i): collect a_j a_i first, then prepend a_k.
        Word inner = word_of(c.normal_form({{j, 1}, {i, 1}}));
        Word left{{k, 1}};
        left.insert(left.end(), inner.begin(), inner.end());
        // (a_k a_j) a_i is what collection from the left does anyway.
        if (c.normal_form(left) != c.normal_form({{k, 1}, {j, 1}, {i, 1}})) return false;
      }
  return true;
}

}  // namespace hallpoly
