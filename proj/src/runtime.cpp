#include "hallpoly/runtime.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "hallpoly/errors.hpp"

namespace hallpoly {

namespace {

std::int64_t to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("evaluated coordinate exceeds int64");
  return v.get_si();
}

std::vector<Integer> to_integers(const ExpVec& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (auto e : v) out.emplace_back(static_cast<long>(e));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Horner

HornerTree::HornerTree(const Polynomial& p, const std::function<int(Var)>& slot_of) {
  for (const auto& t : p.terms()) mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<std::pair<std::vector<std::uint32_t>, Integer>> terms;
  for (const auto& t : p.terms())
    for (std::size_t f = 0; f < t.mono.size(); ++f) slots_ = std::max(slots_, slot_of(t.mono.factor(f).var) + 1);
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(slots_), 0);
    for (std::size_t f = 0; f < t.mono.size(); ++f) {
      const auto fac = t.mono.factor(f);
      exps[static_cast<std::size_t>(slot_of(fac.var))] = fac.exp;
    }
    Integer c = t.coeff.get_num() * (denom_ / t.coeff.get_den());
    terms.emplace_back(std::move(exps), std::move(c));
  }
  root_ = build(std::move(terms), slots_ - 1);
}

std::size_t HornerTree::build(std::vector<std::pair<std::vector<std::uint32_t>, Integer>> terms, int top_slot) {
  // Skip slots that no remaining term uses.
  while (top_slot >= 0 &&
         std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return t.first[top_slot] == 0; }))
    --top_slot;
  const std::size_t idx = nodes_.size();
  nodes_.emplace_back();
  if (top_slot < 0) {
    Integer c = 0;
    for (const auto& t : terms) c += t.second;
    nodes_[idx].constant = c;
    return idx;
  }
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return a.first[top_slot] > b.first[top_slot]; });
  nodes_[idx].slot = top_slot;
  std::size_t begin = 0;
  while (begin < terms.size()) {
    const auto e = terms[begin].first[top_slot];
    std::size_t end = begin;
    while (end < terms.size() && terms[end].first[top_slot] == e) ++end;
    std::vector<std::pair<std::vector<std::uint32_t>, Integer>> group(terms.begin() + static_cast<long>(begin),
                                                                   terms.begin() + static_cast<long>(end));
    const auto child = build(std::move(group), top_slot - 1);
    nodes_[idx].branches.emplace_back(e, child);
    begin = end;
  }
  return idx;
}

Integer HornerTree::eval_node(std::size_t idx, const std::vector<Integer>& values) const {
  const Node& node = nodes_[idx];
  if (node.slot < 0) return node.constant;
  const Integer& v = values[static_cast<std::size_t>(node.slot)];
  Integer acc = eval_node(node.branches.front().second, values);
  std::uint32_t prev = node.branches.front().first;
  Integer power;
  for (std::size_t b = 1; b < node.branches.size(); ++b) {
    const auto [e, child] = node.branches[b];
    mpz_pow_ui(power.get_mpz_t(), v.get_mpz_t(), prev - e);
    acc *= power;
    acc += eval_node(child, values);
    prev = e;
  }
  if (prev > 0) {
    mpz_pow_ui(power.get_mpz_t(), v.get_mpz_t(), prev);
    acc *= power;
  }
  return acc;
}

Integer HornerTree::eval_scaled(const std::vector<Integer>& values) const {
  if (nodes_.empty()) return 0;
  if (values.size() < static_cast<std::size_t>(slots_)) throw DimensionMismatch("too few values for evaluation");
  return eval_node(root_, values);
}

Integer HornerTree::eval_integral(const std::vector<Integer>& values) const {
  Integer num = eval_scaled(values);
  if (denom_ == 1) return num;
  if (!mpz_divisible_p(num.get_mpz_t(), denom_.get_mpz_t())) {
    Rational value(num, denom_);
    value.canonicalize();
    throw NonIntegralError("Hall polynomial evaluated to " + value.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), denom_.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------- system

SpecializedSystem specialize(const HallSystem& hs, const PresentationParams& t) {
  if (hs.n != t.n())
    throw DimensionMismatch("system has n = " + std::to_string(hs.n) + ", tuple has n = " + std::to_string(t.n()));
  if (!t.is_concrete()) throw std::invalid_argument("specialize requires a concrete tuple");
  Substitution s;
  for (const auto& tr : triples(t.n()))
    s[Var::param(tr.i, tr.j, tr.k)] = Polynomial(Rational(static_cast<long>(t.value(tr))));
  const int n = hs.n;
  // Slots: x_1..x_n, y_1..y_n, z.
  auto slot_of = [n](Var v) {
    switch (v.kind()) {
      case VarKind::X: return v.index() - 1;
      case VarKind::Y: return n + v.index() - 1;
      case VarKind::Z: return 2 * n;
      default: throw std::invalid_argument("unexpected variable " + v.name() + " in a Hall polynomial");
    }
  };
  SpecializedSystem ss;
  ss.n = n;
  ss.reduced = hs.reduced;
  for (const auto& f : hs.F) {
    ss.F.push_back(substitute(f, s));
    ss.F_eval.emplace_back(ss.F.back(), slot_of);
  }
  for (const auto& k : hs.K) {
    ss.K.push_back(substitute(k, s));
    ss.K_eval.emplace_back(ss.K.back(), slot_of);
  }
  return ss;
}

ExpVec eval_multiply(const SpecializedSystem& ss, const ExpVec& x, const ExpVec& y) {
  const auto n = static_cast<std::size_t>(ss.n);
  if (x.size() != n || y.size() != n) throw DimensionMismatch("exponent vector has wrong length");
  auto values = to_integers(x);
  auto yv = to_integers(y);
  values.insert(values.end(), yv.begin(), yv.end());
  ExpVec out;
  out.reserve(n);
  for (const auto& f : ss.F_eval) out.push_back(to_int64(f.eval_integral(values)));
  return out;
}

ExpVec eval_power(const SpecializedSystem& ss, const ExpVec& x, std::int64_t z) {
  const auto n = static_cast<std::size_t>(ss.n);
  if (x.size() != n) throw DimensionMismatch("exponent vector has wrong length");
  auto values = to_integers(x);
  values.resize(2 * n, Integer(0));
  values.emplace_back(static_cast<long>(z));
  ExpVec out;
  out.reserve(n);
  for (const auto& k : ss.K_eval) out.push_back(to_int64(k.eval_integral(values)));
  return out;
}

// ---------------------------------------------------------------- bench

std::string tuple_digest(const PresentationParams& t) {
  std::uint64_t h = 14695981039346656037ull;
  std::string text = std::to_string(t.n());
  for (auto v : t.values()) text += "," + std::to_string(v);
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::pair<ExpVec, ExpVec>> bench_workload(int n, const BenchSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::int64_t> dist(-spec.range, spec.range);
  std::vector<std::pair<ExpVec, ExpVec>> out;
  out.reserve(spec.iters);
  for (std::size_t i = 0; i < spec.iters; ++i) {
    ExpVec x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (auto& e : x) e = dist(rng);
    for (auto& e : y) e = dist(rng);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

BenchReport bench(const SpecializedSystem& ss, const PresentationParams& t, const BenchSpec& spec) {
  using clock = std::chrono::steady_clock;
  const auto work = bench_workload(ss.n, spec);
  std::vector<ExpVec> by_eval, by_collect;
  by_eval.reserve(work.size());
  by_collect.reserve(work.size());

  const auto t0 = clock::now();
  for (const auto& [x, y] : work) by_eval.push_back(eval_multiply(ss, x, y));
  const auto t1 = clock::now();
  Collector collector(t);
  for (const auto& [x, y] : work) by_collect.push_back(collector.multiply(x, y));
  const auto t2 = clock::now();

  for (std::size_t i = 0; i < work.size(); ++i)
    if (by_eval[i] != by_collect[i]) throw InternalConsistencyError("evaluation and collection disagree in bench");

  BenchReport r;
  r.n = ss.n;
  r.t_digest = tuple_digest(t);
  r.iters = spec.iters;
  r.range = spec.range;
  r.eval_ns_total = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  r.collect_ns_total =
      static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
  r.ratio = r.eval_ns_total == 0 ? 0.0 : static_cast<double>(r.collect_ns_total) / static_cast<double>(r.eval_ns_total);
  r.seed = spec.seed;
  return r;
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["t_digest"] = t_digest;
  j["iters"] = iters;
  j["range"] = range;
  j["eval_ns_total"] = eval_ns_total;
  j["collect_ns_total"] = collect_ns_total;
  j["ratio"] = ratio;
  j["seed"] = seed;
  return j.dump();
}

}  // namespace hallpoly
