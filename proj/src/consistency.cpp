#include "hallpoly/consistency.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <set>

#include "hallpoly/budget.hpp"
#include "hallpoly/collector.hpp"
#include "hallpoly/errors.hpp"

namespace hallpoly {

namespace {

const VarSet& non_param_vars() {
  static const VarSet s = VarSet::of_kinds(
      {VarKind::X, VarKind::Y, VarKind::W, VarKind::Z, VarKind::U, VarKind::V, VarKind::Aux});
  return s;
}

const VarSet& param_vars() {
  static const VarSet s = VarSet::of_kinds({VarKind::Param});
  return s;
}

const Monomial& lm(const Polynomial& p) { return p.leading_term().mono; }

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

// Full reduction modulo the polynomials in `basis`.  The working
// polynomial is kept in an ordered map so that a reduction step costs the
// length of the divisor, not of the dividend.
Polynomial reduce_by(const Polynomial& p, const std::vector<const Polynomial*>& basis) {
  std::map<Monomial, Rational, GrevlexGreater> work;
  for (const auto& t : p.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> rem;
  Rational tmp;
  while (!work.empty()) {
    budget_tick();
    auto lead = work.begin();
    const Polynomial* divisor = nullptr;
    for (const auto* g : basis)
      if (lm(*g).divides(lead->first)) {
        divisor = g;
        break;
      }
    if (divisor == nullptr) {
      rem.push_back({lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const Rational& g_lead = divisor->leading_term().coeff;
    const Rational c = g_lead == 1 ? lead->second : Rational(lead->second / g_lead);
    const Monomial q = lead->first.quotient(lm(*divisor));
    work.erase(lead);
    const auto& dt = divisor->terms();
    for (std::size_t i = 1; i < dt.size(); ++i) {
      tmp = c * dt[i].coeff;
      auto [it, fresh] = work.emplace(q * dt[i].mono, -tmp);
      if (!fresh) {
        it->second -= tmp;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return Polynomial::from_terms(std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto l = lm(f).lcm(lm(g));
  Polynomial s = f.scaled(Rational(1) / f.leading_term().coeff, l.quotient(lm(f)));
  s.sub_scaled(Rational(1) / g.leading_term().coeff, l.quotient(lm(g)), g);
  return s;
}

struct Pair {
  std::size_t a, b;
  Monomial lcm;
};

bool pair_less(const Pair& p, const Pair& q) {
  const int c = grevlex_compare(p.lcm, q.lcm);
  if (c != 0) return c < 0;
  return std::tie(p.a, p.b) < std::tie(q.a, q.b);
}

struct PairLess {
  bool operator()(const Pair& p, const Pair& q) const { return pair_less(p, q); }
};
using PairSet = std::set<Pair, PairLess>;

// Gebauer-Moeller installation of a new basis element h = polys[h_idx].
// Pairs whose lcm exceeds the degree bound are counted and dropped.
void update(const std::vector<Polynomial>& polys, std::vector<bool>& active, PairSet& pairs, std::size_t h_idx,
            std::optional<int> degree_bound, std::size_t& skipped) {
  const Monomial& lh = lm(polys[h_idx]);
  std::vector<Pair> c;
  for (std::size_t g = 0; g < polys.size(); ++g)
    if (active[g] && g != h_idx) c.push_back({g, h_idx, lm(polys[g]).lcm(lh)});

  // Chain criterion among the new pairs; pairs with coprime leading terms
  // are kept here so that they can still eliminate others.
  std::vector<Pair> d;
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const auto& p = c[idx];
    bool keep = lm(polys[p.a]).coprime(lh);
    if (!keep) {
      keep = true;
      for (std::size_t o = 0; o < c.size() && keep; ++o)
        if (o != idx && c[o].lcm.divides(p.lcm) && !(c[o].lcm == p.lcm && o > idx)) keep = false;
      for (std::size_t o = 0; o < d.size() && keep; ++o)
        if (d[o].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) d.push_back(p);
    budget_tick();
  }

  // Old pairs made redundant by h.
  for (auto it = pairs.begin(); it != pairs.end();) {
    const bool drop = lh.divides(it->lcm) && !(lm(polys[it->a]).lcm(lh) == it->lcm) &&
                      !(lm(polys[it->b]).lcm(lh) == it->lcm);
    it = drop ? pairs.erase(it) : std::next(it);
  }
  // Product criterion, then the degree bound.
  for (const auto& p : d) {
    if (lm(polys[p.a]).coprime(lh)) continue;
    if (degree_bound && static_cast<long>(p.lcm.degree()) > *degree_bound) {
      ++skipped;
      continue;
    }
    pairs.insert(p);
  }

  for (std::size_t g = 0; g < polys.size(); ++g)
    if (active[g] && g != h_idx && lh.divides(lm(polys[g]))) active[g] = false;
  active[h_idx] = true;
}

std::vector<const Polynomial*> active_basis(const std::vector<Polynomial>& polys, const std::vector<bool>& active) {
  std::vector<const Polynomial*> out;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) out.push_back(&polys[i]);
  return out;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> g) {
  // Drop elements whose leading monomial is divisible by another's.
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(lm(a), lm(b)) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (lm(q).divides(lm(p))) redundant = true;
    if (!redundant) minimal.push_back(p);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    // Leading term stays; only the tail can reduce further.
    const Term lead = minimal[i].leading_term();
    Polynomial tail = minimal[i];
    tail.sub_scaled(lead.coeff, lead.mono, Polynomial(1));
    out.push_back((Polynomial(lead.mono, lead.coeff) + reduce_by(tail, others)).monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(lm(a), lm(b)) > 0;
  });
  return out;
}

}  // namespace

std::vector<Polynomial> assoc_defect(const HallSystem& hs) {
  const int n = hs.n;
  Substitution y_to_w, xy_to_yw;
  for (int k = 1; k <= n; ++k) {
    xy_to_yw[Var::x(k)] = Polynomial(Var::y(k));
    xy_to_yw[Var::y(k)] = Polynomial(Var::w(k));
  }
  Substitution left, right;
  for (int k = 1; k <= n; ++k) {
    left[Var::x(k)] = hs.f(k);
    left[Var::y(k)] = Polynomial(Var::w(k));
    right[Var::y(k)] = substitute(hs.f(k), xy_to_yw);
  }
  std::vector<Polynomial> P;
  for (int i = 1; i <= n; ++i) {
    budget_tick();
    P.push_back(substitute(hs.f(i), left) - substitute(hs.f(i), right));
  }
  return P;
}

std::vector<Polynomial> coefficients(const std::vector<Polynomial>& P) {
  const VarSet xyw = VarSet::of_kinds({VarKind::X, VarKind::Y, VarKind::W});
  std::vector<Polynomial> out;
  for (const auto& p : P)
    for (auto& [mono, c] : split_by_vars(p, xyw))
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::optional<int> degree_bound) {
  return buchberger(gens, degree_bound, {}, 0);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::optional<int> degree_bound,
                         const std::function<void(const BuchbergerProgress&)>& progress, std::size_t every) {
  GroebnerBasis gb;
  gb.degree_bound = degree_bound;
  std::vector<Polynomial> polys;
  std::vector<bool> active;
  PairSet pairs;

  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    if (!g.involves_only(param_vars())) throw std::invalid_argument("buchberger: generators must lie in Q[T]");
    if (!g.is_zero()) input.push_back(g.monic());
  }
  // Small leading terms first, each reduced against what is installed.
  std::sort(input.begin(), input.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex_compare(lm(a), lm(b)) < 0; });
  BuchbergerProgress status;
  status.inputs_total = input.size();
  auto report = [&](std::size_t counter) {
    if (!progress || every == 0 || counter % every != 0) return;
    status.basis_size = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
    status.pending_pairs = pairs.size();
    status.reductions = gb.reductions;
    progress(status);
  };
  for (const auto& g : input) {
    report(++status.inputs_done);
    auto h = reduce_by(g, active_basis(polys, active));
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      gb.elements = {Polynomial(1)};
      return gb;
    }
    polys.push_back(h.monic());
    active.push_back(false);
    update(polys, active, pairs, polys.size() - 1, degree_bound, gb.skipped_pairs);
  }

  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    budget_count_pair();
    report(++gb.reductions);
    auto h = reduce_by(s_polynomial(polys[p.a], polys[p.b]), active_basis(polys, active));
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      gb.elements = {Polynomial(1)};
      return gb;
    }
    polys.push_back(h.monic());
    active.push_back(false);
    update(polys, active, pairs, polys.size() - 1, degree_bound, gb.skipped_pairs);
  }

  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) basis.push_back(polys[i]);
  gb.elements = interreduce(std::move(basis));
  return gb;
}

Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb) {
  if (gb.empty()) return p;
  std::vector<const Polynomial*> basis;
  for (const auto& g : gb.elements) basis.push_back(&g);
  return reduce_by(p, basis);
}

Polynomial normal_form_mod(const Polynomial& p, const GroebnerBasis& gb) {
  if (gb.empty()) return p;
  PolynomialBuilder out;
  for (const auto& [mono, coeff] : split_by_vars(p, non_param_vars())) {
    const auto r = reduce(coeff, gb);
    for (const auto& t : r.terms()) out.add(t.mono * mono, t.coeff);
  }
  return out.build();
}

HallSystem reduce_system(const HallSystem& hs, const GroebnerBasis& gb) {
  HallSystem out = hs;
  for (auto& f : out.F) f = normal_form_mod(f, gb);
  for (auto& k : out.K) k = normal_form_mod(k, gb);
  for (auto& [t, r] : out.R) r = normal_form_mod(r, gb);
  out.reduced = true;
  return out;
}

ConsistencyIdeal consistency_ideal(const HallSystem& hs, bool with_basis, std::optional<int> degree_bound) {
  ConsistencyIdeal ideal;
  ideal.n = hs.n;
  ideal.generators = coefficients(assoc_defect(hs));
  if (with_basis) ideal.reduced_gb = buchberger(ideal.generators, degree_bound);
  return ideal;
}

Rational evaluate_params(const Polynomial& p, const PresentationParams& t) {
  std::map<Var, Rational> values;
  for (const auto& tr : triples(t.n())) values[Var::param(tr.i, tr.j, tr.k)] = Rational(t.value(tr));
  return p.evaluate(values);
}

ConjectureReport conjecture_probe(const PresentationParams& t, const std::vector<Polynomial>& C) {
  ConjectureReport r;
  r.coefficients_vanish =
      std::all_of(C.begin(), C.end(), [&](const Polynomial& c) { return evaluate_params(c, t) == 0; });
  r.consistent = check_consistency(t);
  return r;
}

}  // namespace hallpoly
