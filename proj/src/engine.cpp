#include "hallpoly/engine.hpp"

#include <memory>
#include <mutex>

#include "hallpoly/budget.hpp"
#include "hallpoly/errors.hpp"
#include "hallpoly/recursion.hpp"

namespace hallpoly {

namespace {

Var rename_var(Var v, const ProjectionMap& m) {
  switch (v.kind()) {
    case VarKind::Param: return Var::param(m(v.i()), m(v.j()), m(v.k()));
    case VarKind::X: return Var::x(m(v.index()));
    case VarKind::Y: return Var::y(m(v.index()));
    case VarKind::W: return Var::w(m(v.index()));
    default: return v;
  }
}

HallSystem free_abelian(int n) {
  HallSystem hs;
  hs.n = n;
  for (int i = 1; i <= n; ++i) {
    hs.F.push_back(Polynomial(Var::x(i)) + Polynomial(Var::y(i)));
    hs.K.push_back(Polynomial(Var::x(i)) * Polynomial(Var::z()));
  }
  return hs;
}

// Exponent vectors of U, indexed by parent coordinates 2..n (slot 0 = coordinate 2).
using UVec = std::vector<Polynomial>;

UVec u_multiply(int n, const LiftedSystem& u, const UVec& a, const UVec& b) {
  Substitution s;
  for (int k = 2; k <= n; ++k) {
    s[Var::x(k)] = a[k - 2];
    s[Var::y(k)] = b[k - 2];
  }
  UVec out;
  for (int k = 2; k <= n; ++k) {
    budget_tick();
    out.push_back(substitute(u.F.at(k), s));
  }
  return out;
}

UVec u_power(int n, const LiftedSystem& u, const UVec& a, const Polynomial& e) {
  Substitution s;
  for (int k = 2; k <= n; ++k) s[Var::x(k)] = a[k - 2];
  s[Var::z()] = e;
  UVec out;
  for (int k = 2; k <= n; ++k) {
    budget_tick();
    out.push_back(substitute(u.K.at(k), s));
  }
  return out;
}

Polynomial at_u_one(const Polynomial& r) { return substitute(r, {{Var::u(), Polynomial(1)}}); }

Polynomial param(int i, int j, int k) { return Polynomial(Var::param(i, j, k)); }

std::mutex memo_mutex;
std::map<int, std::shared_ptr<const HallSystem>> memo;

std::shared_ptr<const HallSystem> derive_shared(int n);

HallSystem derive_uncached(int n) {
  if (n <= 2) return free_abelian(n);
  const auto subs = subsystems(n);
  const auto r_base = conj_base(n, subs);
  const auto r_full = conj_full(n, subs, r_base);
  HallSystem hs;
  hs.n = n;
  hs.R = assemble_R(n, subs, r_full);
  const auto f_top = mult_top(n, subs, hs.R);
  hs.F.push_back(Polynomial(Var::x(1)) + Polynomial(Var::y(1)));
  for (int i = 2; i < n; ++i) hs.F.push_back(subs.w.F.at(i));
  hs.F.push_back(f_top);
  for (int i = 1; i < n; ++i) hs.K.push_back(subs.w.K.at(i));
  hs.K.push_back(power_top(n, subs, f_top));
  return hs;
}

std::shared_ptr<const HallSystem> derive_shared(int n) {
  if (n < 1) throw std::invalid_argument("derive requires n >= 1");
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  auto hs = std::make_shared<const HallSystem>(derive_uncached(n));
  std::lock_guard lock(memo_mutex);
  return memo.emplace(n, std::move(hs)).first->second;
}

}  // namespace

Polynomial lift(const Polynomial& p, const ProjectionMap& map) {
  return p.rename([&](Var v) { return rename_var(v, map); });
}

LiftedSystem lift(const HallSystem& sub, const ProjectionMap& map) {
  if (sub.n != map.source_n - 1) throw DimensionMismatch("subsystem size does not match projection");
  LiftedSystem out{map, {}, {}, {}};
  for (int i = 1; i <= sub.n; ++i) {
    out.F.emplace(map(i), lift(sub.f(i), map));
    out.K.emplace(map(i), lift(sub.k(i), map));
  }
  for (const auto& [t, r] : sub.R) out.R.emplace(map(t), lift(r, map));
  return out;
}

HallSystem derive(int n) { return *derive_shared(n); }

Subsystems subsystems(int n) {
  if (n < 3) throw std::invalid_argument("subsystems requires n >= 3");
  const auto sub = derive_shared(n - 1);
  return {lift(*sub, projection_map(n, Projection::U)), lift(*sub, projection_map(n, Projection::V)),
          lift(*sub, projection_map(n, Projection::W))};
}

Polynomial conj_base(int n, const Subsystems& subs) {
  // a_1^{-1} a_2 a_1 = a_2 a_3^{T_123} ... a_n^{T_12n}
  UVec acc(static_cast<std::size_t>(n - 1));
  acc[0] = Polynomial(1);
  for (int k = 3; k <= n; ++k) acc[k - 2] = param(1, 2, k);
  for (int j = 3; j < n; ++j) {
    UVec e(static_cast<std::size_t>(n - 1));
    e[j - 2] = Polynomial(1);
    for (int k = j + 1; k <= n; ++k) e[k - 2] = param(1, j, k);
    acc = u_multiply(n, subs.u, acc, u_power(n, subs.u, e, at_u_one(subs.w.R.at({1, 2, j}))));
  }
  return solve_recursion(acc[n - 2], Var::v(), Polynomial());
}

Polynomial conj_full(int n, const Subsystems& subs, const std::vector<Polynomial>& r) {
  if (r.size() != static_cast<std::size_t>(n - 1)) throw DimensionMismatch("r must have n-1 entries");
  Substitution s;
  for (int k = 2; k <= n; ++k) s[Var::x(k)] = r[k - 2];
  s[Var::z()] = Polynomial(Var::u());
  return substitute(subs.u.K.at(n), s);
}

Polynomial conj_full(int n, const Subsystems& subs, const Polynomial& r_base) {
  std::vector<Polynomial> r{Polynomial(1)};
  for (int k = 3; k < n; ++k) r.push_back(at_u_one(subs.w.R.at({1, 2, k})));
  r.push_back(r_base);
  return conj_full(n, subs, r);
}

std::map<Triple, Polynomial> assemble_R(int n, const Subsystems& subs, const Polynomial& new_r) {
  std::map<Triple, Polynomial> out;
  auto offer = [&](const Triple& t, const Polynomial& p, char source) {
    auto [it, fresh] = out.emplace(t, p);
    if (!fresh && it->second != p)
      throw InternalConsistencyError("R_" + t.to_string() + " from " + source + " disagrees with an earlier source");
  };
  for (const auto& [t, p] : subs.u.R) offer(t, p, 'U');
  for (const auto& [t, p] : subs.v.R) offer(t, p, 'V');
  for (const auto& [t, p] : subs.w.R) offer(t, p, 'W');
  offer({1, 2, n}, new_r, 'N');
  if (out.size() != triple_count(n)) throw InternalConsistencyError("conjugation polynomials incomplete");
  return out;
}

Polynomial mult_top(int n, const Subsystems& subs, const std::map<Triple, Polynomial>& R) {
  // (a_i^{x_i})^{a_1^{y_1}} = a_i^{x_i} prod_{k>i} a_k^{R_{1,i,k}(x_i, y_1)}
  auto factor = [&](int i) {
    UVec c(static_cast<std::size_t>(n - 1));
    c[i - 2] = Polynomial(Var::x(i));
    const Substitution uv{{Var::u(), Polynomial(Var::x(i))}, {Var::v(), Polynomial(Var::y(1))}};
    for (int k = i + 1; k <= n; ++k) c[k - 2] = substitute(R.at({1, i, k}), uv);
    return c;
  };
  UVec acc = factor(2);
  for (int i = 3; i <= n; ++i) acc = u_multiply(n, subs.u, acc, factor(i));
  UVec ys;
  for (int k = 2; k <= n; ++k) ys.push_back(Polynomial(Var::y(k)));
  acc = u_multiply(n, subs.u, acc, ys);
  Polynomial f_top = acc[n - 2];

  const auto h = f_top - Polynomial(Var::x(n)) - Polynomial(Var::y(n));
  if (h.involves(Var::x(n)) || h.involves(Var::y(n)))
    throw InternalConsistencyError("F_" + std::to_string(n) + " is not of the form x_n + y_n + H_n");
  return f_top;
}

Polynomial power_top(int n, const Subsystems& subs, const Polynomial& f_top) {
  // K_n(x, z+1) = F_n(K(x, z), x) = K_n(x, z) + x_n + H_n(K(x, z), x)
  const auto h = f_top - Polynomial(Var::x(n)) - Polynomial(Var::y(n));
  Substitution s;
  for (int i = 1; i < n; ++i) {
    s[Var::x(i)] = subs.w.K.at(i);
    s[Var::y(i)] = Polynomial(Var::x(i));
  }
  const auto g = Polynomial(Var::x(n)) + substitute(h, s);
  return solve_recursion(g, Var::z(), Polynomial());
}

VarSet xy_vars() { return VarSet::of_kinds({VarKind::X, VarKind::Y}); }
VarSet xz_vars() { return VarSet::of_kinds({VarKind::X, VarKind::Z}); }

}  // namespace hallpoly
