// Inductive derivation of the Hall polynomials of G(T).
//
// derive(n) builds F_1..F_n, K_1..K_n and all R_{i,j,k} for generic
// parameters.  The three sub-presentations U = <a_2..a_n>, V = <a_1,a_3..a_n>
// and W = G/<a_n> reuse derive(n-1), renamed into the parent ring.

#pragma once

#include <map>
#include <vector>

#include "hallpoly/polyring.hpp"
#include "hallpoly/presentation.hpp"

namespace hallpoly {

/// Hall polynomials for one Hirsch length.
///   F_i in (T; x, y):  a^x a^y = a^F
///   K_i in (T; x, z):  (a^x)^z = a^K
///   R_{i,j,k} in (T; u, v):  a_i^{-v} a_j^u a_i^v = a_j^u prod_{k>j} a_k^{R_{i,j,k}}
struct HallSystem {
  int n = 0;
  std::vector<Polynomial> F;  // F[i-1] = F_i
  std::vector<Polynomial> K;
  std::map<Triple, Polynomial> R;
  bool reduced = false;

  const Polynomial& f(int i) const { return F.at(static_cast<std::size_t>(i - 1)); }
  const Polynomial& k(int i) const { return K.at(static_cast<std::size_t>(i - 1)); }
  const Polynomial& r(const Triple& t) const { return R.at(t); }
};

/// A sub-presentation's system renamed into the parent ring and keyed by
/// parent indices.
struct LiftedSystem {
  ProjectionMap map;
  std::map<int, Polynomial> F, K;
  std::map<Triple, Polynomial> R;
};

struct Subsystems {
  LiftedSystem u, v, w;
};

/// Renames x_i, y_i, w_i and T[i,j,k] through the projection's index map.
Polynomial lift(const Polynomial& p, const ProjectionMap& map);
LiftedSystem lift(const HallSystem& sub, const ProjectionMap& map);

/// Memoized; derive(n) for n >= 3 derives n-1 once and lifts it three times.
/// Throws ResourceLimitExceeded when the installed budget runs out.
HallSystem derive(int n);
Subsystems subsystems(int n);

// The individual induction steps, for n >= 3.

/// R_{1,2,n}(T; 1, v).
Polynomial conj_base(int n, const Subsystems& subs);
/// R_{1,2,n}(T; u, v) from r = (1, R_{1,2,3}(T;1,v), ..., R_{1,2,n}(T;1,v)),
/// indexed by the U coordinates 2..n.
Polynomial conj_full(int n, const Subsystems& subs, const std::vector<Polynomial>& r);
/// Convenience overload that reads R_{1,2,k}(T;1,v) for k < n from W.
Polynomial conj_full(int n, const Subsystems& subs, const Polynomial& r_base);
/// All conjugation polynomials; overlapping sources are compared and a
/// disagreement throws InternalConsistencyError.
std::map<Triple, Polynomial> assemble_R(int n, const Subsystems& subs, const Polynomial& new_r);
/// F_n.  Throws InternalConsistencyError if F_n - x_n - y_n involves x_n or y_n.
Polynomial mult_top(int n, const Subsystems& subs, const std::map<Triple, Polynomial>& R);
/// K_n from F_n and W's K_1..K_{n-1}.
Polynomial power_top(int n, const Subsystems& subs, const Polynomial& f_top);

/// Variable sets for the degree statistics.
VarSet xy_vars();
VarSet xz_vars();

}  // namespace hallpoly
