#include "hallpoly/polyring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hallpoly/budget.hpp"

namespace hallpoly {

namespace {

constexpr int kMaxIndex = 255;

int parse_positive(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1)
    throw std::invalid_argument("bad variable name: " + std::string(whole));
  return value;
}

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

}  // namespace

// ---------------------------------------------------------------- Var

Var Var::param(int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= kMaxIndex))
    throw std::invalid_argument("Param(i,j,k) requires 1 <= i < j < k <= 255");
  return Var(code_of(VarKind::Param, (static_cast<std::uint32_t>(i) << 16) |
                                         (static_cast<std::uint32_t>(j) << 8) |
                                         static_cast<std::uint32_t>(k)));
}

Var Var::indexed(VarKind kind, int index) {
  if (index < 1 || index > 0xffffff) throw std::invalid_argument("variable index out of range");
  return Var(code_of(kind, static_cast<std::uint32_t>(index)));
}

std::string Var::name() const {
  switch (kind()) {
    case VarKind::Param:
      return "T[" + std::to_string(i()) + "," + std::to_string(j()) + "," + std::to_string(k()) +
             "]";
    case VarKind::X: return "x" + std::to_string(index());
    case VarKind::Y: return "y" + std::to_string(index());
    case VarKind::W: return "w" + std::to_string(index());
    case VarKind::Z: return "z";
    case VarKind::U: return "u";
    case VarKind::V: return "v";
    case VarKind::Aux: return "aux" + std::to_string(index());
  }
  return "?";
}

Var Var::parse(std::string_view name) {
  if (name == "z") return z();
  if (name == "u") return u();
  if (name == "v") return v();
  if (name.size() >= 8 && name.substr(0, 2) == "T[" && name.back() == ']') {
    auto body = name.substr(2, name.size() - 3);
    auto c1 = body.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw std::invalid_argument("bad variable name: " + std::string(name));
    int i = parse_positive(body.substr(0, c1), name);
    int j = parse_positive(body.substr(c1 + 1, c2 - c1 - 1), name);
    int k = parse_positive(body.substr(c2 + 1), name);
    return param(i, j, k);
  }
  if (name.size() > 3 && name.substr(0, 3) == "aux") return aux(parse_positive(name.substr(3), name));
  if (name.size() > 1) {
    int idx = 0;
    switch (name[0]) {
      case 'x': idx = parse_positive(name.substr(1), name); return x(idx);
      case 'y': idx = parse_positive(name.substr(1), name); return y(idx);
      case 'w': idx = parse_positive(name.substr(1), name); return w(idx);
      default: break;
    }
  }
  throw std::invalid_argument("bad variable name: " + std::string(name));
}

// ---------------------------------------------------------------- VarSet

VarSet VarSet::of_kinds(std::initializer_list<VarKind> kinds) {
  VarSet s;
  for (auto k : kinds) s.add_kind(k);
  return s;
}

VarSet VarSet::of(std::initializer_list<Var> vars) {
  VarSet s;
  for (auto v : vars) s.add(v);
  return s;
}

VarSet& VarSet::add(Var v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
  return *this;
}

VarSet& VarSet::add_kind(VarKind kind) {
  kind_mask_ |= 1u << static_cast<unsigned>(kind);
  return *this;
}

bool VarSet::contains(Var v) const {
  if (kind_mask_ & (1u << static_cast<unsigned>(v.kind()))) return true;
  return std::binary_search(members_.begin(), members_.end(), v);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t exp) {
  if (exp > 0) data_.push_back(pack(v, exp));
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.data_.empty() && (m.data_.back() >> 32) == f.var.code()) {
      auto e = (m.data_.back() & 0xffffffffu) + f.exp;
      m.data_.back() = pack(f.var, static_cast<std::uint32_t>(e));
    } else {
      m.data_.push_back(pack(f.var, f.exp));
    }
  }
  return m;
}

std::vector<Monomial::Factor> Monomial::factors() const {
  std::vector<Factor> out;
  out.reserve(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out.push_back(factor(i));
  return out;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (auto e : data_)
    if ((e >> 32) == v.code()) return static_cast<std::uint32_t>(e & 0xffffffffu);
  return 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : data_) d += e & 0xffffffffu;
  return d;
}

std::uint64_t Monomial::degree_in(const VarSet& vars) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    auto f = factor(i);
    if (vars.contains(f.var)) d += f.exp;
  }
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (auto e : data_) {
    auto code = e >> 32;
    while (j < other.data_.size() && (other.data_[j] >> 32) < code) ++j;
    if (j == other.data_.size() || (other.data_[j] >> 32) != code) return false;
    if ((other.data_[j] & 0xffffffffu) < (e & 0xffffffffu)) return false;
    ++j;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q;
  std::size_t j = 0;
  for (auto e : data_) {
    auto code = e >> 32;
    std::uint64_t exp = e & 0xffffffffu;
    if (j < divisor.data_.size() && (divisor.data_[j] >> 32) == code) {
      exp -= divisor.data_[j] & 0xffffffffu;
      ++j;
    }
    if (exp > 0) q.data_.push_back((code << 32) | exp);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < data_.size() || j < other.data_.size()) {
    if (j == other.data_.size() || (i < data_.size() && (data_[i] >> 32) < (other.data_[j] >> 32))) {
      r.data_.push_back(data_[i++]);
    } else if (i == data_.size() || (other.data_[j] >> 32) < (data_[i] >> 32)) {
      r.data_.push_back(other.data_[j++]);
    } else {
      r.data_.push_back(std::max(data_[i], other.data_[j]));
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  std::size_t i = 0, j = 0;
  while (i < data_.size() && j < other.data_.size()) {
    auto a = data_[i] >> 32, b = other.data_[j] >> 32;
    if (a == b) return false;
    if (a < b) ++i; else ++j;
  }
  return true;
}

std::pair<Monomial, Monomial> Monomial::split(const VarSet& vars) const {
  std::pair<Monomial, Monomial> r;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (vars.contains(factor(i).var)) r.first.data_.push_back(data_[i]);
    else r.second.data_.push_back(data_[i]);
  }
  return r;
}

std::uint32_t Monomial::remove(Var v) {
  for (auto it = data_.begin(); it != data_.end(); ++it) {
    if ((*it >> 32) == v.code()) {
      auto e = static_cast<std::uint32_t>(*it & 0xffffffffu);
      data_.erase(it);
      return e;
    }
  }
  return 0;
}

Monomial Monomial::rename(const std::function<Var(Var)>& map) const {
  std::vector<Factor> fs = factors();
  for (auto& f : fs) f.var = map(f.var);
  return from_factors(std::move(fs));
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto e : data_) {
    h ^= e;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const {
  if (data_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    auto f = factor(i);
    if (i) s += "*";
    s += f.var.name();
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.data_.size() || j < b.data_.size()) {
    if (j == b.data_.size() || (i < a.data_.size() && (a.data_[i] >> 32) < (b.data_[j] >> 32))) {
      r.data_.push_back(a.data_[i++]);
    } else if (i == a.data_.size() || (b.data_[j] >> 32) < (a.data_[i] >> 32)) {
      r.data_.push_back(b.data_[j++]);
    } else {
      r.data_.push_back(a.data_[i] + (b.data_[j] & 0xffffffffu));
      ++i;
      ++j;
    }
  }
  return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial with the smaller exponent in the last
  // (highest-coded) variable where they differ is the larger one.
  std::ptrdiff_t ia = static_cast<std::ptrdiff_t>(a.data_.size()) - 1;
  std::ptrdiff_t ib = static_cast<std::ptrdiff_t>(b.data_.size()) - 1;
  while (ia >= 0 && ib >= 0) {
    auto va = a.data_[ia] >> 32, vb = b.data_[ib] >> 32;
    if (va == vb) {
      auto ea = a.data_[ia] & 0xffffffffu, eb = b.data_[ib] & 0xffffffffu;
      if (ea != eb) return ea < eb ? 1 : -1;
      --ia;
      --ib;
    } else {
      return va > vb ? -1 : 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- builder

void PolynomialBuilder::grow() {
  std::size_t cap = buckets_.empty() ? 64 : buckets_.size() * 2;
  buckets_.assign(cap, static_cast<std::size_t>(-1));
  mask_ = cap - 1;
  for (std::size_t idx = 0; idx < acc_.size(); ++idx) {
    auto slot = acc_[idx].first.hash() & mask_;
    while (buckets_[slot] != static_cast<std::size_t>(-1)) slot = (slot + 1) & mask_;
    buckets_[slot] = idx;
  }
}

std::size_t PolynomialBuilder::find_slot(const Monomial& m, std::size_t h) const {
  auto slot = h & mask_;
  while (buckets_[slot] != static_cast<std::size_t>(-1) && !(acc_[buckets_[slot]].first == m))
    slot = (slot + 1) & mask_;
  return slot;
}

void PolynomialBuilder::add(Monomial&& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if ((acc_.size() + 1) * 2 > buckets_.size()) {
    grow();
    if ((acc_.size() & 0xffff) == 0) budget_check_terms(acc_.size());
  }
  auto slot = find_slot(m, m.hash());
  if (buckets_[slot] == static_cast<std::size_t>(-1)) {
    buckets_[slot] = acc_.size();
    acc_.emplace_back(std::move(m), c);
  } else {
    acc_[buckets_[slot]].second += c;
  }
}

void PolynomialBuilder::add(const Monomial& m, const Rational& c) { add(Monomial(m), c); }

void PolynomialBuilder::add(const Polynomial& p) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolynomialBuilder::add_scaled(const Polynomial& p, const Rational& c, const Monomial& m) {
  Rational tmp;
  for (const auto& t : p.terms()) {
    tmp = t.coeff * c;
    add(t.mono * m, tmp);
  }
}

Polynomial PolynomialBuilder::build() {
  budget_tick();
  Polynomial p;
  p.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (sgn(c) != 0) p.terms_.push_back(Term{std::move(m), std::move(c)});
  acc_.clear();
  buckets_.clear();
  mask_ = 0;
  budget_check_terms(p.terms_.size());
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial(), c});
}

Polynomial::Polynomial(Var v) { terms_.push_back(Term{Monomial(v), Rational(1)}); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolynomialBuilder b;
  for (auto& t : terms) b.add(std::move(t.mono), t.coeff);
  return b.build();
}

void Polynomial::normalize_sorted() {
  std::erase_if(terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vs;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i) vs.push_back(t.mono.factor(i).var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Polynomial::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.exponent(v) > 0; });
}

bool Polynomial::involves_any(const VarSet& vars) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (vars.contains(t.mono.factor(i).var)) return true;
  return false;
}

bool Polynomial::involves_only(const VarSet& vars) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (!vars.contains(t.mono.factor(i).var)) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two sorted term lists: a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  if (terms_.empty()) return *this = q;
  terms_ = merge_terms(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial r;
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial& Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& q) {
  return *this -= q.scaled(c, m);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  if (p.size() == 1) return q.scaled(p.terms_[0].coeff, p.terms_[0].mono);
  if (q.size() == 1) return p.scaled(q.terms_[0].coeff, q.terms_[0].mono);
  const Polynomial& small = p.size() <= q.size() ? p : q;
  const Polynomial& large = p.size() <= q.size() ? q : p;
  if (small.size() <= 4) {
    Polynomial acc;
    for (const auto& t : small.terms_) acc += large.scaled(t.coeff, t.mono);
    return acc;
  }
  PolynomialBuilder b;
  Rational tmp;
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      tmp = s.coeff * l.coeff;
      b.add(s.mono * l.mono, tmp);
    }
  }
  return b.build();
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::map<Var, Rational>& values) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      auto f = t.mono.factor(i);
      auto it = values.find(f.var);
      if (it == values.end())
        throw std::invalid_argument("evaluate: no value for variable " + f.var.name());
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), f.exp);
      mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), f.exp);
      prod *= pw;
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::rename(const std::function<Var(Var)>& map) const {
  PolynomialBuilder b;
  for (const auto& t : terms_) b.add(t.mono.rename(map), t.coeff);
  return b.build();
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / terms_.front().coeff;
  r *= inv;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << t.mono.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- free functions

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

namespace {

struct SubstitutionContext {
  std::vector<Var> vars;                       // mapped variables present, ascending
  std::vector<const Polynomial*> images;
  std::vector<std::vector<Polynomial>> powers;  // powers[i][e] = images[i]^e

  const Polynomial& power(std::size_t idx, std::uint32_t e) {
    auto& pw = powers[idx];
    if (pw.empty()) pw.emplace_back(1);
    while (pw.size() <= e) pw.push_back(pw.back() * *images[idx]);
    return pw[e];
  }
};

// Horner-style grouping: p = sum_e var^e * p_e, substituted recursively.
Polynomial substitute_rec(std::vector<Term>& terms, std::size_t level, SubstitutionContext& ctx) {
  budget_tick();
  while (level < ctx.vars.size()) {
    Var var = ctx.vars[level];
    bool present = std::any_of(terms.begin(), terms.end(),
                               [&](const Term& t) { return t.mono.exponent(var) > 0; });
    if (present) break;
    ++level;
  }
  if (level == ctx.vars.size()) return Polynomial::from_terms(std::move(terms));

  Var var = ctx.vars[level];
  const Polynomial& image = *ctx.images[level];
  std::map<std::uint32_t, std::vector<Term>> groups;
  for (auto& t : terms) {
    auto e = t.mono.remove(var);
    if (e > 0 && image.is_zero()) continue;
    groups[e].push_back(std::move(t));
  }
  terms.clear();

  PolynomialBuilder acc;
  for (auto& [e, group] : groups) {
    Polynomial sub = substitute_rec(group, level + 1, ctx);
    if (e == 0) {
      acc.add(sub);
    } else if (image.size() == 1) {
      const auto& it = image.terms().front();
      Rational c;
      mpz_pow_ui(c.get_num_mpz_t(), it.coeff.get_num_mpz_t(), e);
      mpz_pow_ui(c.get_den_mpz_t(), it.coeff.get_den_mpz_t(), e);
      Monomial m;
      for (std::uint32_t r = 0; r < e; ++r) m = m * it.mono;
      acc.add_scaled(sub, c, m);
    } else {
      acc.add(sub * ctx.power(level, e));
    }
  }
  return acc.build();
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Substitution& map) {
  if (map.empty() || p.is_zero()) return p;
  SubstitutionContext ctx;
  for (Var v : p.variables()) {
    auto it = map.find(v);
    if (it == map.end()) continue;
    ctx.vars.push_back(v);
    ctx.images.push_back(&it->second);
  }
  if (ctx.vars.empty()) return p;
  ctx.powers.resize(ctx.vars.size());
  std::vector<Term> terms = p.terms();
  return substitute_rec(terms, 0, ctx);
}

std::vector<std::pair<Monomial, Polynomial>> split_by_vars(const Polynomial& p, const VarSet& vars) {
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& t : p.terms()) {
    auto [key, rest] = t.mono.split(vars);
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted) groups.emplace_back(key, std::vector<Term>{});
    groups[it->second].second.push_back(Term{std::move(rest), t.coeff});
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(groups.size());
  for (auto& [key, ts] : groups) {
    // Sub-sequences of a sorted list stay sorted after removing a common factor.
    out.emplace_back(key, Polynomial::from_terms(std::move(ts)));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return grevlex_compare(a.first, b.first) > 0; });
  return out;
}

long degree_in(const Polynomial& p, const VarSet& vars) {
  long d = -1;
  for (const auto& t : p.terms()) d = std::max(d, static_cast<long>(t.mono.degree_in(vars)));
  return d;
}

std::size_t monomial_count_in(const Polynomial& p, const VarSet& vars) {
  std::unordered_map<Monomial, int, MonomialHash> seen;
  for (const auto& t : p.terms()) seen.emplace(t.mono.split(vars).first, 0);
  return seen.size();
}

long total_degree(const Polynomial& p) {
  long d = -1;
  for (const auto& t : p.terms()) d = std::max(d, static_cast<long>(t.mono.degree()));
  return d;
}

}  // namespace hallpoly
