#include "hallpoly/io.hpp"

#include <fstream>
#include <sstream>

#include "hallpoly/errors.hpp"

namespace hallpoly {

namespace {

namespace fs = std::filesystem;

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"", where);
  return *it;
}

int require_int(const Json& j, const char* key, const std::string& where) {
  const auto& v = require(j, key, where);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer", where + "/" + key);
  return v.get<int>();
}

Triple parse_triple(const std::string& s, const std::string& where) {
  Triple t;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> t.i >> c1 >> t.j >> c2 >> t.k) || c1 != ',' || c2 != ',' || !in.eof() || !(t.i < t.j && t.j < t.k) ||
      t.i < 1)
    throw ParseError("malformed triple \"" + s + "\"", where);
  return t;
}

std::string file_name(char kind, int index, const std::string& prefix) {
  return prefix + std::string(1, kind) + "_" + std::to_string(index) + ".json";
}

std::string file_name(const Triple& t, const std::string& prefix) {
  return prefix + "R_" + std::to_string(t.i) + "_" + std::to_string(t.j) + "_" + std::to_string(t.k) + ".json";
}

}  // namespace

std::string coeff_to_string(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational coeff_from_string(const std::string& s, const std::string& where) {
  Rational r;
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& d, bool allow_sign) {
    std::size_t start = (allow_sign && !d.empty() && d[0] == '-') ? 1 : 0;
    if (d.size() == start) return false;
    for (std::size_t i = start; i < d.size(); ++i)
      if (d[i] < '0' || d[i] > '9') return false;
    return !(d.size() > start + 1 && d[start] == '0');
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed coefficient \"" + s + "\"", where);
  r = Rational(Integer(num), Integer(den));
  if (r.get_den() == 0) throw ParseError("zero denominator", where);
  r.canonicalize();
  if (r == 0) throw ParseError("zero coefficient", where);
  if (coeff_to_string(r) != s) throw ParseError("coefficient \"" + s + "\" is not in lowest terms", where);
  return r;
}

Json terms_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json vars = Json::object();
    for (const auto& f : t.mono.factors()) vars[f.var.name()] = f.exp;
    terms.push_back(Json{{"coeff", coeff_to_string(t.coeff)}, {"vars", std::move(vars)}});
  }
  return terms;
}

Polynomial terms_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("terms must be an array", where);
  std::vector<Term> terms;
  for (std::size_t idx = 0; idx < j.size(); ++idx) {
    const std::string at = where + "/" + std::to_string(idx);
    const auto& coeff = require(j[idx], "coeff", at);
    if (!coeff.is_string()) throw ParseError("coeff must be a string", at + "/coeff");
    const auto& vars = require(j[idx], "vars", at);
    if (!vars.is_object()) throw ParseError("vars must be an object", at + "/vars");
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : vars.items()) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() == 0 || e.get<std::uint64_t>() > 0xffffffffu)
        throw ParseError("exponent must be a positive integer", at + "/vars/" + name);
      auto parsed = [&] {
        try {
          return Var::parse(name);
        } catch (const std::exception& ex) {
          throw ParseError(ex.what(), at + "/vars/" + name);
        }
      };
      factors.push_back({parsed(), e.get<std::uint32_t>()});
    }
    terms.push_back({Monomial::from_factors(std::move(factors)), coeff_from_string(coeff.get<std::string>(), at + "/coeff")});
  }
  const auto count = terms.size();
  auto p = Polynomial::from_terms(std::move(terms));
  if (p.size() != count) throw ParseError("repeated monomial", where);
  return p;
}

Json to_json(const PolynomialFile& f) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = f.n;
  j["kind"] = std::string(1, f.kind);
  if (f.kind == 'R')
    j["triple"] = f.triple.to_string();
  else
    j["index"] = f.index;
  j["reduced"] = f.reduced;
  j["terms"] = terms_to_json(f.poly);
  return j;
}

PolynomialFile polynomial_file_from_json(const Json& j) {
  PolynomialFile f;
  if (require_int(j, "schema", "") != kSchemaVersion) throw ParseError("unsupported schema version", "/schema");
  f.n = require_int(j, "n", "");
  const auto& kind = require(j, "kind", "");
  if (!kind.is_string() || kind.get<std::string>().size() != 1 || std::string("FKR").find(kind.get<std::string>()[0]) ==
                                                                      std::string::npos)
    throw ParseError("kind must be F, K or R", "/kind");
  f.kind = kind.get<std::string>()[0];
  if (f.kind == 'R') {
    const auto& t = require(j, "triple", "");
    if (!t.is_string()) throw ParseError("triple must be a string", "/triple");
    f.triple = parse_triple(t.get<std::string>(), "/triple");
    if (f.triple.k > f.n) throw ParseError("triple out of range", "/triple");
  } else {
    f.index = require_int(j, "index", "");
    if (f.index < 1 || f.index > f.n) throw ParseError("index out of range", "/index");
  }
  if (auto it = j.find("reduced"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("reduced must be a boolean", "/reduced");
    f.reduced = it->get<bool>();
  }
  f.poly = terms_from_json(require(j, "terms", ""), "/terms");
  return f;
}

Json basis_to_json(int n, const std::string& kind, const std::vector<Polynomial>& elements, const GroebnerBasis* gb) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = n;
  j["kind"] = kind;
  if (gb != nullptr) {
    j["order"] = gb->order;
    j["degree_bound"] = gb->degree_bound ? Json(*gb->degree_bound) : Json(nullptr);
    j["complete"] = gb->complete();
  }
  Json list = Json::array();
  for (std::size_t i = 0; i < elements.size(); ++i)
    list.push_back(Json{{"index", i + 1}, {"terms", terms_to_json(elements[i])}});
  j["elements"] = std::move(list);
  return j;
}

std::vector<Polynomial> basis_from_json(const Json& j, const std::string& expected_kind) {
  if (require_int(j, "schema", "") != kSchemaVersion) throw ParseError("unsupported schema version", "/schema");
  const auto& kind = require(j, "kind", "");
  if (kind != expected_kind) throw ParseError("unexpected kind", "/kind");
  const auto& list = require(j, "elements", "");
  if (!list.is_array()) throw ParseError("elements must be an array", "/elements");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/elements/" + std::to_string(i);
    out.push_back(terms_from_json(require(list[i], "terms", at), at + "/terms"));
  }
  return out;
}

Json tuple_to_json(const PresentationParams& t) {
  Json j;
  j["n"] = t.n();
  Json values = Json::object();
  for (const auto& tr : triples(t.n())) values[tr.to_string()] = t.value(tr);
  j["t"] = std::move(values);
  return j;
}

PresentationParams tuple_from_json(const Json& j) {
  const int n = require_int(j, "n", "");
  if (n < 1) throw ParseError("n must be positive", "/n");
  const auto& values = require(j, "t", "");
  if (!values.is_object()) throw ParseError("t must be an object", "/t");
  std::vector<std::int64_t> out(triple_count(n), 0);
  std::vector<bool> seen(out.size(), false);
  for (const auto& [key, v] : values.items()) {
    const auto tr = parse_triple(key, "/t/" + key);
    if (tr.k > n) throw ParseError("triple out of range", "/t/" + key);
    if (!v.is_number_integer()) throw ParseError("tuple entries must be integers", "/t/" + key);
    const auto idx = triple_index(n, tr);
    if (seen[idx]) throw ParseError("repeated triple", "/t/" + key);
    seen[idx] = true;
    out[idx] = v.get<std::int64_t>();
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError("missing triple " + triples(n)[i].to_string(), "/t");
  return PresentationParams::concrete(n, std::move(out));
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what(), "byte " + std::to_string(e.byte));
  }
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

void write_json_file(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(j);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::string> write_system(const fs::path& dir, const HallSystem& hs, const std::string& prefix) {
  fs::create_directories(dir);
  std::vector<std::string> names;
  for (int i = 1; i <= hs.n; ++i) {
    names.push_back(file_name('F', i, prefix));
    write_json_file(dir / names.back(), to_json(PolynomialFile{hs.n, 'F', i, {}, hs.reduced, hs.f(i)}));
  }
  for (int i = 1; i <= hs.n; ++i) {
    names.push_back(file_name('K', i, prefix));
    write_json_file(dir / names.back(), to_json(PolynomialFile{hs.n, 'K', i, {}, hs.reduced, hs.k(i)}));
  }
  for (const auto& [t, r] : hs.R) {
    names.push_back(file_name(t, prefix));
    write_json_file(dir / names.back(), to_json(PolynomialFile{hs.n, 'R', 0, t, hs.reduced, r}));
  }
  return names;
}

HallSystem read_system(const fs::path& dir, bool reduced) {
  const auto manifest = read_json_file(dir / "manifest.json");
  HallSystem hs;
  hs.n = require_int(manifest, "n", "manifest.json");
  hs.reduced = reduced;
  hs.F.resize(static_cast<std::size_t>(hs.n));
  hs.K.resize(static_cast<std::size_t>(hs.n));
  std::vector<bool> have_f(hs.F.size(), false), have_k(hs.K.size(), false);
  const auto& files = require(manifest, "files", "manifest.json");
  if (!files.is_array()) throw ParseError("files must be an array", "manifest.json/files");
  for (const auto& entry : files) {
    if (!entry.is_string()) throw ParseError("file entries must be strings", "manifest.json/files");
    const auto name = entry.get<std::string>();
    const bool is_reduced = name.rfind("hat_", 0) == 0;
    if (is_reduced != reduced || name.find('_') == std::string::npos) continue;
    const auto kind_char = name[is_reduced ? 4 : 0];
    if (std::string("FKR").find(kind_char) == std::string::npos || name[is_reduced ? 5 : 1] != '_') continue;
    PolynomialFile f;
    try {
      f = polynomial_file_from_json(read_json_file(dir / name));
    } catch (const ParseError& e) {
      throw ParseError(name + ": " + e.what(), e.where());
    }
    if (f.n != hs.n) throw ParseError(name + ": n does not match the manifest", "/n");
    if (f.kind == 'F') {
      hs.F[static_cast<std::size_t>(f.index - 1)] = f.poly;
      have_f[static_cast<std::size_t>(f.index - 1)] = true;
    } else if (f.kind == 'K') {
      hs.K[static_cast<std::size_t>(f.index - 1)] = f.poly;
      have_k[static_cast<std::size_t>(f.index - 1)] = true;
    } else {
      hs.R[f.triple] = f.poly;
    }
  }
  for (std::size_t i = 0; i < have_f.size(); ++i)
    if (!have_f[i] || !have_k[i]) throw ParseError("manifest lacks F or K files", "manifest.json/files");
  if (hs.R.size() != triple_count(hs.n)) throw ParseError("manifest lacks R files", "manifest.json/files");
  return hs;
}

}  // namespace hallpoly
