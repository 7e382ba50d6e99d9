// hallpoly: derive, reduce, export, validate, tabulate and benchmark Hall
// polynomials.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or input error,
// 3 resource budget exceeded.  HALLPOLY_BUDGET (e.g. "seconds=600,terms=5e7")
// overrides the default budget.

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hallpoly/budget.hpp"
#include "hallpoly/collector.hpp"
#include "hallpoly/consistency.hpp"
#include "hallpoly/engine.hpp"
#include "hallpoly/errors.hpp"
#include "hallpoly/io.hpp"
#include "hallpoly/runtime.hpp"

namespace fs = std::filesystem;
using namespace hallpoly;

namespace {

enum Exit { kOk = 0, kValidation = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree bound used for n >= 7 unless --full is given: the full basis of I_7
// is out of reach.
constexpr int kDefaultBoundFor7 = 7;

Budget default_budget() {
  Budget b;
  b.wall_time = std::chrono::duration<double>(900);
  b.max_terms = 50'000'000;
  b.max_pairs = 2'000'000;
  return b;
}

std::optional<int> effective_bound(int n, std::optional<int> bound, bool full) {
  if (bound || full || n < 7) return bound;
  return kDefaultBoundFor7;
}

struct Reduction {
  std::vector<Polynomial> C;
  GroebnerBasis gb;
  HallSystem reduced;
};

Reduction reduce_for(const HallSystem& hs, std::optional<int> bound, bool verbose) {
  Reduction r;
  r.C = coefficients(assoc_defect(hs));
  if (verbose) std::cerr << "n = " << hs.n << ": " << r.C.size() << " coefficient polynomials\n";
  std::function<void(const BuchbergerProgress&)> progress;
  if (verbose)
    progress = [](const BuchbergerProgress& p) {
      std::cerr << "  inputs " << p.inputs_done << "/" << p.inputs_total << ", basis " << p.basis_size << ", pairs "
                << p.pending_pairs << ", reductions " << p.reductions << "\n";
    };
  r.gb = buchberger(r.C, bound, progress, 500);
  r.reduced = reduce_system(hs, r.gb);
  return r;
}

// ---------------------------------------------------------------- derive

int cmd_derive(int n, bool reduce, std::optional<int> bound, bool full, const std::string& out, bool verbose) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const auto hs = derive(n);
  std::cout << "derived n = " << n << ": " << hs.F.size() << " F, " << hs.K.size() << " K, " << hs.R.size()
            << " R polynomials\n";
  // Nothing is written until every computation has finished, so a budget
  // exit leaves no partial output behind.
  std::optional<Reduction> r;
  const auto eff = effective_bound(n, bound, full);
  if (reduce) r = reduce_for(hs, eff, verbose);

  Json manifest;
  manifest["schema"] = kSchemaVersion;
  manifest["n"] = n;
  manifest["reduced"] = reduce;
  auto files = write_system(out, hs);
  if (r) {
    write_json_file(fs::path(out) / "C.json", basis_to_json(n, "C", r->C, nullptr));
    write_json_file(fs::path(out) / "GB.json", basis_to_json(n, "GB", r->gb.elements, &r->gb));
    files.push_back("C.json");
    files.push_back("GB.json");
    auto hat = write_system(out, r->reduced, "hat_");
    files.insert(files.end(), hat.begin(), hat.end());
    manifest["gb"] = Json{{"elements", r->gb.elements.size()},
                          {"order", r->gb.order},
                          {"degree_bound", eff ? Json(*eff) : Json(nullptr)},
                          {"complete", r->gb.complete()},
                          {"skipped_pairs", r->gb.skipped_pairs},
                          {"reductions", r->gb.reductions}};
    manifest["coefficients"] = r->C.size();
    std::cout << "consistency ideal: " << r->C.size() << " generators, Groebner basis with "
              << r->gb.elements.size() << " elements";
    if (eff) std::cout << " (degree bound " << *eff << (r->gb.complete() ? ", complete" : ", partial") << ")";
    std::cout << "\n";
  }
  manifest["files"] = files;
  write_json_file(fs::path(out) / "manifest.json", manifest);
  std::cout << "wrote " << files.size() + 1 << " files to " << out << "\n";
  return kOk;
}

// ---------------------------------------------------------------- table

int cmd_table(int max_n, bool verbose) {
  if (max_n < 1 || max_n > 7) throw UsageError("--max-n must be between 1 and 7");
  std::cout << std::left << std::setw(3) << "n" << " | " << std::setw(8) << "F degree" << " | " << std::setw(11)
            << "F monomials" << " | " << std::setw(8) << "K degree" << " | " << std::setw(11) << "K monomials"
            << " | GB elements\n";
  for (int n = 1; n <= max_n; ++n) {
    const auto hs = derive(n);
    HallSystem shown = hs;
    std::string gb_note = "0";
    if (n >= 5) {
      const auto eff = effective_bound(n, std::nullopt, false);
      auto r = reduce_for(hs, eff, verbose);
      shown = r.reduced;
      gb_note = std::to_string(r.gb.elements.size());
      if (eff && !r.gb.complete()) gb_note += " (degree bound " + std::to_string(*eff) + ")";
    }
    std::cout << std::setw(3) << n << " | " << std::setw(8) << degree_in(shown.f(n), xy_vars()) << " | "
              << std::setw(11) << monomial_count_in(shown.f(n), xy_vars()) << " | " << std::setw(8)
              << degree_in(shown.k(n), xz_vars()) << " | " << std::setw(11)
              << monomial_count_in(shown.k(n), xz_vars()) << " | " << gb_note << "\n"
              << std::flush;
  }
  return kOk;
}

// ---------------------------------------------------------------- check

std::string vec_str(const ExpVec& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

int cmd_check(int n, std::size_t samples, std::int64_t range, std::int64_t zrange, std::uint64_t seed,
              const std::string& dir, bool use_reduced) {
  if (n < 1 || n > 7) throw UsageError("--n must be between 1 and 7");
  HallSystem hs;
  if (!dir.empty()) {
    hs = read_system(dir, use_reduced);
    if (hs.n != n) throw UsageError("--n does not match the system in " + dir);
  } else {
    hs = derive(n);
    if (use_reduced && n >= 5) hs = reduce_for(hs, effective_bound(n, std::nullopt, false), false).reduced;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> ex(-range, range), ez(-zrange, zrange);
  std::size_t failures = 0;
  for (const auto& entry : catalog(n)) {
    const auto ss = specialize(hs, entry.params);
    Collector collector(entry.params);
    std::size_t bad = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      ExpVec x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
      for (auto& e : x) e = ex(rng);
      for (auto& e : y) e = ex(rng);
      const auto z = ez(rng);
      auto compare = [&](const std::string& what, const ExpVec& expected, const std::function<ExpVec()>& got) {
        std::string result;
        try {
          result = vec_str(got());
        } catch (const NonIntegralError& e) {
          result = std::string("non-integral: ") + e.what();
        }
        if (result != vec_str(expected)) {
          ++bad;
          std::cout << "MISMATCH " << entry.name << " " << what << " expected " << vec_str(expected) << " got "
                    << result << "\n";
        }
      };
      compare("multiply x=" + vec_str(x) + " y=" + vec_str(y), collector.multiply(x, y),
              [&] { return eval_multiply(ss, x, y); });
      compare("power x=" + vec_str(x) + " z=" + std::to_string(z), collector.power(x, z),
              [&] { return eval_power(ss, x, z); });
    }
    std::cout << (bad == 0 ? "ok   " : "FAIL ") << entry.name << ": " << samples << " samples, " << bad
              << " mismatches\n";
    failures += bad;
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kOk : kValidation;
}

// ---------------------------------------------------------------- consistent

int cmd_consistent(const std::string& file) {
  const auto t = tuple_from_json(read_json_file(file));
  const bool consistent = check_consistency(t);
  std::cout << "n: " << t.n() << "\n";
  std::cout << "consistent: " << (consistent ? "true" : "false") << "\n";
  const auto C = coefficients(assoc_defect(derive(t.n())));
  const auto report = conjecture_probe(t, C);
  std::cout << "coefficients: " << C.size() << "\n";
  std::cout << "coefficients_vanish: " << (report.coefficients_vanish ? "true" : "false") << "\n";
  if (report.refutes()) std::cout << "note: all coefficients vanish at an inconsistent tuple\n";
  return kOk;
}

// ---------------------------------------------------------------- bench

int cmd_bench(int n, const std::string& file, std::size_t iters, std::int64_t range, std::uint64_t seed) {
  const auto t = tuple_from_json(read_json_file(file));
  if (t.n() != n) throw UsageError("--n does not match the tuple file");
  if (!check_consistency(t)) {
    std::cerr << "error: the tuple is not consistent\n";
    return kValidation;
  }
  HallSystem hs = derive(n);
  if (n >= 5 && n <= 6) hs = reduce_for(hs, std::nullopt, false).reduced;
  const auto report = bench(specialize(hs, t), t, {iters, range, seed});
  std::cout << report.to_json() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall polynomials of torsion-free nilpotent groups"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Progress on stderr");

  int n = 0;
  auto* derive_cmd = app.add_subcommand("derive", "Derive F, K, R and optionally reduce them");
  bool reduce = false, full = false;
  std::optional<int> bound;
  std::string out;
  derive_cmd->add_option("--n", n, "Hirsch length")->required();
  derive_cmd->add_flag("--reduce", reduce, "Compute the consistency ideal and reduce");
  derive_cmd->add_option("--degree-bound", bound, "Skip S-pairs of larger lcm degree");
  derive_cmd->add_flag("--full", full, "Full Groebner basis even for n >= 7");
  derive_cmd->add_option("--out", out, "Output directory")->required();

  auto* table_cmd = app.add_subcommand("table", "Degrees and monomial counts of the reduced polynomials");
  int max_n = 6;
  table_cmd->add_option("--max-n", max_n, "Largest n")->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "Compare the polynomials with collection on the catalog");
  std::size_t samples = 100;
  std::int64_t range = 3, zrange = 4;
  std::uint64_t seed = 42;
  std::string dir;
  bool use_reduced = false;
  check_cmd->add_option("--n", n, "Hirsch length")->required();
  check_cmd->add_option("--samples", samples, "Samples per instance")->capture_default_str();
  check_cmd->add_option("--range", range, "Exponent range")->capture_default_str();
  check_cmd->add_option("--zrange", zrange, "Power range")->capture_default_str();
  check_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  check_cmd->add_option("--dir", dir, "Read polynomials written by derive");
  check_cmd->add_flag("--reduced", use_reduced, "Check the reduced polynomials");

  auto* consistent_cmd = app.add_subcommand("consistent", "Consistency of a tuple");
  std::string tuple_file;
  consistent_cmd->add_option("--t", tuple_file, "Tuple JSON file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Evaluation against collection");
  std::size_t iters = 1000;
  std::int64_t bench_range = 3;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--n", n, "Hirsch length")->required();
  bench_cmd->add_option("--t", tuple_file, "Tuple JSON file")->required();
  bench_cmd->add_option("--iters", iters, "Iterations")->capture_default_str();
  bench_cmd->add_option("--range", bench_range, "Exponent range")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Budget budget;
    try {
      budget = Budget::from_env(default_budget());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("HALLPOLY_BUDGET: ") + e.what());
    }
    BudgetScope scope(budget);
    if (*derive_cmd) return cmd_derive(n, reduce, bound, full, out, verbose);
    if (*table_cmd) return cmd_table(max_n, verbose);
    if (*check_cmd) return cmd_check(n, samples, range, zrange, seed, dir, use_reduced);
    if (*consistent_cmd) return cmd_consistent(tuple_file);
    if (*bench_cmd) return cmd_bench(n, tuple_file, iters, bench_range, bench_seed);
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "error: resource budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
