#include "hallpoly/budget.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "hallpoly/errors.hpp"

namespace hallpoly {

struct BudgetScope::State {
  Budget budget;
  std::chrono::steady_clock::time_point deadline;
  std::size_t pairs = 0;
  std::uint32_t ticks = 0;
  State* previous = nullptr;
};

namespace {
thread_local BudgetScope::State* active = nullptr;
}

Budget Budget::parse(const std::string& spec) {
  Budget b;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("budget item needs key=value: " + item);
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    std::size_t used = 0;
    const double number = std::stod(value, &used);
    if (used != value.size() || !(number >= 0)) throw std::invalid_argument("bad budget value: " + item);
    if (key == "seconds") b.wall_time = std::chrono::duration<double>(number);
    else if (key == "terms") b.max_terms = static_cast<std::size_t>(number);
    else if (key == "pairs") b.max_pairs = static_cast<std::size_t>(number);
    else throw std::invalid_argument("unknown budget key: " + key);
  }
  return b;
}

Budget Budget::from_env(const Budget& fallback) {
  const char* env = std::getenv("HALLPOLY_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  return parse(env);
}

BudgetScope::BudgetScope(const Budget& budget) : previous_(active) {
  auto* s = new State{budget, {}, 0, 0, previous_};
  if (budget.wall_time)
    s->deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget.wall_time);
  active = s;
}

BudgetScope::~BudgetScope() {
  delete active;
  active = previous_;
}

void budget_tick() {
  if (active == nullptr || !active->budget.wall_time) return;
  if ((++active->ticks & 0x3f) != 0) return;
  if (std::chrono::steady_clock::now() > active->deadline)
    throw ResourceLimitExceeded("wall-clock budget of " +
                                std::to_string(active->budget.wall_time->count()) +
                                " s exhausted");
}

void budget_check_terms(std::size_t terms) {
  if (active == nullptr || !active->budget.max_terms) return;
  if (terms > *active->budget.max_terms)
    throw ResourceLimitExceeded("term budget exhausted: polynomial with " + std::to_string(terms) +
                                " terms exceeds " + std::to_string(*active->budget.max_terms));
}

void budget_count_pair() {
  if (active == nullptr) return;
  ++active->pairs;
  if (active->budget.max_pairs && active->pairs > *active->budget.max_pairs)
    throw ResourceLimitExceeded("S-pair budget of " + std::to_string(*active->budget.max_pairs) +
                                " reductions exhausted");
  budget_tick();
}

}  // namespace hallpoly
