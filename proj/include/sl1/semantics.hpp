#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl1/ast.hpp"
#include "sl1/structures.hpp"

namespace sl1 {

// Thrown when an evaluation exceeds its step budget.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("evaluation budget exceeded") {}
};

// Steps are charged per heap split, per wand extension and per quantifier
// instantiation.
struct EvalLimits {
  std::uint64_t max_steps = UINT64_MAX;
  std::uint64_t steps = 0;

  void charge() {
    if (++steps > max_steps) throw BudgetExceeded();
  }
};

// Quantifier bindings; later entries shadow earlier ones and the whole
// environment shadows the store.
using Env = std::vector<std::pair<std::string, Loc>>;

bool eval_sl(const SLStructure& I, const SLFormula& f);
bool eval_sl(const SLStructure& I, const SLFormula& f, const Env& env);
bool eval_sl(const SLStructure& I, const SLFormula& f, const Env& env, EvalLimits& limits);

bool eval_fo(const FOStructure& M, const FOFormula& f);
bool eval_fo(const FOStructure& M, const FOFormula& f, const Env& env);
bool eval_fo(const FOStructure& M, const FOFormula& f, const Env& env, EvalLimits& limits);

}  // namespace sl1
