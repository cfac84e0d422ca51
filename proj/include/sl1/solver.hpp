#pragma once

#include <cstdint>
#include <optional>

#include "sl1/ast.hpp"
#include "sl1/structures.hpp"

namespace sl1 {

enum class SatStatus : std::uint8_t { Sat, Unsat, BoundedUnknown };

struct SolveStats {
  std::uint64_t structures_visited = 0;
  std::uint64_t eval_steps = 0;
};

struct SatResult {
  SatStatus status = SatStatus::BoundedUnknown;
  std::optional<SLStructure> sl_witness;
  std::optional<FOStructure> fo_witness;
  // Sat: universe size of the witness. Unsat: the exhausted bound.
  // BoundedUnknown: largest universe size fully explored.
  std::uint64_t bound_used = 0;
  // Set on Sat results of the infinite check: the witness stays a model when
  // fresh isolated locations are added.
  bool inflatable = false;
  SolveStats stats;
};

struct SolverOptions {
  std::uint64_t max_structures = 0;  // total structure budget; 0 = unlimited
  std::uint64_t max_eval_steps = 0;  // per-structure evaluation budget; 0 = unlimited
  unsigned workers = 1;              // heap-scan shards per universe size
};
// Exhausting max_structures, or a single evaluation hitting max_eval_steps,
// abandons the universe size under scan (it can no longer be declared
// complete) and the result degrades to BoundedUnknown unless a witness was
// already in hand.

// max(2N + 3n + m, 2m(n + 2N + 1), n + m + 1) for a closed exists^n forall^m
// formula, N = conservative_maxn of the matrix. Throws on other prefixes.
std::uint64_t small_model_bound(const SLFormula& f);

// Complete decision procedure for closed exists*forall* formulas: scans
// canonical structures with 1 <= |U| <= small_model_bound(f), existentials
// bound by canonical stores, universals evaluated directly. Unsat only after
// the full sweep; exhausting a budget yields BoundedUnknown instead.
// Rejects |h| >= inf atoms.
SatResult check_finite_sat(const SLFormula& f, const SolverOptions& opts = {});

// Satisfiability of a closed prenex formula over infinite universes, decided
// finitely: universe-bound atoms are normalized away and models must keep
// one spare location outside elems(heap) per quantifier (the lambda_formula
// side condition, folded into the search). The witness satisfies
// infinite_to_finite(f). Prefixes outside exists*forall* yield
// BoundedUnknown.
SatResult check_infinite_sat(const SLFormula& f, const SolverOptions& opts = {});

// Bounded brute force over every canonical structure with |U| <=
// max_universe, for any formula shape (free variables are read
// existentially). Never returns Unsat.
SatResult oracle_sat(const SLFormula& f, std::uint64_t max_universe,
                     const SolverOptions& opts = {});
SatResult oracle_sat(const FOFormula& f, std::uint64_t max_universe,
                     const SolverOptions& opts = {});

// True when wit, with its store binding the existential prefix of the closed
// exists*forall* formula f, satisfies the universally wrapped matrix. This is
// the check a Sat witness of check_finite_sat must pass; keeping the store
// avoids re-searching the existential space. max_eval_steps = 0 means
// unlimited, otherwise BudgetExceeded propagates.
bool validate_witness(const SLFormula& f, const SLStructure& wit,
                      std::uint64_t max_eval_steps = 0);

}  // namespace sl1
