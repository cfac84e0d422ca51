#include "sl1/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sl1/print.hpp"
#include "sl1/reductions.hpp"
#include "sl1/semantics.hpp"
#include "sl1/testform.hpp"

namespace sl1 {

namespace {

constexpr std::uint64_t kNoLimit = UINT64_MAX;

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

bool contains_heap_ge_inf(const SLFormula& f) {
  switch (f.kind()) {
    case SLKind::HeapGe:
      return f.count().is_inf();
    case SLKind::Not:
    case SLKind::Exists:
    case SLKind::Forall:
      return contains_heap_ge_inf(f.lhs());
    case SLKind::And:
    case SLKind::Or:
    case SLKind::Star:
    case SLKind::Wand:
      return contains_heap_ge_inf(f.lhs()) || contains_heap_ge_inf(f.rhs());
    default:
      return false;
  }
}

struct EngineSpec {
  std::vector<std::string> exist_vars;
  SLFormula psi;  // universally wrapped matrix; free vars among exist_vars
  // Extra closed formula a witness must satisfy, when it differs from the
  // input. psi with the witness store is always re-checked; it costs the same
  // steps as the scan eval, unlike a closed re-check whose existential search
  // may revisit heavy subformulas.
  std::optional<SLFormula> closed_recheck;
  std::uint64_t bound = 0;
  std::uint64_t min_slack = 0;
  bool prop1 = false;  // matrix is a domain-independent test combination
  std::uint64_t prop1_cap = 0;
};

struct ShardOutcome {
  bool hit = false;
  std::vector<std::uint32_t> digits;
  std::map<Loc, Loc> heap;
  std::uint64_t visited = 0;
  std::uint64_t eval_steps = 0;
  bool incomplete = false;
};

// Scans the heaps whose first odometer digit lies in `first_digits`
// (ascending), in lexicographic order, stopping at the first satisfying heap
// or when the slice budget runs out. The first evaluation blowup ends the
// shard: the universe size can no longer be completed, and insisting on the
// remaining heaps would burn the full step budget on each.
void run_shard(std::uint32_t u, const std::map<std::string, Loc>& store,
               const SLFormula& psi, std::uint64_t min_slack,
               const std::vector<std::uint32_t>& first_digits, std::uint64_t slice,
               std::uint64_t eval_cap, ShardOutcome& out) {
  SLStructure I;
  I.universe.resize(u);
  for (std::uint32_t i = 0; i < u; ++i) I.universe[i] = i;
  I.store = store;
  for (std::uint32_t d : first_digits) {
    for (HeapEnumerator e(u, d); !e.done(); e.advance()) {
      if (e.slack() < min_slack) continue;
      if (out.visited >= slice) {
        out.incomplete = true;
        return;
      }
      ++out.visited;
      I.heap = e.heap();
      EvalLimits lim;
      lim.max_steps = eval_cap;
      bool ok = false;
      bool blown = false;
      try {
        ok = eval_sl(I, psi, {}, lim);
      } catch (const BudgetExceeded&) {
        blown = true;
      }
      out.eval_steps += lim.steps;
      if (blown) {
        out.incomplete = true;
        return;
      }
      if (ok) {
        out.hit = true;
        out.digits = e.digits();
        out.heap = e.heap();
        return;
      }
    }
  }
}

std::uint64_t witness_slack(const SLStructure& I) {
  return I.universe.size() - elems(I.heap).size();
}

// Drops spare locations (outside elems(heap) and the store image) from the
// universe until the slack is down to cap, then re-evaluates. Constructive
// version of the transfer argument behind the bound.
void assert_shrinkable(const SLStructure& wit, const EngineSpec& spec,
                       std::uint64_t cap) {
  std::set<Loc> keep(wit.universe.begin(), wit.universe.end());
  std::set<Loc> pinned = elems(wit.heap);
  for (const auto& [x, l] : wit.store) {
    (void)x;
    pinned.insert(l);
  }
  if (pinned.empty() && cap == 0) cap = 1;  // universes are nonempty
  std::uint64_t slack = witness_slack(wit);
  if (slack <= cap) return;
  std::uint64_t to_drop = slack - cap;
  for (auto it = wit.universe.rbegin(); it != wit.universe.rend() && to_drop > 0; ++it)
    if (!pinned.count(*it)) {
      keep.erase(*it);
      --to_drop;
    }
  check(to_drop == 0, "solver: cannot shed spare locations below the slack cap");
  SLStructure small;
  small.universe.assign(keep.begin(), keep.end());
  small.store = wit.store;
  small.heap = wit.heap;
  small.validate();
  check(eval_sl(small, spec.psi), "solver: witness does not survive slack trimming");
  if (spec.closed_recheck)
    check(eval_sl(small, *spec.closed_recheck),
          "solver: trimmed witness fails the closed re-check");
}

SatResult run_engine(const EngineSpec& spec, const SolverOptions& opts) {
  SatResult res;
  const std::uint64_t eval_cap =
      opts.max_eval_steps == 0 ? kNoLimit : opts.max_eval_steps;
  std::uint64_t remaining =
      opts.max_structures == 0 ? kNoLimit : opts.max_structures;
  const unsigned workers = std::max(1u, opts.workers);

  std::uint64_t last_complete = 0;
  for (std::uint64_t u = 1; u <= spec.bound; ++u) {
    bool u_incomplete = false;
    std::optional<SLStructure> witness;
    const auto stores = canonical_stores(spec.exist_vars, static_cast<std::uint32_t>(u));
    for (const auto& store : stores) {
      const unsigned w_eff =
          static_cast<unsigned>(std::min<std::uint64_t>(workers, u + 1));
      std::vector<std::vector<std::uint32_t>> digit_sets(w_eff);
      for (std::uint32_t d = 0; d <= u; ++d) digit_sets[d % w_eff].push_back(d);
      std::vector<ShardOutcome> outs(w_eff);
      std::vector<std::uint64_t> slices(w_eff, kNoLimit);
      if (remaining != kNoLimit)
        for (unsigned w = 0; w < w_eff; ++w)
          slices[w] = remaining / w_eff + (w < remaining % w_eff ? 1 : 0);

      std::vector<std::thread> threads;
      for (unsigned w = 1; w < w_eff; ++w)
        threads.emplace_back(run_shard, static_cast<std::uint32_t>(u),
                             std::cref(store), std::cref(spec.psi), spec.min_slack,
                             std::cref(digit_sets[w]), slices[w], eval_cap,
                             std::ref(outs[w]));
      run_shard(static_cast<std::uint32_t>(u), store, spec.psi, spec.min_slack,
                digit_sets[0], slices[0], eval_cap, outs[0]);
      for (auto& t : threads) t.join();

      const ShardOutcome* best = nullptr;
      for (const auto& o : outs) {
        res.stats.structures_visited += o.visited;
        res.stats.eval_steps += o.eval_steps;
        if (remaining != kNoLimit) remaining -= std::min(remaining, o.visited);
        if (o.incomplete) u_incomplete = true;
        if (o.hit && (!best || o.digits < best->digits)) best = &o;
      }
      if (best) {
        SLStructure wit;
        wit.universe.resize(u);
        for (std::uint32_t i = 0; i < u; ++i) wit.universe[i] = i;
        wit.store = store;
        wit.heap = best->heap;
        witness = std::move(wit);
        break;
      }
      if (u_incomplete) break;
    }
    if (witness) {
      check(eval_sl(*witness, spec.psi), "solver: witness fails re-validation");
      if (spec.closed_recheck)
        check(eval_sl(*witness, *spec.closed_recheck),
              "solver: witness fails the closed re-check");
      if (spec.prop1) assert_shrinkable(*witness, spec, spec.prop1_cap);
      res.status = SatStatus::Sat;
      res.sl_witness = std::move(witness);
      res.bound_used = u;
      return res;
    }
    if (u_incomplete) {
      res.status = SatStatus::BoundedUnknown;
      res.bound_used = last_complete;
      return res;
    }
    last_complete = u;
  }
  res.status = SatStatus::Unsat;
  res.bound_used = last_complete;
  return res;
}

struct BsrParts {
  std::vector<std::string> exist_vars;
  std::vector<std::string> forall_vars;
  SLFormula matrix;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
};

BsrParts split_bsr(const SLFormula& f, const char* who) {
  PrefixClass pc = classify_prefix(f);
  if (pc.tag != PrefixTag::BSR && pc.tag != PrefixTag::QuantifierFree)
    throw std::invalid_argument(std::string(who) +
                                ": prefix is not exists*forall* (got " + pc.str() +
                                ")");
  PrenexParts parts = prenex_parts(f);
  BsrParts out;
  out.matrix = parts.matrix;
  for (const auto& [q, v] : parts.prefix)
    if (q == 'E')
      out.exist_vars.push_back(v);
    else
      out.forall_vars.push_back(v);
  out.n = out.exist_vars.size();
  out.m = out.forall_vars.size();
  return out;
}

SLFormula wrap_foralls(SLFormula matrix, const std::vector<std::string>& vars) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    matrix = SLFormula::forall(*it, matrix);
  return matrix;
}

std::uint64_t bound_formula(std::uint64_t N, std::uint64_t n, std::uint64_t m) {
  return std::max({2 * N + 3 * n + m, 2 * m * (n + 2 * N + 1), n + m + 1});
}

}  // namespace

std::uint64_t small_model_bound(const SLFormula& f) {
  BsrParts p = split_bsr(f, "small_model_bound");
  return bound_formula(conservative_maxn(p.matrix), p.n, p.m);
}

SatResult check_finite_sat(const SLFormula& f, const SolverOptions& opts) {
  if (!free_vars(f).empty())
    throw std::invalid_argument("check_finite_sat: formula is not closed");
  if (contains_heap_ge_inf(f))
    throw std::invalid_argument("check_finite_sat: |h| >= inf is not accepted");
  BsrParts p = split_bsr(f, "check_finite_sat");

  EngineSpec spec;
  spec.exist_vars = p.exist_vars;
  spec.psi = wrap_foralls(p.matrix, p.forall_vars);
  spec.bound = bound_formula(conservative_maxn(p.matrix), p.n, p.m);
  SLFormula desugared = desugar_heap_atoms(p.matrix);
  spec.prop1 = is_test_combination(desugared, /*domain_independent_only=*/true);
  spec.prop1_cap = p.n + p.m;
  return run_engine(spec, opts);
}

SatResult check_infinite_sat(const SLFormula& f, const SolverOptions& opts) {
  if (!free_vars(f).empty())
    throw std::invalid_argument("check_infinite_sat: formula is not closed");
  if (contains_heap_ge_inf(f))
    throw std::invalid_argument("check_infinite_sat: |h| >= inf is not accepted");
  PrenexParts parts = prenex_parts(f);
  SLFormula desugared = desugar_heap_atoms(parts.matrix);
  if (!is_test_combination(desugared))
    throw std::invalid_argument("check_infinite_sat: matrix is not a test combination: " +
                                print_sl(parts.matrix));
  PrefixClass pc = classify_prefix(f);
  if (pc.tag != PrefixTag::BSR && pc.tag != PrefixTag::QuantifierFree) {
    SatResult res;
    res.status = SatStatus::BoundedUnknown;
    return res;
  }

  BsrParts p = split_bsr(f, "check_infinite_sat");
  SLFormula norm = normalize_for_infinite(desugared);
  const std::uint64_t slack_vars = p.n + p.m;  // one spare location per quantifier

  EngineSpec spec;
  spec.exist_vars = p.exist_vars;
  spec.psi = wrap_foralls(norm, p.forall_vars);
  spec.closed_recheck = infinite_to_finite(f);
  spec.min_slack = slack_vars;
  spec.bound = bound_formula(conservative_maxn(norm), p.n + slack_vars, p.m);
  spec.prop1 = true;  // normalized matrix is domain independent
  spec.prop1_cap = slack_vars == 0 ? 0 : 2 * slack_vars + 2;
  SatResult res = run_engine(spec, opts);
  if (res.status == SatStatus::Sat) res.inflatable = true;
  return res;
}

SatResult oracle_sat(const SLFormula& f, std::uint64_t max_universe,
                     const SolverOptions& opts) {
  SatResult res;
  const std::uint64_t eval_cap =
      opts.max_eval_steps == 0 ? kNoLimit : opts.max_eval_steps;
  std::uint64_t remaining =
      opts.max_structures == 0 ? kNoLimit : opts.max_structures;
  std::set<std::string> fv_set = free_vars(f);
  std::vector<std::string> fv(fv_set.begin(), fv_set.end());

  for (std::uint64_t u = 1; u <= max_universe; ++u) {
    bool incomplete = false;
    std::optional<SLStructure> witness;
    enumerate_structures(static_cast<std::uint32_t>(u), fv,
                         [&](const SLStructure& I) {
                           if (remaining == 0) {
                             incomplete = true;
                             return false;
                           }
                           --remaining;
                           ++res.stats.structures_visited;
                           EvalLimits lim;
                           lim.max_steps = eval_cap;
                           bool ok = false;
                           bool blown = false;
                           try {
                             ok = eval_sl(I, f, {}, lim);
                           } catch (const BudgetExceeded&) {
                             blown = true;
                           }
                           res.stats.eval_steps += lim.steps;
                           if (blown) {
                             incomplete = true;
                             return false;
                           }
                           if (ok) {
                             witness = I;
                             return false;
                           }
                           return true;
                         });
    if (witness) {
      res.status = SatStatus::Sat;
      res.sl_witness = std::move(witness);
      res.bound_used = u;
      return res;
    }
    if (incomplete) {
      res.status = SatStatus::BoundedUnknown;
      res.bound_used = u - 1;
      return res;
    }
    res.bound_used = u;
  }
  res.status = SatStatus::BoundedUnknown;
  return res;
}

namespace {

void collect_fo_preds(const FOFormula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FOKind::Pred:
      out.insert(f.name());
      return;
    case FOKind::Not:
    case FOKind::Exists:
    case FOKind::Forall:
      collect_fo_preds(f.lhs(), out);
      return;
    case FOKind::And:
    case FOKind::Or:
      collect_fo_preds(f.lhs(), out);
      collect_fo_preds(f.rhs(), out);
      return;
    default:
      return;
  }
}

}  // namespace

SatResult oracle_sat(const FOFormula& f, std::uint64_t max_universe,
                     const SolverOptions& opts) {
  SatResult res;
  const std::uint64_t eval_cap =
      opts.max_eval_steps == 0 ? kNoLimit : opts.max_eval_steps;
  std::uint64_t remaining =
      opts.max_structures == 0 ? kNoLimit : opts.max_structures;
  std::set<std::string> fv_set = free_vars(f);
  std::vector<std::string> fv(fv_set.begin(), fv_set.end());
  std::set<std::string> pred_set;
  collect_fo_preds(f, pred_set);
  std::vector<std::string> preds(pred_set.begin(), pred_set.end());

  for (std::uint64_t u = 1; u <= max_universe; ++u) {
    check(u < 64, "oracle_sat: universe too large for predicate enumeration");
    bool incomplete = false;
    FOStructure M;
    M.universe.resize(u);
    for (std::uint32_t i = 0; i < u; ++i) M.universe[i] = i;

    for (const auto& store : canonical_stores(fv, static_cast<std::uint32_t>(u))) {
      M.store = store;
      std::vector<std::uint32_t> fn_digits(u, 0);
      bool fn_done = false;
      while (!fn_done) {
        for (std::uint32_t i = 0; i < u; ++i) M.fn[i] = fn_digits[i];
        std::vector<std::uint64_t> masks(preds.size(), 0);
        bool masks_done = false;
        while (!masks_done) {
          if (remaining == 0) {
            incomplete = true;
            break;
          }
          --remaining;
          ++res.stats.structures_visited;
          M.preds.clear();
          for (std::size_t k = 0; k < preds.size(); ++k) {
            std::set<Loc>& s = M.preds[preds[k]];
            for (std::uint32_t i = 0; i < u; ++i)
              if (masks[k] >> i & 1) s.insert(i);
          }
          EvalLimits lim;
          lim.max_steps = eval_cap;
          bool ok = false;
          bool blown = false;
          try {
            ok = eval_fo(M, f, {}, lim);
          } catch (const BudgetExceeded&) {
            blown = true;
          }
          res.stats.eval_steps += lim.steps;
          if (blown) {
            incomplete = true;
            break;
          }
          if (ok) {
            res.status = SatStatus::Sat;
            res.fo_witness = M;
            res.bound_used = u;
            return res;
          }
          // advance pred masks
          masks_done = true;
          for (std::size_t k = masks.size(); k-- > 0;) {
            if (++masks[k] < (std::uint64_t{1} << u)) {
              masks_done = false;
              break;
            }
            masks[k] = 0;
          }
          if (preds.empty()) masks_done = true;
        }
        if (incomplete) break;
        // advance fn digits
        fn_done = true;
        for (std::size_t i = fn_digits.size(); i-- > 0;) {
          if (++fn_digits[i] < u) {
            fn_done = false;
            break;
          }
          fn_digits[i] = 0;
        }
      }
      if (incomplete) break;
    }
    if (incomplete) {
      res.status = SatStatus::BoundedUnknown;
      res.bound_used = u - 1;
      return res;
    }
    res.bound_used = u;
  }
  res.status = SatStatus::BoundedUnknown;
  return res;
}

bool validate_witness(const SLFormula& f, const SLStructure& wit,
                      std::uint64_t max_eval_steps) {
  BsrParts p = split_bsr(f, "validate_witness");
  SLFormula psi = wrap_foralls(p.matrix, p.forall_vars);
  for (const auto& v : p.exist_vars)
    if (!wit.store.count(v))
      throw std::invalid_argument("validate_witness: store misses " + v);
  EvalLimits lim;
  lim.max_steps = max_eval_steps == 0 ? kNoLimit : max_eval_steps;
  return eval_sl(wit, psi, {}, lim);
}

}  // namespace sl1
