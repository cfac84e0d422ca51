#include "sl1/fuzz.hpp"

#include <sstream>

#include "sl1/print.hpp"
#include "sl1/solver.hpp"

namespace sl1 {

namespace {

std::string pick(Rng& rng, const std::vector<std::string>& vars) {
  return vars[rng.below(vars.size())];
}

SLFormula random_atom(Rng& rng, const std::vector<std::string>& vars,
                      std::uint64_t maxc) {
  for (;;) {
    switch (rng.below(10)) {
      case 0:
        return SLFormula::tt();
      case 1:
        return SLFormula::ff();
      case 2:
        return SLFormula::emp();
      case 3:
        if (vars.empty()) break;
        return SLFormula::eq(pick(rng, vars), pick(rng, vars));
      case 4:
        if (vars.empty()) break;
        return SLFormula::points_to(pick(rng, vars), pick(rng, vars));
      case 5:
        if (vars.empty()) break;
        return SLFormula::hooks(pick(rng, vars), pick(rng, vars));
      case 6:
        if (vars.empty()) break;
        return SLFormula::alloc(pick(rng, vars));
      case 7:
        return SLFormula::heap_ge(NatInf(rng.below(maxc + 1)));
      case 8:
        return SLFormula::univ_ge(rng.below(maxc + 1));
      default:
        return SLFormula::heap_ge_univ_minus(rng.below(maxc + 1));
    }
  }
}

SLFormula random_matrix(Rng& rng, const std::vector<std::string>& vars,
                        std::uint64_t budget, std::uint64_t maxc) {
  if (budget <= 1 || rng.below(3) == 0) return random_atom(rng, vars, maxc);
  if (budget == 2 || rng.below(5) == 0)
    return SLFormula::negation(random_matrix(rng, vars, budget - 1, maxc));
  std::uint64_t rem = budget - 1;
  std::uint64_t lb = 1 + rng.below(rem - 1);
  SLFormula l = random_matrix(rng, vars, lb, maxc);
  SLFormula r = random_matrix(rng, vars, rem - lb, maxc);
  switch (rng.below(4)) {
    case 0:
      return SLFormula::conj(l, r);
    case 1:
      return SLFormula::disj(l, r);
    case 2:
      return SLFormula::star(l, r);
    default:
      return SLFormula::wand(l, r);
  }
}

}  // namespace

SLFormula random_bsr_sentence(Rng& rng, const FuzzConfig& cfg) {
  std::uint64_t q = rng.below(cfg.max_quantifiers + 1);
  std::uint64_t n = rng.below(q + 1);
  std::uint64_t m = q - n;
  std::vector<std::string> vars;
  for (std::uint64_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (std::uint64_t i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
  SLFormula f = random_matrix(rng, vars, cfg.max_matrix_nodes, cfg.max_constant);
  for (std::uint64_t i = m; i-- > 0;)
    f = SLFormula::forall("y" + std::to_string(i + 1), f);
  for (std::uint64_t i = n; i-- > 0;)
    f = SLFormula::exists("x" + std::to_string(i + 1), f);
  return f;
}

FuzzReport fuzz_compare(std::uint64_t seed, std::uint64_t count,
                        const FuzzConfig& cfg) {
  Rng rng(seed);
  FuzzReport rep;
  rep.count = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    SLFormula f = random_bsr_sentence(rng, cfg);
    SolverOptions so;
    so.max_structures = cfg.solver_budget;
    so.max_eval_steps = cfg.eval_budget;
    SatResult r = check_finite_sat(f, so);
    SolverOptions oo;
    oo.max_structures = cfg.oracle_budget;
    oo.max_eval_steps = cfg.eval_budget;
    SatResult o = oracle_sat(f, small_model_bound(f) + 2, oo);
    auto flag = [&](std::string detail) {
      rep.disagreements.push_back({i, print_sl(f), std::move(detail)});
    };
    switch (r.status) {
      case SatStatus::Sat: {
        ++rep.sat;
        ++rep.witness_checks;
        if (!r.sl_witness || !validate_witness(f, *r.sl_witness, cfg.eval_budget)) {
          flag("sat witness fails validation");
          break;
        }
        std::uint64_t wsize = r.sl_witness->universe.size();
        if (o.status != SatStatus::Sat && o.bound_used >= wsize)
          flag("oracle completed size " + std::to_string(o.bound_used) +
               " without finding the size-" + std::to_string(wsize) + " model");
        break;
      }
      case SatStatus::Unsat:
        ++rep.unsat;
        if (o.status == SatStatus::Sat)
          flag("solver unsat, oracle model at size " +
               std::to_string(o.bound_used));
        break;
      case SatStatus::BoundedUnknown:
        ++rep.unknown;
        if (o.status == SatStatus::Sat && o.sl_witness &&
            o.sl_witness->universe.size() <= r.bound_used)
          flag("oracle model at size " + std::to_string(o.bound_used) +
               " inside the solver's completed range " +
               std::to_string(r.bound_used));
        break;
    }
  }
  return rep;
}

std::string FuzzReport::text() const {
  std::ostringstream os;
  os << "formulas " << count << "\n";
  os << "sat " << sat << "\n";
  os << "unsat " << unsat << "\n";
  os << "unknown " << unknown << "\n";
  os << "witness-checks " << witness_checks << "\n";
  os << "disagreements " << disagreements.size() << "\n";
  for (const auto& d : disagreements)
    os << "disagreement " << d.index << ": " << d.detail << "\n  " << d.formula
       << "\n";
  return os.str();
}

}  // namespace sl1
