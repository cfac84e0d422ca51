#pragma once

// Random inputs shared by the unit tests and the acceptance harness. All
// generators draw from sl1::Rng so runs are reproducible from a seed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sl1/ast.hpp"
#include "sl1/contraction.hpp"
#include "sl1/fuzz.hpp"
#include "sl1/structures.hpp"

namespace gen {

inline std::string pick_var(sl1::Rng& rng, const std::vector<std::string>& vars) {
  return vars[rng.below(vars.size())];
}

// Structure on universe {0..u-1} with a random heap and a random total store
// over vars.
inline sl1::SLStructure random_structure(sl1::Rng& rng, std::uint32_t max_u,
                                         const std::vector<std::string>& vars) {
  sl1::SLStructure I;
  std::uint32_t u = 1 + static_cast<std::uint32_t>(rng.below(max_u));
  for (std::uint32_t i = 0; i < u; ++i) I.universe.push_back(i);
  for (const auto& v : vars) I.store[v] = static_cast<sl1::Loc>(rng.below(u));
  for (std::uint32_t i = 0; i < u; ++i) {
    std::uint64_t d = rng.below(u + 1);
    if (d > 0) I.heap[i] = static_cast<sl1::Loc>(d - 1);
  }
  I.validate();
  return I;
}

// Boolean combination of test atoms over vars; only domain-independent atoms
// when di is set.
inline sl1::SLFormula random_test_matrix(sl1::Rng& rng,
                                         const std::vector<std::string>& vars,
                                         std::uint64_t budget, bool di) {
  using F = sl1::SLFormula;
  if (budget <= 1 || rng.below(3) == 0) {
    for (;;) {
      switch (rng.below(8)) {
        case 0:
          return F::tt();
        case 1:
          return F::ff();
        case 2:
          if (vars.empty()) break;
          return F::eq(pick_var(rng, vars), pick_var(rng, vars));
        case 3:
          if (vars.empty()) break;
          return F::hooks(pick_var(rng, vars), pick_var(rng, vars));
        case 4:
          if (vars.empty()) break;
          return F::alloc(pick_var(rng, vars));
        case 5:
          return F::heap_ge(rng.below(3));
        case 6:
          if (di) break;
          return F::univ_ge(rng.below(3));
        default:
          if (di) break;
          return F::heap_ge_univ_minus(rng.below(3));
      }
    }
  }
  if (budget == 2 || rng.below(4) == 0)
    return F::negation(random_test_matrix(rng, vars, budget - 1, di));
  std::uint64_t rem = budget - 1;
  std::uint64_t lb = 1 + rng.below(rem - 1);
  F l = random_test_matrix(rng, vars, lb, di);
  F r = random_test_matrix(rng, vars, rem - lb, di);
  return rng.below(2) ? F::conj(l, r) : F::disj(l, r);
}

// Prenex formula with m quantifiers (any alternation) over a
// domain-independent test matrix; free variables drawn from xs.
inline sl1::SLFormula random_prenex_di(sl1::Rng& rng,
                                       const std::vector<std::string>& xs,
                                       std::uint64_t m, std::uint64_t budget) {
  std::vector<std::string> vars = xs;
  std::vector<std::pair<char, std::string>> prefix;
  for (std::uint64_t i = 1; i <= m; ++i) {
    std::string v = "q" + std::to_string(i);
    prefix.emplace_back(rng.below(2) ? 'E' : 'A', v);
    vars.push_back(v);
  }
  sl1::SLFormula f = random_test_matrix(rng, vars, budget, /*di=*/true);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    f = it->first == 'E' ? sl1::SLFormula::exists(it->second, f)
                         : sl1::SLFormula::forall(it->second, f);
  return f;
}

// Test combination with quantifiers nested anywhere (binder depth <= 2); used
// to exercise homomorphic translation.
inline sl1::SLFormula random_quantified_tc(sl1::Rng& rng,
                                           std::vector<std::string> vars,
                                           std::uint64_t budget,
                                           std::uint64_t binders_left) {
  using F = sl1::SLFormula;
  if (binders_left > 0 && budget >= 3 && rng.below(4) == 0) {
    std::string v = "b" + std::to_string(binders_left);
    vars.push_back(v);
    F body = random_quantified_tc(rng, vars, budget - 1, binders_left - 1);
    return rng.below(2) ? F::exists(v, body) : F::forall(v, body);
  }
  if (budget <= 1 || rng.below(3) == 0)
    return random_test_matrix(rng, vars, 1, /*di=*/false);
  if (budget == 2 || rng.below(4) == 0)
    return F::negation(random_quantified_tc(rng, vars, budget - 1, binders_left));
  std::uint64_t rem = budget - 1;
  std::uint64_t lb = 1 + rng.below(rem - 1);
  F l = random_quantified_tc(rng, vars, lb, binders_left);
  F r = random_quantified_tc(rng, vars, rem - lb, binders_left);
  return rng.below(2) ? F::conj(l, r) : F::disj(l, r);
}

// Random FO term over vars with up to `depth` nested f-applications.
inline sl1::FOTerm random_fo_term(sl1::Rng& rng,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t depth) {
  sl1::FOTerm t = sl1::FOTerm::mkvar(pick_var(rng, vars));
  std::uint64_t wraps = rng.below(depth + 1);
  for (std::uint64_t i = 0; i < wraps; ++i) t = sl1::FOTerm::app(t);
  return t;
}

inline sl1::FOFormula random_fo_formula(sl1::Rng& rng,
                                        std::vector<std::string> vars,
                                        std::uint64_t budget,
                                        std::uint64_t binders_left) {
  using F = sl1::FOFormula;
  if (binders_left > 0 && budget >= 3 && rng.below(4) == 0) {
    std::string v = "w" + std::to_string(binders_left);
    vars.push_back(v);
    F body = random_fo_formula(rng, vars, budget - 1, binders_left - 1);
    return rng.below(2) ? F::exists(v, body) : F::forall(v, body);
  }
  if (budget <= 1 || rng.below(3) == 0) {
    switch (rng.below(4)) {
      case 0:
        return F::tt();
      case 1:
        return F::ff();
      case 2:
        return F::pred(rng.below(2) ? "P" : "Q", random_fo_term(rng, vars, 2));
      default:
        return F::eq(random_fo_term(rng, vars, 2), random_fo_term(rng, vars, 2));
    }
  }
  if (budget == 2 || rng.below(4) == 0)
    return F::negation(random_fo_formula(rng, vars, budget - 1, binders_left));
  std::uint64_t rem = budget - 1;
  std::uint64_t lb = 1 + rng.below(rem - 1);
  F l = random_fo_formula(rng, vars, lb, binders_left);
  F r = random_fo_formula(rng, vars, rem - lb, binders_left);
  return rng.below(2) ? F::conj(l, r) : F::disj(l, r);
}

struct EquivalentPair {
  sl1::SLStructure a;
  sl1::SLStructure b;
};

// Pair of structures with identical heap that differ only in the placement
// and number of locations outside elems(heap): store values inside
// elems(heap) are shared, values outside are repositioned injectively. Both
// sides keep at least n + |X| spare locations, so they are (X, n)-equivalent
// by construction.
inline EquivalentPair random_equivalent_pair(sl1::Rng& rng,
                                             const std::vector<std::string>& X,
                                             std::uint64_t n) {
  sl1::SLStructure base;
  std::uint32_t heap_cells = static_cast<std::uint32_t>(rng.below(4));
  std::uint32_t core = std::max<std::uint32_t>(1, heap_cells + 1);
  for (std::uint32_t i = 0; i < core; ++i) base.universe.push_back(i);
  for (std::uint32_t i = 0; i < heap_cells; ++i)
    base.heap[i] = static_cast<sl1::Loc>(rng.below(core));
  std::set<sl1::Loc> el = sl1::elems(base.heap);

  std::uint64_t need = n + X.size();
  std::uint64_t spare_a = need + rng.below(3);
  std::uint64_t spare_b = need + rng.below(3);
  sl1::SLStructure a = base, b = base;
  std::vector<sl1::Loc> fresh_a, fresh_b;
  sl1::Loc next = core;
  while (a.universe.size() < el.size() + spare_a || fresh_a.empty()) {
    if (!el.count(next)) {
      a.universe.push_back(next);
      fresh_a.push_back(next);
    }
    ++next;
  }
  while (b.universe.size() < el.size() + spare_b || fresh_b.size() < X.size() ||
         fresh_b.empty()) {
    b.universe.push_back(next);
    fresh_b.push_back(next);
    ++next;
  }
  // Core locations not in elems(heap) count as spare too; trim is not needed,
  // both sides satisfy the floor.
  std::map<sl1::Loc, sl1::Loc> reloc;  // a-spare value -> b-spare value
  std::uint64_t used = 0;
  for (const auto& x : X) {
    bool inside = rng.below(2) == 0 && !el.empty();
    if (inside) {
      auto it = el.begin();
      std::advance(it, rng.below(el.size()));
      a.store[x] = *it;
      b.store[x] = *it;
    } else {
      sl1::Loc va = fresh_a[rng.below(fresh_a.size())];
      a.store[x] = va;
      if (!reloc.count(va)) reloc[va] = fresh_b[used++];
      b.store[x] = reloc[va];
    }
  }
  a.validate();
  b.validate();
  return {a, b};
}

// Maximum constant occurring in a cardinality atom of a test combination.
inline std::uint64_t matrix_maxn(const sl1::SLFormula& f) {
  switch (f.kind()) {
    case sl1::SLKind::HeapGe:
      return f.count().is_inf() ? 0 : f.count().value();
    case sl1::SLKind::UnivGe:
    case sl1::SLKind::HeapGeUnivMinus:
      return f.count().value();
    case sl1::SLKind::Not:
      return matrix_maxn(f.body());
    case sl1::SLKind::And:
    case sl1::SLKind::Or:
      return std::max(matrix_maxn(f.lhs()), matrix_maxn(f.rhs()));
    default:
      return 0;
  }
}

struct TransferInstance {
  sl1::SLStructure I;
  std::set<std::string> X;
  std::set<sl1::Loc> L;
  sl1::SLFormula psi;  // exists y1..ym . matrix
  std::uint64_t m = 0;
  std::uint64_t maxn = 0;
};

// Dense structure plus a prenex-existential test combination whose frontier
// preconditions hold: |L n dom(h)| = maxn via choose_L. Returns nothing when
// the heap is too small for that choice.
inline std::optional<TransferInstance> transfer_instance(sl1::Rng& rng) {
  using F = sl1::SLFormula;
  TransferInstance inst;
  std::uint64_t n = 1 + rng.below(2);
  inst.m = 1 + rng.below(2);

  std::uint32_t u = 4 + static_cast<std::uint32_t>(rng.below(5));
  for (std::uint32_t i = 0; i < u; ++i) inst.I.universe.push_back(i);
  for (std::uint32_t i = 0; i < u; ++i)
    if (rng.below(4) < 3) inst.I.heap[i] = static_cast<sl1::Loc>(rng.below(u));

  std::vector<std::string> vars;
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::string x = "x" + std::to_string(i);
    inst.X.insert(x);
    inst.I.store[x] = static_cast<sl1::Loc>(rng.below(u));
    vars.push_back(x);
  }
  std::vector<std::string> ys;
  for (std::uint64_t i = 1; i <= inst.m; ++i) {
    ys.push_back("y" + std::to_string(i));
    vars.push_back(ys.back());
  }
  inst.I.validate();

  F matrix = random_test_matrix(rng, vars, 8 + rng.below(5), /*di=*/false);
  inst.maxn = matrix_maxn(matrix);
  auto L = sl1::choose_L(inst.I, inst.X, inst.maxn);
  if (!L) return std::nullopt;
  inst.L = *L;

  // Transfer needs no heap edge entering the closure from outside, which is
  // what restriction output looks like; redirect any such edge to a self
  // loop. Leaves dom(h), the closure and L untouched.
  sl1::FrontierSets fs = sl1::frontier_sets(inst.I, inst.X, inst.L);
  for (auto& [p, q] : inst.I.heap)
    if (!fs.vbar.count(p) && fs.vbar.count(q)) q = p;

  inst.psi = matrix;
  for (auto it = ys.rbegin(); it != ys.rend(); ++it)
    inst.psi = F::exists(*it, inst.psi);
  return inst;
}

}  // namespace gen
