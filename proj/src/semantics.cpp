#include "sl1/semantics.hpp"

#include <cassert>

namespace sl1 {

namespace {

Loc lookup(const SLStructure& I, const Env& env, const std::string& x) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == x) return it->second;
  auto s = I.store.find(x);
  if (s == I.store.end()) throw std::invalid_argument("unbound variable '" + x + "'");
  return s->second;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

bool eval(const SLStructure& I, const std::map<Loc, Loc>& h, const SLFormula& f,
          Env& env, EvalLimits& lim) {
  switch (f.kind()) {
    case SLKind::False: return false;
    case SLKind::True: return true;
    case SLKind::Emp: return h.empty();
    case SLKind::Eq: return lookup(I, env, f.var1()) == lookup(I, env, f.var2());
    case SLKind::PointsTo: {
      Loc x = lookup(I, env, f.var1()), y = lookup(I, env, f.var2());
      return h.size() == 1 && h.begin()->first == x && h.begin()->second == y;
    }
    case SLKind::Hooks: {
      auto it = h.find(lookup(I, env, f.var1()));
      return it != h.end() && it->second == lookup(I, env, f.var2());
    }
    case SLKind::Alloc: return h.count(lookup(I, env, f.var1())) != 0;
    case SLKind::HeapGe:
      return !f.count().is_inf() && h.size() >= f.count().value();
    case SLKind::UnivGe: return I.universe.size() >= f.count().value();
    case SLKind::HeapGeUnivMinus:
      return h.size() + f.count().value() >= I.universe.size();
    case SLKind::Not: return !eval(I, h, f.lhs(), env, lim);
    case SLKind::And:
      return eval(I, h, f.lhs(), env, lim) && eval(I, h, f.rhs(), env, lim);
    case SLKind::Or:
      return eval(I, h, f.lhs(), env, lim) || eval(I, h, f.rhs(), env, lim);
    case SLKind::Star: {
      std::vector<std::pair<Loc, Loc>> cells(h.begin(), h.end());
      if (cells.size() > 30)
        throw std::runtime_error("heap too large for split enumeration");
      std::uint64_t total = std::uint64_t{1} << cells.size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        lim.charge();
        std::map<Loc, Loc> h1, h2;
        for (std::size_t i = 0; i < cells.size(); ++i)
          (mask >> i & 1 ? h1 : h2).insert(cells[i]);
        if (eval(I, h1, f.lhs(), env, lim) && eval(I, h2, f.rhs(), env, lim)) return true;
      }
      return false;
    }
    case SLKind::Wand: {
      // All finite extensions disjoint from h over I's own universe, in
      // lexicographic digit order (rightmost free location moves fastest).
      std::vector<Loc> free;
      for (Loc l : I.universe)
        if (!h.count(l)) free.push_back(l);
      std::uint32_t u = static_cast<std::uint32_t>(I.universe.size());
      std::vector<std::uint32_t> digits(free.size(), 0);
      std::uint64_t visited = 0;
      for (;;) {
        lim.charge();
        ++visited;
        std::map<Loc, Loc> ext;
        for (std::size_t i = 0; i < free.size(); ++i)
          if (digits[i] > 0) ext[free[i]] = I.universe[digits[i] - 1];
        if (eval(I, ext, f.lhs(), env, lim)) {
          std::map<Loc, Loc> combined = h;
          combined.insert(ext.begin(), ext.end());
          if (!eval(I, combined, f.rhs(), env, lim)) return false;
        }
        std::size_t i = free.size();
        while (i > 0 && digits[i - 1] == u) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
      }
      assert(visited == pow_u64(u + 1, free.size()));
      (void)visited;
      return true;
    }
    case SLKind::Exists:
    case SLKind::Forall: {
      bool universal = f.kind() == SLKind::Forall;
      for (Loc l : I.universe) {
        lim.charge();
        env.emplace_back(f.var1(), l);
        bool b = eval(I, h, f.body(), env, lim);
        env.pop_back();
        if (b != universal) return b;
      }
      return universal;
    }
  }
  throw std::logic_error("eval_sl: bad kind");
}

}  // namespace

bool eval_sl(const SLStructure& I, const SLFormula& f, const Env& env, EvalLimits& limits) {
  Env e = env;
  return eval(I, I.heap, f, e, limits);
}

bool eval_sl(const SLStructure& I, const SLFormula& f, const Env& env) {
  EvalLimits lim;
  return eval_sl(I, f, env, lim);
}

bool eval_sl(const SLStructure& I, const SLFormula& f) { return eval_sl(I, f, Env{}); }

namespace {

Loc lookup_fo(const FOStructure& M, const Env& env, const std::string& x) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == x) return it->second;
  auto s = M.store.find(x);
  if (s == M.store.end()) throw std::invalid_argument("unbound variable '" + x + "'");
  return s->second;
}

Loc eval_term(const FOStructure& M, const FOTerm& t, const Env& env) {
  if (t.kind() == TermKind::Var) return lookup_fo(M, env, t.var());
  Loc v = eval_term(M, t.arg(), env);
  auto it = M.fn.find(v);
  if (it == M.fn.end())
    throw std::invalid_argument("fn undefined on location " + std::to_string(v));
  return it->second;
}

bool eval(const FOStructure& M, const FOFormula& f, Env& env, EvalLimits& lim) {
  switch (f.kind()) {
    case FOKind::False: return false;
    case FOKind::True: return true;
    case FOKind::Eq: return eval_term(M, f.t1(), env) == eval_term(M, f.t2(), env);
    case FOKind::Pred: {
      auto it = M.preds.find(f.name());
      if (it == M.preds.end())
        throw std::invalid_argument("unknown predicate '" + f.name() + "'");
      return it->second.count(eval_term(M, f.t1(), env)) != 0;
    }
    case FOKind::Not: return !eval(M, f.lhs(), env, lim);
    case FOKind::And: return eval(M, f.lhs(), env, lim) && eval(M, f.rhs(), env, lim);
    case FOKind::Or: return eval(M, f.lhs(), env, lim) || eval(M, f.rhs(), env, lim);
    case FOKind::Exists:
    case FOKind::Forall: {
      bool universal = f.kind() == FOKind::Forall;
      for (Loc l : M.universe) {
        lim.charge();
        env.emplace_back(f.name(), l);
        bool b = eval(M, f.body(), env, lim);
        env.pop_back();
        if (b != universal) return b;
      }
      return universal;
    }
  }
  throw std::logic_error("eval_fo: bad kind");
}

}  // namespace

bool eval_fo(const FOStructure& M, const FOFormula& f, const Env& env, EvalLimits& limits) {
  Env e = env;
  return eval(M, f, e, limits);
}

bool eval_fo(const FOStructure& M, const FOFormula& f, const Env& env) {
  EvalLimits lim;
  return eval_fo(M, f, env, lim);
}

bool eval_fo(const FOStructure& M, const FOFormula& f) { return eval_fo(M, f, Env{}); }

}  // namespace sl1
