#include "sl1/reductions.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sl1/print.hpp"
#include "sl1/testform.hpp"

namespace sl1 {

namespace {

std::string fresh_name(const std::string& base, std::uint64_t& counter,
                       const std::set<std::string>& avoid) {
  for (;;) {
    std::string cand = base + std::to_string(counter++);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace

SLFormula lambda_formula(std::uint64_t p, const std::set<std::string>& avoid) {
  if (p == 0) return SLFormula::tt();

  std::vector<std::string> xs;
  std::uint64_t cx = 1;
  for (std::uint64_t i = 0; i < p; ++i) xs.push_back(fresh_name("x", cx, avoid));
  std::uint64_t cy = 0;
  const std::string y0 = fresh_name("y", cy, avoid);
  const std::string y1 = fresh_name("y", cy, avoid);

  // One universal pair suffices: the per-xi membership tests share y0, y1.
  SLFormula hit;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    SLFormula two = SLFormula::disj(SLFormula::eq(xs[i], y0), SLFormula::eq(xs[i], y1));
    hit = i == 0 ? two : SLFormula::disj(hit, two);
  }
  SLFormula matrix =
      SLFormula::negation(SLFormula::conj(SLFormula::hooks(y0, y1), hit));

  if (p >= 2) {
    SLFormula dist;
    bool first = true;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        SLFormula ne = SLFormula::negation(SLFormula::eq(xs[i], xs[j]));
        dist = first ? ne : SLFormula::conj(dist, ne);
        first = false;
      }
    matrix = SLFormula::conj(dist, matrix);
  }

  SLFormula out = SLFormula::forall(y0, SLFormula::forall(y1, matrix));
  for (std::size_t i = xs.size(); i-- > 0;) out = SLFormula::exists(xs[i], out);
  return out;
}

SLFormula infinite_to_finite(const SLFormula& f) {
  if (!free_vars(f).empty())
    throw std::invalid_argument("infinite_to_finite: formula is not closed");
  PrenexParts parts = prenex_parts(f);
  SLFormula matrix = desugar_heap_atoms(parts.matrix);
  if (!is_test_combination(matrix))
    throw std::invalid_argument("infinite_to_finite: matrix is not a test combination: " +
                                print_sl(parts.matrix));
  matrix = normalize_for_infinite(matrix);

  const std::uint64_t m = parts.prefix.size();
  SLFormula lam = lambda_formula(m, all_vars(f));
  if (m == 0) return SLFormula::conj(matrix, lam);

  PrenexParts lparts = prenex_parts(lam);
  // Prefix order: the new existentials, the original prefix, the new
  // universals. The new variables are fresh, so the hoist is harmless, and a
  // BSR input stays BSR.
  std::vector<std::pair<char, std::string>> prefix;
  std::size_t i = 0;
  for (; i < lparts.prefix.size() && lparts.prefix[i].first == 'E'; ++i)
    prefix.push_back(lparts.prefix[i]);
  for (const auto& q : parts.prefix) prefix.push_back(q);
  for (; i < lparts.prefix.size(); ++i) prefix.push_back(lparts.prefix[i]);

  SLFormula out = SLFormula::conj(matrix, lparts.matrix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    out = it->first == 'E' ? SLFormula::exists(it->second, out)
                           : SLFormula::forall(it->second, out);
  return out;
}

namespace {

struct FreshPool {
  std::set<std::string> avoid;
  std::vector<std::string> xs;
  std::uint64_t xc = 1;
  std::string y;

  explicit FreshPool(std::set<std::string> av) : avoid(std::move(av)) {
    if (!avoid.count("y")) {
      y = "y";
    } else {
      std::uint64_t c = 1;
      y = fresh_name("y", c, avoid);
    }
  }

  const std::string& x(std::size_t i) {
    while (xs.size() <= i) xs.push_back(fresh_name("x", xc, avoid));
    return xs[i];
  }
};

FOFormula fo_distinct(FreshPool& pool, std::uint64_t n) {
  FOFormula acc;
  bool first = true;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j) {
      FOFormula ne = FOFormula::negation(
          FOFormula::eq(FOTerm::mkvar(pool.x(i)), FOTerm::mkvar(pool.x(j))));
      acc = first ? ne : FOFormula::conj(acc, ne);
      first = false;
    }
  return first ? FOFormula::tt() : acc;
}

FOFormula close_exists(FreshPool& pool, std::uint64_t n, FOFormula body) {
  for (std::uint64_t i = n; i-- > 0;) body = FOFormula::exists(pool.x(i), body);
  return body;
}

FOFormula sl_to_fo_rec(const SLFormula& f, FreshPool& pool) {
  switch (f.kind()) {
    case SLKind::False:
      return FOFormula::ff();
    case SLKind::True:
      return FOFormula::tt();
    case SLKind::Eq:
      return FOFormula::eq(FOTerm::mkvar(f.var1()), FOTerm::mkvar(f.var2()));
    case SLKind::Hooks:
      return FOFormula::conj(
          FOFormula::pred("d", FOTerm::mkvar(f.var1())),
          FOFormula::eq(FOTerm::mkvar(f.var2()),
                        FOTerm::app(FOTerm::mkvar(f.var1()))));
    case SLKind::Alloc:
      return FOFormula::pred("d", FOTerm::mkvar(f.var1()));
    case SLKind::UnivGe: {
      std::uint64_t n = f.count().value();
      if (n == 0) return FOFormula::tt();
      return close_exists(pool, n, fo_distinct(pool, n));
    }
    case SLKind::HeapGe: {
      if (f.count().is_inf())
        throw std::invalid_argument("sl_to_fo: |h| >= inf has no first-order image");
      std::uint64_t n = f.count().value();
      if (n == 0) return FOFormula::tt();
      FOFormula body;
      bool have = false;
      if (n >= 2) {
        body = fo_distinct(pool, n);
        have = true;
      }
      for (std::uint64_t i = 0; i < n; ++i) {
        FOFormula di = FOFormula::pred("d", FOTerm::mkvar(pool.x(i)));
        body = have ? FOFormula::conj(body, di) : di;
        have = true;
      }
      return close_exists(pool, n, body);
    }
    case SLKind::HeapGeUnivMinus: {
      std::uint64_t n = f.count().value();
      FOFormula dy = FOFormula::pred("d", FOTerm::mkvar(pool.y));
      if (n == 0) return FOFormula::forall(pool.y, dy);
      FOFormula off;
      for (std::uint64_t i = 0; i < n; ++i) {
        FOFormula ne = FOFormula::negation(
            FOFormula::eq(FOTerm::mkvar(pool.y), FOTerm::mkvar(pool.x(i))));
        off = i == 0 ? ne : FOFormula::conj(off, ne);
      }
      return close_exists(pool, n,
                          FOFormula::forall(pool.y, FOFormula::impl(off, dy)));
    }
    case SLKind::Not:
      return FOFormula::negation(sl_to_fo_rec(f.lhs(), pool));
    case SLKind::And:
      return FOFormula::conj(sl_to_fo_rec(f.lhs(), pool), sl_to_fo_rec(f.rhs(), pool));
    case SLKind::Or:
      return FOFormula::disj(sl_to_fo_rec(f.lhs(), pool), sl_to_fo_rec(f.rhs(), pool));
    case SLKind::Exists:
      return FOFormula::exists(f.var1(), sl_to_fo_rec(f.body(), pool));
    case SLKind::Forall:
      return FOFormula::forall(f.var1(), sl_to_fo_rec(f.body(), pool));
    case SLKind::Emp:
    case SLKind::PointsTo:
      throw std::invalid_argument("sl_to_fo: desugar " + print_sl(f) + " first");
    case SLKind::Star:
    case SLKind::Wand:
      throw std::invalid_argument("sl_to_fo: no first-order image for " + print_sl(f));
  }
  throw std::logic_error("sl_to_fo: bad kind");
}

}  // namespace

FOFormula sl_to_fo(const SLFormula& f) {
  FreshPool pool(all_vars(f));
  return sl_to_fo_rec(f, pool);
}

namespace {

SLFormula fo_core_to_sl(const FOFormula& f, bool relativize) {
  switch (f.kind()) {
    case FOKind::False:
      return SLFormula::ff();
    case FOKind::True:
      return SLFormula::tt();
    case FOKind::Eq: {
      const FOTerm& a = f.t1();
      const FOTerm& b = f.t2();
      if (a.kind() == TermKind::Var && b.kind() == TermKind::Var)
        return SLFormula::eq(a.var(), b.var());
      if (a.kind() == TermKind::App && a.arg().kind() == TermKind::Var &&
          b.kind() == TermKind::Var)
        return SLFormula::hooks(a.arg().var(), b.var());
      if (b.kind() == TermKind::App && b.arg().kind() == TermKind::Var &&
          a.kind() == TermKind::Var)
        return SLFormula::hooks(b.arg().var(), a.var());
      throw std::invalid_argument("fo_to_sl: equation is not flat: " + print_fo(f));
    }
    case FOKind::Pred:
      throw std::invalid_argument("fo_to_sl: predicate atoms are not supported: " +
                                  print_fo(f));
    case FOKind::Not:
      return SLFormula::negation(fo_core_to_sl(f.lhs(), relativize));
    case FOKind::And:
      return SLFormula::conj(fo_core_to_sl(f.lhs(), relativize),
                             fo_core_to_sl(f.rhs(), relativize));
    case FOKind::Or:
      return SLFormula::disj(fo_core_to_sl(f.lhs(), relativize),
                             fo_core_to_sl(f.rhs(), relativize));
    case FOKind::Exists: {
      SLFormula body = fo_core_to_sl(f.body(), relativize);
      if (relativize) body = SLFormula::conj(SLFormula::alloc(f.name()), body);
      return SLFormula::exists(f.name(), body);
    }
    case FOKind::Forall: {
      SLFormula body = fo_core_to_sl(f.body(), relativize);
      if (relativize) body = SLFormula::impl(SLFormula::alloc(f.name()), body);
      return SLFormula::forall(f.name(), body);
    }
  }
  throw std::logic_error("fo_to_sl: bad kind");
}

}  // namespace

SLFormula fo_to_sl(const FOFormula& f, FoToSlMode mode) {
  if (mode == FoToSlMode::Finite) {
    SLFormula core = fo_core_to_sl(f, false);
    return SLFormula::conj(core, SLFormula::forall("x", SLFormula::alloc("x")));
  }
  SLFormula core = fo_core_to_sl(f, true);
  SLFormula closed_img = SLFormula::forall(
      "x", SLFormula::forall(
               "y", SLFormula::impl(SLFormula::hooks("x", "y"), SLFormula::alloc("y"))));
  return SLFormula::conj(
      SLFormula::conj(SLFormula::negation(SLFormula::emp()), closed_img), core);
}

namespace {

void collect_pred_names(const FOFormula& f, std::set<std::string>& out) {
  if (!f.valid()) return;
  switch (f.kind()) {
    case FOKind::Pred:
      out.insert(f.name());
      return;
    case FOKind::Not:
    case FOKind::Exists:
    case FOKind::Forall:
      collect_pred_names(f.lhs(), out);
      return;
    case FOKind::And:
    case FOKind::Or:
      collect_pred_names(f.lhs(), out);
      collect_pred_names(f.rhs(), out);
      return;
    default:
      return;
  }
}

std::string smt_term(const FOTerm& t) {
  if (t.kind() == TermKind::Var) return t.var();
  return "(f " + smt_term(t.arg()) + ")";
}

std::string smt_expr(const FOFormula& f) {
  switch (f.kind()) {
    case FOKind::False:
      return "false";
    case FOKind::True:
      return "true";
    case FOKind::Eq:
      return "(= " + smt_term(f.t1()) + " " + smt_term(f.t2()) + ")";
    case FOKind::Pred:
      return "(" + f.name() + " " + smt_term(f.t1()) + ")";
    case FOKind::Not:
      return "(not " + smt_expr(f.lhs()) + ")";
    case FOKind::And:
      return "(and " + smt_expr(f.lhs()) + " " + smt_expr(f.rhs()) + ")";
    case FOKind::Or:
      return "(or " + smt_expr(f.lhs()) + " " + smt_expr(f.rhs()) + ")";
    case FOKind::Exists:
      return "(exists ((" + f.name() + " L)) " + smt_expr(f.body()) + ")";
    case FOKind::Forall:
      return "(forall ((" + f.name() + " L)) " + smt_expr(f.body()) + ")";
  }
  throw std::logic_error("smt_expr: bad kind");
}

struct TptpVars {
  std::map<std::string, std::string> map;
  std::set<std::string> used;

  const std::string& get(const std::string& v) {
    auto it = map.find(v);
    if (it != map.end()) return it->second;
    std::string cand;
    if (std::isalpha(static_cast<unsigned char>(v[0]))) {
      cand = v;
      cand[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(cand[0])));
    } else {
      cand = "V" + v;
    }
    const std::string base = cand;
    for (int k = 1; used.count(cand); ++k) cand = base + "_" + std::to_string(k);
    used.insert(cand);
    return map.emplace(v, cand).first->second;
  }
};

std::string tptp_term(const FOTerm& t, TptpVars& vars) {
  if (t.kind() == TermKind::Var) return vars.get(t.var());
  return "f(" + tptp_term(t.arg(), vars) + ")";
}

std::string tptp_expr(const FOFormula& f, TptpVars& vars) {
  switch (f.kind()) {
    case FOKind::False:
      return "$false";
    case FOKind::True:
      return "$true";
    case FOKind::Eq:
      return tptp_term(f.t1(), vars) + " = " + tptp_term(f.t2(), vars);
    case FOKind::Pred:
      return f.name() + "(" + tptp_term(f.t1(), vars) + ")";
    case FOKind::Not:
      return "~(" + tptp_expr(f.lhs(), vars) + ")";
    case FOKind::And:
      return "(" + tptp_expr(f.lhs(), vars) + " & " + tptp_expr(f.rhs(), vars) + ")";
    case FOKind::Or:
      return "(" + tptp_expr(f.lhs(), vars) + " | " + tptp_expr(f.rhs(), vars) + ")";
    case FOKind::Exists:
      return "? [" + vars.get(f.name()) + "] : (" + tptp_expr(f.body(), vars) + ")";
    case FOKind::Forall:
      return "! [" + vars.get(f.name()) + "] : (" + tptp_expr(f.body(), vars) + ")";
  }
  throw std::logic_error("tptp_expr: bad kind");
}

}  // namespace

std::string emit_fo(const FOFormula& f, FOFormat format) {
  if (format == FOFormat::Native) return print_fo(f);

  if (format == FOFormat::Smtlib2) {
    std::ostringstream out;
    out << "(declare-sort L 0)\n";
    out << "(declare-fun f (L) L)\n";
    std::set<std::string> preds;
    collect_pred_names(f, preds);
    for (const auto& p : preds) out << "(declare-fun " << p << " (L) Bool)\n";
    for (const auto& v : free_vars(f)) out << "(declare-const " << v << " L)\n";
    out << "(assert " << smt_expr(f) << ")\n";
    out << "(check-sat)\n";
    return out.str();
  }

  // TPTP variables must start with an upper-case letter; source names are
  // mapped injectively. fof formulas are closed, so free variables get an
  // explicit existential closure.
  TptpVars vars;
  std::string body;
  std::set<std::string> free = free_vars(f);
  if (free.empty()) {
    body = tptp_expr(f, vars);
  } else {
    std::string heads;
    for (const auto& v : free) {
      if (!heads.empty()) heads += ",";
      heads += vars.get(v);
    }
    body = "? [" + heads + "] : (" + tptp_expr(f, vars) + ")";
  }
  return "fof(formula, axiom, " + body + ").\n";
}

}  // namespace sl1
