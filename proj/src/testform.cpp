#include "sl1/testform.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl1/print.hpp"

namespace sl1 {

std::optional<TestLiteral> as_test_literal(const SLFormula& f) {
  bool positive = true;
  SLFormula cur = f;
  if (cur.kind() == SLKind::Not) {
    positive = false;
    cur = cur.lhs();
  }
  TestLiteral lit;
  lit.positive = positive;
  switch (cur.kind()) {
    case SLKind::Eq:
      lit.kind = TestAtomKind::Eq;
      lit.x = cur.var1();
      lit.y = cur.var2();
      return lit;
    case SLKind::Hooks:
      lit.kind = TestAtomKind::Hooks;
      lit.x = cur.var1();
      lit.y = cur.var2();
      return lit;
    case SLKind::Alloc:
      lit.kind = TestAtomKind::Alloc;
      lit.x = cur.var1();
      return lit;
    case SLKind::HeapGe:
      lit.kind = TestAtomKind::HeapGe;
      lit.n = cur.count();
      return lit;
    case SLKind::UnivGe:
      lit.kind = TestAtomKind::UnivGe;
      lit.n = cur.count();
      return lit;
    case SLKind::HeapGeUnivMinus:
      lit.kind = TestAtomKind::HeapGeUnivMinus;
      lit.n = cur.count();
      return lit;
    default:
      return std::nullopt;
  }
}

bool is_minterm(const std::vector<TestLiteral>& lits) {
  std::size_t hmin = 0, hmax = 0, umin = 0, umax = 0;
  for (const auto& l : lits) {
    bool heap_bound = l.kind == TestAtomKind::HeapGe || l.kind == TestAtomKind::HeapGeUnivMinus;
    if (heap_bound && l.positive) ++hmin;
    if (heap_bound && !l.positive) ++hmax;
    if (l.kind == TestAtomKind::UnivGe && l.positive) ++umin;
    if (l.kind == TestAtomKind::UnivGe && !l.positive) ++umax;
  }
  return hmin == 1 && hmax == 1 && umin == 1 && umax <= 1;
}

std::optional<Minterm> Minterm::from_literals(const std::vector<TestLiteral>& lits) {
  if (!is_minterm(lits)) return std::nullopt;
  Minterm m;
  m.literals = lits;
  return m;
}

bool is_test_combination(const SLFormula& f, bool domain_independent_only) {
  switch (f.kind()) {
    case SLKind::True:
    case SLKind::False:
    case SLKind::Eq:
    case SLKind::Hooks:
    case SLKind::Alloc:
    case SLKind::HeapGe:
      return true;
    case SLKind::UnivGe:
    case SLKind::HeapGeUnivMinus:
      return !domain_independent_only;
    case SLKind::Not:
      return is_test_combination(f.lhs(), domain_independent_only);
    case SLKind::And:
    case SLKind::Or:
      return is_test_combination(f.lhs(), domain_independent_only) &&
             is_test_combination(f.rhs(), domain_independent_only);
    default:
      return false;
  }
}

SLFormula desugar_heap_atoms(const SLFormula& f) {
  switch (f.kind()) {
    case SLKind::Emp:
      return SLFormula::negation(SLFormula::heap_ge(1));
    case SLKind::PointsTo:
      return SLFormula::conj(SLFormula::hooks(f.var1(), f.var2()),
                             SLFormula::negation(SLFormula::heap_ge(2)));
    case SLKind::Not:
      return SLFormula::negation(desugar_heap_atoms(f.lhs()));
    case SLKind::And:
      return SLFormula::conj(desugar_heap_atoms(f.lhs()), desugar_heap_atoms(f.rhs()));
    case SLKind::Or:
      return SLFormula::disj(desugar_heap_atoms(f.lhs()), desugar_heap_atoms(f.rhs()));
    case SLKind::Star:
      return SLFormula::star(desugar_heap_atoms(f.lhs()), desugar_heap_atoms(f.rhs()));
    case SLKind::Wand:
      return SLFormula::wand(desugar_heap_atoms(f.lhs()), desugar_heap_atoms(f.rhs()));
    case SLKind::Exists:
      return SLFormula::exists(f.var1(), desugar_heap_atoms(f.body()));
    case SLKind::Forall:
      return SLFormula::forall(f.var1(), desugar_heap_atoms(f.body()));
    default:
      return f;
  }
}

std::uint64_t conservative_maxn(const SLFormula& f) {
  switch (f.kind()) {
    case SLKind::False:
    case SLKind::True:
    case SLKind::Eq:
    case SLKind::Hooks:
    case SLKind::Alloc:
      return 1;
    case SLKind::Emp:
    case SLKind::PointsTo:
      return 2;
    case SLKind::HeapGe:
      return f.count().is_inf() ? 1 : f.count().value() + 1;
    case SLKind::UnivGe:
    case SLKind::HeapGeUnivMinus:
      return f.count().value() + 1;
    case SLKind::Not:
      return conservative_maxn(f.lhs());
    case SLKind::And:
    case SLKind::Or:
      return std::max(conservative_maxn(f.lhs()), conservative_maxn(f.rhs()));
    case SLKind::Star:
    case SLKind::Wand:
      return conservative_maxn(f.lhs()) + conservative_maxn(f.rhs()) + 1;
    case SLKind::Exists:
    case SLKind::Forall:
      throw std::invalid_argument("conservative_maxn: quantified input");
  }
  throw std::logic_error("conservative_maxn: bad kind");
}

SLFormula normalize_for_infinite(const SLFormula& f) {
  if (!is_test_combination(f))
    throw std::invalid_argument("normalize_for_infinite: not a test combination: " +
                                print_sl(f));
  switch (f.kind()) {
    case SLKind::UnivGe:
      return SLFormula::tt();
    case SLKind::HeapGeUnivMinus:
      return SLFormula::ff();
    case SLKind::Not:
      return SLFormula::negation(normalize_for_infinite(f.lhs()));
    case SLKind::And:
      return SLFormula::conj(normalize_for_infinite(f.lhs()), normalize_for_infinite(f.rhs()));
    case SLKind::Or:
      return SLFormula::disj(normalize_for_infinite(f.lhs()), normalize_for_infinite(f.rhs()));
    default:
      return f;
  }
}

}  // namespace sl1
