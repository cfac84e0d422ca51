#include "sl1/print.hpp"

#include <stdexcept>

namespace sl1 {

namespace {

// Precedence levels: binder 0, | 1, & 2, * 3, -* 4, ! 5, atom 6.
int sl_prec(const SLFormula& f) {
  switch (f.kind()) {
    case SLKind::Exists:
    case SLKind::Forall: return 0;
    case SLKind::Or: return 1;
    case SLKind::And: return 2;
    case SLKind::Star: return 3;
    case SLKind::Wand: return 4;
    case SLKind::Not: return 5;
    default: return 6;
  }
}

void sl_render(const SLFormula& f, int ctx, std::string& out) {
  int p = sl_prec(f);
  bool paren = p < ctx;
  if (paren) out += '(';
  switch (f.kind()) {
    case SLKind::False: out += "false"; break;
    case SLKind::True: out += "true"; break;
    case SLKind::Emp: out += "emp"; break;
    case SLKind::Eq: out += f.var1() + " = " + f.var2(); break;
    case SLKind::PointsTo: out += f.var1() + " |-> " + f.var2(); break;
    case SLKind::Hooks: out += f.var1() + " ~> " + f.var2(); break;
    case SLKind::Alloc: out += "alloc(" + f.var1() + ")"; break;
    case SLKind::HeapGe: out += "|h| >= " + f.count().str(); break;
    case SLKind::UnivGe: out += "|U| >= " + f.count().str(); break;
    case SLKind::HeapGeUnivMinus: out += "|h| >= |U| - " + f.count().str(); break;
    case SLKind::Not:
      out += '!';
      sl_render(f.lhs(), 5, out);
      break;
    case SLKind::Or:
      sl_render(f.lhs(), 1, out);
      out += " | ";
      sl_render(f.rhs(), 2, out);
      break;
    case SLKind::And:
      sl_render(f.lhs(), 2, out);
      out += " & ";
      sl_render(f.rhs(), 3, out);
      break;
    case SLKind::Star:
      sl_render(f.lhs(), 3, out);
      out += " * ";
      sl_render(f.rhs(), 4, out);
      break;
    case SLKind::Wand:
      sl_render(f.lhs(), 5, out);
      out += " -* ";
      sl_render(f.rhs(), 4, out);
      break;
    case SLKind::Exists:
    case SLKind::Forall:
      out += f.kind() == SLKind::Exists ? "exists " : "forall ";
      out += f.var1();
      out += ". ";
      sl_render(f.body(), 0, out);
      break;
  }
  if (paren) out += ')';
}

int fo_prec(const FOFormula& f) {
  switch (f.kind()) {
    case FOKind::Exists:
    case FOKind::Forall: return 0;
    case FOKind::Or: return 1;
    case FOKind::And: return 2;
    case FOKind::Not: return 5;
    default: return 6;
  }
}

void fo_render_term(const FOTerm& t, std::string& out) {
  if (t.kind() == TermKind::Var) {
    out += t.var();
  } else {
    out += "f(";
    fo_render_term(t.arg(), out);
    out += ')';
  }
}

void fo_render(const FOFormula& f, int ctx, std::string& out) {
  int p = fo_prec(f);
  bool paren = p < ctx;
  if (paren) out += '(';
  switch (f.kind()) {
    case FOKind::False: out += "false"; break;
    case FOKind::True: out += "true"; break;
    case FOKind::Eq:
      fo_render_term(f.t1(), out);
      out += " = ";
      fo_render_term(f.t2(), out);
      break;
    case FOKind::Pred:
      out += f.name();
      out += '(';
      fo_render_term(f.t1(), out);
      out += ')';
      break;
    case FOKind::Not:
      out += '!';
      fo_render(f.lhs(), 5, out);
      break;
    case FOKind::Or:
      fo_render(f.lhs(), 1, out);
      out += " | ";
      fo_render(f.rhs(), 2, out);
      break;
    case FOKind::And:
      fo_render(f.lhs(), 2, out);
      out += " & ";
      fo_render(f.rhs(), 3, out);
      break;
    case FOKind::Exists:
    case FOKind::Forall:
      out += f.kind() == FOKind::Exists ? "exists " : "forall ";
      out += f.name();
      out += ". ";
      fo_render(f.body(), 0, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string print_sl(const SLFormula& f) {
  std::string out;
  sl_render(f, 0, out);
  return out;
}

std::string print_fo(const FOFormula& f) {
  std::string out;
  fo_render(f, 0, out);
  return out;
}

std::string print_fo_term(const FOTerm& t) {
  std::string out;
  fo_render_term(t, out);
  return out;
}

}  // namespace sl1
