#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sl1/nat_inf.hpp"

namespace sl1 {

// ---------------------------------------------------------------------------
// Separation logic formulae (one selector).
//
// Derived connectives -> and <-> are desugared at construction; Or and the
// universal quantifier are native. Test atoms (Hooks, Alloc, HeapGe, UnivGe,
// HeapGeUnivMinus) are first-class nodes, not sugar.
// ---------------------------------------------------------------------------

enum class SLKind : std::uint8_t {
  False,
  True,
  Emp,
  Eq,               // x = y
  PointsTo,         // x |-> y   (heap is exactly one cell)
  Hooks,            // x ~> y    (heap contains the cell)
  Alloc,            // alloc(x)
  HeapGe,           // |h| >= n, n in N or inf
  UnivGe,           // |U| >= n
  HeapGeUnivMinus,  // |h| >= |U| - n
  Not,
  And,
  Or,
  Star,
  Wand,
  Exists,
  Forall,
};

class SLFormula {
 public:
  SLFormula() = default;  // empty handle; only comparisons are valid

  SLKind kind() const;
  bool valid() const { return node_ != nullptr; }

  // Eq/PointsTo/Hooks: first and second variable. Alloc: var1 only.
  // Exists/Forall: var1 is the bound variable.
  const std::string& var1() const;
  const std::string& var2() const;
  NatInf count() const;

  const SLFormula& lhs() const;
  const SLFormula& rhs() const;
  const SLFormula& body() const;

  static SLFormula ff();
  static SLFormula tt();
  static SLFormula emp();
  static SLFormula eq(std::string x, std::string y);
  static SLFormula points_to(std::string x, std::string y);
  static SLFormula hooks(std::string x, std::string y);
  static SLFormula alloc(std::string x);
  static SLFormula heap_ge(NatInf n);
  static SLFormula univ_ge(std::uint64_t n);
  static SLFormula heap_ge_univ_minus(std::uint64_t n);
  static SLFormula negation(SLFormula f);
  static SLFormula conj(SLFormula a, SLFormula b);
  static SLFormula disj(SLFormula a, SLFormula b);
  static SLFormula impl(SLFormula a, SLFormula b);  // desugars to !a | b
  static SLFormula iff(SLFormula a, SLFormula b);   // desugars to (!a|b)&(!b|a)
  static SLFormula star(SLFormula a, SLFormula b);
  static SLFormula wand(SLFormula a, SLFormula b);
  static SLFormula exists(std::string x, SLFormula f);
  static SLFormula forall(std::string x, SLFormula f);

  friend bool operator==(const SLFormula& a, const SLFormula& b);
  friend bool operator!=(const SLFormula& a, const SLFormula& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  static SLFormula make(Node n);
};

struct SLFormula::Node {
  SLKind kind;
  std::string a, b;
  NatInf n;
  SLFormula l, r;
};

inline SLKind SLFormula::kind() const { return node_->kind; }
inline const std::string& SLFormula::var1() const { return node_->a; }
inline const std::string& SLFormula::var2() const { return node_->b; }
inline NatInf SLFormula::count() const { return node_->n; }
inline const SLFormula& SLFormula::lhs() const { return node_->l; }
inline const SLFormula& SLFormula::rhs() const { return node_->r; }
inline const SLFormula& SLFormula::body() const { return node_->l; }

// ---------------------------------------------------------------------------
// First-order formulae over one unary function f, equality and unary
// predicates. Terms nest: f(f(x)).
// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { Var, App };

class FOTerm {
 public:
  FOTerm() = default;

  TermKind kind() const;
  const std::string& var() const;
  const FOTerm& arg() const;
  bool valid() const { return node_ != nullptr; }

  static FOTerm mkvar(std::string x);
  static FOTerm app(FOTerm t);  // f(t)

  friend bool operator==(const FOTerm& a, const FOTerm& b);
  friend bool operator!=(const FOTerm& a, const FOTerm& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct FOTerm::Node {
  TermKind kind;
  std::string var;
  FOTerm sub;
};

inline TermKind FOTerm::kind() const { return node_->kind; }
inline const std::string& FOTerm::var() const { return node_->var; }
inline const FOTerm& FOTerm::arg() const { return node_->sub; }

enum class FOKind : std::uint8_t {
  False,
  True,
  Eq,    // t1 = t2
  Pred,  // P(t1)
  Not,
  And,
  Or,
  Exists,
  Forall,
};

class FOFormula {
 public:
  FOFormula() = default;

  FOKind kind() const;
  bool valid() const { return node_ != nullptr; }
  // Pred: predicate name. Exists/Forall: bound variable.
  const std::string& name() const;
  const FOTerm& t1() const;
  const FOTerm& t2() const;
  const FOFormula& lhs() const;
  const FOFormula& rhs() const;
  const FOFormula& body() const;

  static FOFormula ff();
  static FOFormula tt();
  static FOFormula eq(FOTerm a, FOTerm b);
  static FOFormula pred(std::string p, FOTerm t);
  static FOFormula negation(FOFormula f);
  static FOFormula conj(FOFormula a, FOFormula b);
  static FOFormula disj(FOFormula a, FOFormula b);
  static FOFormula impl(FOFormula a, FOFormula b);
  static FOFormula iff(FOFormula a, FOFormula b);
  static FOFormula exists(std::string x, FOFormula f);
  static FOFormula forall(std::string x, FOFormula f);

  friend bool operator==(const FOFormula& a, const FOFormula& b);
  friend bool operator!=(const FOFormula& a, const FOFormula& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  static FOFormula make(Node n);
};

struct FOFormula::Node {
  FOKind kind;
  std::string name;
  FOTerm t1, t2;
  FOFormula l, r;
};

inline FOKind FOFormula::kind() const { return node_->kind; }
inline const std::string& FOFormula::name() const { return node_->name; }
inline const FOTerm& FOFormula::t1() const { return node_->t1; }
inline const FOTerm& FOFormula::t2() const { return node_->t2; }
inline const FOFormula& FOFormula::lhs() const { return node_->l; }
inline const FOFormula& FOFormula::rhs() const { return node_->r; }
inline const FOFormula& FOFormula::body() const { return node_->l; }

// ---------------------------------------------------------------------------
// Shared structural queries.
// ---------------------------------------------------------------------------

// Symbol-occurrence size: every connective, quantifier, atom symbol and
// variable occurrence counts 1; a numeric constant counts 1. |h| >= |U| - n
// counts 5 (|h|, >=, |U|, -, n).
std::uint64_t size_of(const SLFormula& f);
std::uint64_t size_of(const FOFormula& f);

std::set<std::string> free_vars(const SLFormula& f);
std::set<std::string> free_vars(const FOFormula& f);
// All variable names occurring anywhere (free or bound); used for fresh-name
// generation.
std::set<std::string> all_vars(const SLFormula& f);
std::set<std::string> all_vars(const FOFormula& f);

enum class PrefixTag : std::uint8_t { QuantifierFree, BSR, Prenex, NonPrenex };

struct PrefixClass {
  PrefixTag tag = PrefixTag::NonPrenex;
  // BSR: prefix is exists^n forall^m.
  unsigned n = 0;
  unsigned m = 0;
  // Prenex: the quantifier word, 'E' and 'A' per quantifier, outermost first.
  std::string word;

  std::string str() const;
};

PrefixClass classify_prefix(const SLFormula& f);
PrefixClass classify_prefix(const FOFormula& f);

// Strips a prenex prefix: returns bound variables in order with their
// quantifier char ('E'/'A') and the matrix. Throws if the formula is not
// prenex.
struct PrenexParts {
  std::vector<std::pair<char, std::string>> prefix;
  SLFormula matrix;
};
PrenexParts prenex_parts(const SLFormula& f);

// Equisatisfiable rewrite making every equation flat (f(x) = y or x = y) and
// every predicate argument a variable. Fresh variables are existential under
// positive polarity, universal under negative polarity.
FOFormula flatten_fo(const FOFormula& f);

}  // namespace sl1
