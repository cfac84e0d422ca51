#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl1/ast.hpp"

namespace sl1 {

enum class TestAtomKind : std::uint8_t { Eq, Hooks, Alloc, HeapGe, UnivGe, HeapGeUnivMinus };

struct TestLiteral {
  TestAtomKind kind;
  bool positive = true;
  std::string x, y;  // Eq/Hooks use both, Alloc uses x
  NatInf n;          // cardinality atoms

  friend bool operator==(const TestLiteral& a, const TestLiteral& b) {
    return a.kind == b.kind && a.positive == b.positive && a.x == b.x && a.y == b.y &&
           a.n == b.n;
  }
};

// Reads an atom or negated atom; nullopt when f is not a literal over test
// atoms (equality included).
std::optional<TestLiteral> as_test_literal(const SLFormula& f);

// A heap lower bound is a positive |h| >= n or |h| >= |U|-n literal; a heap
// upper bound is a negative one. Minterms need exactly one of each, exactly
// one positive |U| >= n and at most one negative |U| >= n.
struct Minterm {
  std::vector<TestLiteral> literals;

  static std::optional<Minterm> from_literals(const std::vector<TestLiteral>& lits);
};

bool is_minterm(const std::vector<TestLiteral>& lits);

// Quantifier-free boolean combination of test atoms (and constants); with
// domain_independent_only, |U| >= n and |h| >= |U|-n atoms are also rejected.
bool is_test_combination(const SLFormula& f, bool domain_independent_only = false);

// x |-> y  becomes  x ~> y & !|h| >= 2;  emp  becomes  !|h| >= 1.
SLFormula desugar_heap_atoms(const SLFormula& f);

// Syntactic upper bound on the largest constant any minterm expansion of f
// can mention: emp and |-> give 2, test atoms give their constant + 1, not
// preserves, and/or take the max, * and -* the sum plus one. Throws on
// quantifiers.
std::uint64_t conservative_maxn(const SLFormula& f);

// Rewrite for infinite universes: |U| >= n becomes true, |h| >= |U|-n becomes
// false. Input must be a test combination.
SLFormula normalize_for_infinite(const SLFormula& f);

}  // namespace sl1
