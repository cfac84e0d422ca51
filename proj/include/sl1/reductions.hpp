#pragma once

#include <set>
#include <string>

#include "sl1/ast.hpp"

namespace sl1 {

// lambda_formula(p) is satisfied exactly by structures with at least p
// locations outside elems(h). Emitted in prenex form
//   exists x1..xp. forall y0, y1. distinct(x) & !(y0 ~> y1 & OR (xi = y0 | xi = y1))
// with variable names chosen outside `avoid`. p = 0 yields true.
SLFormula lambda_formula(std::uint64_t p, const std::set<std::string>& avoid = {});

// Rewrites a closed prenex formula whose matrix is a test combination into a
// formula that is finitely satisfiable iff the input is satisfiable over
// infinite universes. The matrix is desugared and normalized (|U| >= n holds,
// |h| >= |U| - n fails on infinite universes), then the result is conjoined
// with lambda_formula(m) for m the number of quantifiers, hoisted to stay
// prenex. Throws std::invalid_argument if the input is not closed, not
// prenex, or its matrix is not a test combination.
SLFormula infinite_to_finite(const SLFormula& f);

// Translates a quantified test combination to first-order logic over one
// unary function f and the unary predicate d (d(x) means x is allocated).
// Satisfiability and model checking are preserved through corresponds().
// Cardinality atoms expand with fresh variables x1, x2, ... (and y for the
// inner universal), reused across atoms. Throws std::invalid_argument on
// emp, |->, *, -* (desugar first) and on |h| >= inf.
FOFormula sl_to_fo(const SLFormula& f);

enum class FoToSlMode : std::uint8_t { Finite, Infinite };

// Translates a flat FO formula (see flatten_fo) over the one-function
// signature into separation logic: f(x) = y becomes x ~> y. Finite mode
// conjoins the total-heap axiom forall x. alloc(x); infinite mode conjoins
// !emp & forall x,y. (x ~> y -> alloc(y)) and relativizes every quantifier
// to alloc. Finite FO satisfiability of the input then matches finite
// (respectively infinite) satisfiability of the output. Throws
// std::invalid_argument on unflattened equations and on predicate atoms.
SLFormula fo_to_sl(const FOFormula& f, FoToSlMode mode);

enum class FOFormat : std::uint8_t { Native, Smtlib2, Tptp };

// Renders a FO formula as a standalone prover input. smtlib2: declarations
// over an uninterpreted sort L plus (assert ...) (check-sat); free variables
// become constants. tptp: one fof(formula, axiom, ...) with free variables
// existentially closed. native: print_fo, reparseable. Output is byte-stable
// for equal inputs.
std::string emit_fo(const FOFormula& f, FOFormat format);

}  // namespace sl1
