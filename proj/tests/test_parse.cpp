#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "sl1/ast.hpp"
#include "sl1/fuzz.hpp"
#include "sl1/parse.hpp"
#include "sl1/print.hpp"

using namespace sl1;

using F = SLFormula;
using G = FOFormula;

TEST_CASE("atoms parse") {
  CHECK(parse_sl("emp") == F::emp());
  CHECK(parse_sl("true") == F::tt());
  CHECK(parse_sl("false") == F::ff());
  CHECK(parse_sl("x = y") == F::eq("x", "y"));
  CHECK(parse_sl("x |-> y") == F::points_to("x", "y"));
  CHECK(parse_sl("x ~> y") == F::hooks("x", "y"));
  CHECK(parse_sl("alloc(x)") == F::alloc("x"));
  CHECK(parse_sl("|h| >= 2") == F::heap_ge(2));
  CHECK(parse_sl("|h| >= 10") == F::heap_ge(10));
  CHECK(parse_sl("|h| >= inf") == F::heap_ge(NatInf::inf()));
  CHECK(parse_sl("|U| >= 1") == F::univ_ge(1));
  CHECK(parse_sl("|h| >= |U| - 2") == F::heap_ge_univ_minus(2));
  CHECK(parse_sl("|h|>=|U|-0") == F::heap_ge_univ_minus(0));
}

TEST_CASE("operator precedence and associativity") {
  F a = F::eq("a", "a");
  F b = F::eq("b", "b");
  F c = F::eq("c", "c");

  CHECK(parse_sl("a = a & b = b | c = c") == F::disj(F::conj(a, b), c));
  CHECK(parse_sl("a = a | b = b & c = c") == F::disj(a, F::conj(b, c)));
  CHECK(parse_sl("a = a & b = b & c = c") == F::conj(F::conj(a, b), c));
  CHECK(parse_sl("a = a -> b = b -> c = c") == F::impl(a, F::impl(b, c)));
  CHECK(parse_sl("a = a <-> b = b") == F::iff(a, b));

  CHECK(parse_sl("emp * true & false") ==
        F::conj(F::star(F::emp(), F::tt()), F::ff()));
  CHECK(parse_sl("emp * emp * true") ==
        F::star(F::star(F::emp(), F::emp()), F::tt()));
  CHECK(parse_sl("emp -* true -* false") ==
        F::wand(F::emp(), F::wand(F::tt(), F::ff())));
  CHECK(parse_sl("emp -* emp * true") ==
        F::star(F::wand(F::emp(), F::emp()), F::tt()));
  CHECK(parse_sl("emp * emp -* true") ==
        F::star(F::emp(), F::wand(F::emp(), F::tt())));

  CHECK(parse_sl("!emp * !emp") ==
        F::star(F::negation(F::emp()), F::negation(F::emp())));
  CHECK(parse_sl("!!x = y") == F::negation(F::negation(F::eq("x", "y"))));
  CHECK(parse_sl("(emp)") == F::emp());
}

TEST_CASE("binders take the longest body and support variable lists") {
  CHECK(parse_sl("forall x . alloc(x) & emp") ==
        F::forall("x", F::conj(F::alloc("x"), F::emp())));
  CHECK(parse_sl("(forall x . alloc(x)) & emp") ==
        F::conj(F::forall("x", F::alloc("x")), F::emp()));
  CHECK(parse_sl("exists x, y . x ~> y") ==
        F::exists("x", F::exists("y", F::hooks("x", "y"))));
  CHECK(parse_sl("exists x . forall y . x ~> y -> alloc(x)") ==
        F::exists("x", F::forall("y", F::impl(F::hooks("x", "y"), F::alloc("x")))));
}

TEST_CASE("comments and whitespace are ignored") {
  CHECK(parse_sl("# a comment\nemp # trailing\n") == F::emp());
  CHECK(parse_sl("  \t emp \n") == F::emp());
  CHECK(parse_sl("x\n  |->\n  y") == F::points_to("x", "y"));
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_sl(""), ParseError);
  CHECK_THROWS_AS(parse_sl("emp emp"), ParseError);
  CHECK_THROWS_AS(parse_sl("alloc x"), ParseError);
  CHECK_THROWS_AS(parse_sl("|h| >= |U| + 1"), ParseError);
  CHECK_THROWS_AS(parse_sl("x"), ParseError);
  try {
    parse_sl("emp &\n& emp");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 1);
  }
}

TEST_CASE("first order syntax") {
  FOTerm x = FOTerm::mkvar("x");
  FOTerm y = FOTerm::mkvar("y");
  CHECK(parse_fo("f(x) = y") == G::eq(FOTerm::app(x), y));
  CHECK(parse_fo("f(f(x)) = x") == G::eq(FOTerm::app(FOTerm::app(x)), x));
  CHECK(parse_fo("d(x)") == G::pred("d", x));
  CHECK(parse_fo("P(f(y))") == G::pred("P", FOTerm::app(y)));
  CHECK(parse_fo("forall y . f(y) = y") ==
        G::forall("y", G::eq(FOTerm::app(y), y)));
  CHECK(parse_fo("exists x . forall y . !(x = f(y))") ==
        G::exists("x", G::forall("y", G::negation(G::eq(x, FOTerm::app(y))))));
  CHECK_THROWS_AS(parse_fo("exists f . true"), ParseError);
  CHECK_THROWS_AS(parse_fo("f = x"), ParseError);
  CHECK_THROWS_AS(parse_fo("x |-> y"), ParseError);
}

TEST_CASE("printing parses back to the same formula") {
  CHECK(print_sl(parse_sl("x|->y * true")) == "x |-> y * true");
  CHECK(print_sl(F::star(F::negation(F::heap_ge(1)), F::negation(F::heap_ge(1)))) ==
        "!|h| >= 1 * !|h| >= 1");

  Rng rng(0x9a5eu);
  FuzzConfig cfg;
  for (int i = 0; i < 10000; ++i) {
    SLFormula f = random_bsr_sentence(rng, cfg);
    CHECK(parse_sl(print_sl(f)) == f);
  }
  for (int i = 0; i < 2000; ++i) {
    SLFormula f = gen::random_quantified_tc(rng, {"x", "y"}, 2 + rng.below(8), 2);
    CHECK(parse_sl(print_sl(f)) == f);
  }
  for (int i = 0; i < 2000; ++i) {
    FOFormula f = gen::random_fo_formula(rng, {"x", "y"}, 2 + rng.below(8), 2);
    CHECK(parse_fo(print_fo(f)) == f);
    CHECK(print_fo(parse_fo(print_fo(f))) == print_fo(f));
  }
}
