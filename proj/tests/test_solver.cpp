#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "sl1/parse.hpp"
#include "sl1/print.hpp"
#include "sl1/reductions.hpp"
#include "sl1/semantics.hpp"
#include "sl1/solver.hpp"
#include "sl1/structures.hpp"

using namespace sl1;

namespace {

SLStructure mk(std::vector<Loc> universe, std::map<std::string, Loc> store,
               std::map<Loc, Loc> heap) {
  SLStructure I{std::move(universe), std::move(store), std::move(heap)};
  I.validate();
  return I;
}

}  // namespace

TEST_CASE("small model bound arithmetic") {
  // n=1, m=1 with matrix constant 2: max(8, 12, 3).
  CHECK(small_model_bound(parse_sl("exists x . forall y . emp")) == 12);
  // Closed quantifier-free sentence: max(4, 0, 1).
  CHECK(small_model_bound(parse_sl("emp")) == 4);
  // n=2, m=0 with matrix constant 3: max(12, 0, 3).
  CHECK(small_model_bound(parse_sl("exists x . exists y . |h| >= 2")) == 12);

  CHECK_THROWS_AS(small_model_bound(parse_sl("forall x . exists y . x = y")),
                  std::invalid_argument);
}

TEST_CASE("finite satisfiability on the small model bound") {
  SatResult total = check_finite_sat(parse_sl("forall y . alloc(y)"));
  REQUIRE(total.status == SatStatus::Sat);
  REQUIRE(total.sl_witness.has_value());
  CHECK(total.sl_witness->universe == std::vector<Loc>{0});
  CHECK(total.sl_witness->heap == std::map<Loc, Loc>{{0, 0}});
  CHECK(total.sl_witness->store.empty());
  CHECK(total.bound_used == 1);
  CHECK(validate_witness(parse_sl("forall y . alloc(y)"), *total.sl_witness));

  SatResult contra = check_finite_sat(parse_sl("emp & |h| >= 1"));
  CHECK(contra.status == SatStatus::Unsat);
  CHECK(contra.bound_used == 4);
  CHECK_FALSE(contra.sl_witness.has_value());

  SatResult pt = check_finite_sat(parse_sl("exists x . x |-> x & !alloc(x)"));
  CHECK(pt.status == SatStatus::Unsat);
  CHECK(pt.bound_used == 7);

  CHECK_THROWS_AS(check_finite_sat(parse_sl("alloc(x)")), std::invalid_argument);
  CHECK_THROWS_AS(check_finite_sat(parse_sl("forall x . exists y . x = y")),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_finite_sat(SLFormula::heap_ge(NatInf::inf())),
                  std::invalid_argument);
}

TEST_CASE("infinite satisfiability via the finite reduction") {
  SatResult total = check_infinite_sat(parse_sl("forall y . alloc(y)"));
  CHECK(total.status == SatStatus::Unsat);
  CHECK_FALSE(total.inflatable);

  SLFormula nonempty = parse_sl("!emp");
  SatResult ne = check_infinite_sat(nonempty);
  REQUIRE(ne.status == SatStatus::Sat);
  CHECK(ne.inflatable);
  REQUIRE(ne.sl_witness.has_value());
  CHECK(ne.bound_used == 1);
  CHECK(eval_sl(*ne.sl_witness, infinite_to_finite(nonempty)));

  SLFormula spare = parse_sl("exists x . !alloc(x)");
  SatResult sp = check_infinite_sat(spare);
  REQUIRE(sp.status == SatStatus::Sat);
  CHECK(sp.inflatable);
  REQUIRE(sp.sl_witness.has_value());
  // One spare location per quantifier stays outside the heap cells.
  CHECK(sp.sl_witness->universe.size() -
            elems(sp.sl_witness->heap).size() >= 1);
  CHECK(eval_sl(*sp.sl_witness, infinite_to_finite(spare)));

  // Alternating prefixes are out of scope for this check, not an error.
  SatResult ae = check_infinite_sat(parse_sl("forall x . exists y . x = y"));
  CHECK(ae.status == SatStatus::BoundedUnknown);

  CHECK_THROWS_AS(check_infinite_sat(parse_sl("exists x . emp * emp")),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_infinite_sat(parse_sl("!alloc(x)")),
                  std::invalid_argument);
}

TEST_CASE("bounded oracle scans every canonical structure") {
  // Injective, non-surjective f has no finite model.
  FOFormula inj = parse_fo(
      "(exists x . forall y . !(x = f(y))) & "
      "(forall y . forall z . (f(y) = f(z) -> y = z))");
  SatResult fo = oracle_sat(inj, 5);
  CHECK(fo.status == SatStatus::BoundedUnknown);
  CHECK(fo.bound_used == 5);
  CHECK_FALSE(fo.fo_witness.has_value());

  SatResult vac = oracle_sat(parse_sl("forall x . exists y . x ~> y | !alloc(x)"), 1);
  REQUIRE(vac.status == SatStatus::Sat);
  CHECK(vac.bound_used == 1);
  CHECK(vac.sl_witness->heap.empty());

  SatResult no = oracle_sat(parse_sl("false"), 3);
  CHECK(no.status == SatStatus::BoundedUnknown);
  CHECK(no.bound_used == 3);

  // Earliest universe size wins and stays put as the cap grows.
  CHECK(oracle_sat(parse_sl("|h| >= 2"), 1).status == SatStatus::BoundedUnknown);
  SatResult two = oracle_sat(parse_sl("|h| >= 2"), 2);
  REQUIRE(two.status == SatStatus::Sat);
  CHECK(two.bound_used == 2);
  CHECK(oracle_sat(parse_sl("|h| >= 2"), 5).bound_used == 2);

  // Free variables are read existentially.
  SatResult freev = oracle_sat(parse_sl("alloc(x)"), 2);
  REQUIRE(freev.status == SatStatus::Sat);
  CHECK(freev.bound_used == 1);
  CHECK(freev.sl_witness->store.count("x") == 1);

  // Unsat from the complete check means the oracle never answers Sat.
  SatResult cross = oracle_sat(parse_sl("emp & |h| >= 1"), 6);
  CHECK(cross.status == SatStatus::BoundedUnknown);
  CHECK(cross.bound_used == 6);

  FOFormula withpreds = parse_fo("exists x . P(x) & forall y . !Q(y)");
  SatResult pq = oracle_sat(withpreds, 2);
  REQUIRE(pq.status == SatStatus::Sat);
  CHECK(pq.bound_used == 1);
  REQUIRE(pq.fo_witness.has_value());
  CHECK(pq.fo_witness->preds.at("P") == std::set<Loc>{0});
  CHECK(pq.fo_witness->preds.at("Q").empty());
}

TEST_CASE("budgets degrade the verdict instead of lying") {
  SolverOptions tight;
  tight.max_structures = 1;
  SatResult cut = check_finite_sat(parse_sl("forall y . alloc(y)"), tight);
  CHECK(cut.status == SatStatus::BoundedUnknown);
  CHECK(cut.bound_used == 0);
  CHECK(cut.stats.structures_visited == 1);

  // A witness found before the budget runs out still counts.
  SatResult first = check_finite_sat(parse_sl("emp"), tight);
  CHECK(first.status == SatStatus::Sat);
  CHECK(first.stats.structures_visited == 1);

  SolverOptions starving;
  starving.max_eval_steps = 1;
  SatResult starved =
      check_finite_sat(parse_sl("|h| >= 1 * |h| >= 1"), starving);
  CHECK(starved.status == SatStatus::BoundedUnknown);

  SolverOptions few;
  few.max_structures = 3;
  SatResult partial = oracle_sat(parse_sl("false"), 5, few);
  CHECK(partial.status == SatStatus::BoundedUnknown);
  CHECK(partial.bound_used == 1);
  CHECK(partial.stats.structures_visited == 3);
}

TEST_CASE("worker count never changes the verdict or the witness") {
  std::vector<std::string> inputs = {
      "|h| >= 2",
      "exists x . exists y . !(x = y) & x ~> y",
      "forall y . alloc(y)",
      "emp & |h| >= 1",
  };
  for (const auto& text : inputs) {
    CAPTURE(text);
    SLFormula f = parse_sl(text);
    SatResult base = check_finite_sat(f);
    for (unsigned workers : {2u, 3u, 8u}) {
      SolverOptions opts;
      opts.workers = workers;
      SatResult got = check_finite_sat(f, opts);
      CHECK(got.status == base.status);
      CHECK(got.bound_used == base.bound_used);
      CHECK(got.sl_witness.has_value() == base.sl_witness.has_value());
      if (got.sl_witness) {
        CHECK(got.sl_witness->universe == base.sl_witness->universe);
        CHECK(got.sl_witness->store == base.sl_witness->store);
        CHECK(got.sl_witness->heap == base.sl_witness->heap);
      }
    }
  }
}

TEST_CASE("witness validation replays the universal part") {
  SLFormula f = parse_sl("exists x . alloc(x)");
  CHECK(validate_witness(f, mk({0, 1}, {{"x", 0}}, {{0, 1}})));
  CHECK_FALSE(validate_witness(f, mk({0}, {{"x", 0}}, {})));
  CHECK_THROWS_AS(validate_witness(f, mk({0}, {}, {})), std::invalid_argument);

  SLFormula ae = parse_sl("exists x . forall y . x = y");
  CHECK(validate_witness(ae, mk({0}, {{"x", 0}}, {})));
  CHECK_FALSE(validate_witness(ae, mk({0, 1}, {{"x", 0}}, {})));
  CHECK_THROWS_AS(validate_witness(ae, mk({0, 1}, {{"x", 0}}, {}), 1),
                  BudgetExceeded);
}

TEST_CASE("finite verdicts agree with the bounded oracle") {
  std::vector<std::pair<std::string, SatStatus>> corpus = {
      {"emp", SatStatus::Sat},
      {"forall y . alloc(y)", SatStatus::Sat},
      {"|h| >= 2", SatStatus::Sat},
      {"exists x . x |-> x", SatStatus::Sat},
      {"exists x . exists y . !(x = y)", SatStatus::Sat},
      {"|U| >= 3", SatStatus::Sat},
      {"exists x . forall y . x = y", SatStatus::Sat},
      {"emp & |h| >= 1", SatStatus::Unsat},
      {"exists x . x |-> x & !alloc(x)", SatStatus::Unsat},
      {"|h| >= 1 & !|U| >= 1", SatStatus::Unsat},
      {"exists x . !(x = x)", SatStatus::Unsat},
  };
  for (const auto& [text, want] : corpus) {
    CAPTURE(text);
    SLFormula f = parse_sl(text);
    SatResult fast = check_finite_sat(f);
    CHECK(fast.status == want);
    SatResult slow = oracle_sat(f, 3);
    if (want == SatStatus::Sat) {
      CHECK(validate_witness(f, *fast.sl_witness));
      REQUIRE(fast.bound_used <= 3);
      CHECK(slow.status == SatStatus::Sat);
      CHECK(slow.bound_used == fast.bound_used);
    } else {
      CHECK(slow.status == SatStatus::BoundedUnknown);
    }
  }
}
