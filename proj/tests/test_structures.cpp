#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "sl1/fuzz.hpp"
#include "sl1/semantics.hpp"
#include "sl1/structures.hpp"

using namespace sl1;

namespace {

SLStructure mk(std::vector<Loc> universe, std::map<std::string, Loc> store,
               std::map<Loc, Loc> heap) {
  SLStructure I{std::move(universe), std::move(store), std::move(heap)};
  I.validate();
  return I;
}

bool same_structure(const SLStructure& a, const SLStructure& b) {
  return a.universe == b.universe && a.store == b.store && a.heap == b.heap;
}

}  // namespace

TEST_CASE("elems is the union of domain and image") {
  CHECK(elems({}) == std::set<Loc>{});
  CHECK(elems({{0, 1}}) == std::set<Loc>{0, 1});
  CHECK(elems({{0, 1}, {1, 1}}) == std::set<Loc>{0, 1});
  CHECK(elems({{2, 0}, {3, 3}}) == std::set<Loc>{0, 2, 3});
}

TEST_CASE("validation rejects malformed structures") {
  CHECK_THROWS_AS(mk({}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(mk({0}, {{"x", 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(mk({0}, {}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(mk({0}, {}, {{1, 0}}), std::invalid_argument);
  CHECK_NOTHROW(mk({0, 2}, {{"x", 2}}, {{2, 0}}));
}

TEST_CASE("structure equivalence conditions") {
  SLStructure I = mk({0, 1, 2}, {{"x", 0}}, {{0, 1}});
  CHECK(equivalent(I, I, {"x"}, 0));
  CHECK_FALSE(equivalent(I, I, {"x"}, 1));

  // Identical heaps but x moved off a shared elems location.
  SLStructure A = mk({0, 1, 2, 3, 4}, {{"x", 0}}, {{0, 1}});
  SLStructure B = mk({0, 1, 2, 3, 4}, {{"x", 2}}, {{0, 1}});
  CHECK_FALSE(equivalent(A, B, {"x"}, 0));

  // Different spare placement outside elems is invisible.
  SLStructure C = mk({0, 1, 2}, {{"x", 2}}, {{0, 1}});
  SLStructure D = mk({0, 1, 5}, {{"x", 5}}, {{0, 1}});
  CHECK(equivalent(C, D, {"x"}, 0));

  CHECK_THROWS_AS(equivalent(I, I, {"y"}, 0), std::invalid_argument);
}

TEST_CASE("equivalence is reflexive under the spare floor and symmetric") {
  Rng rng(0x5717u);
  std::vector<std::string> X = {"x", "y"};
  std::set<std::string> Xs(X.begin(), X.end());
  for (int i = 0; i < 1000; ++i) {
    SLStructure I = gen::random_structure(rng, 5, X);
    std::uint64_t spare = 0;
    std::set<Loc> el = elems(I.heap);
    for (Loc l : I.universe)
      if (!el.count(l)) ++spare;
    std::uint64_t n = rng.below(3);
    CHECK(equivalent(I, I, Xs, n) == (spare >= n + X.size()));

    SLStructure J = gen::random_structure(rng, 5, X);
    CHECK(equivalent(I, J, Xs, n) == equivalent(J, I, Xs, n));

    auto pair = gen::random_equivalent_pair(rng, X, n);
    CHECK(equivalent(pair.a, pair.b, Xs, n));
    CHECK(equivalent(pair.b, pair.a, Xs, n));
  }
}

TEST_CASE("indistinguishable structures agree on prenex sentences over domain independent atoms") {
  Rng rng(0x7a0fu);
  std::vector<std::string> X = {"x", "y"};
  std::set<std::string> Xs(X.begin(), X.end());
  for (int i = 0; i < 500; ++i) {
    std::uint64_t m = rng.below(3);
    auto pair = gen::random_equivalent_pair(rng, X, m);
    REQUIRE(equivalent(pair.a, pair.b, Xs, m));
    SLFormula f = gen::random_prenex_di(rng, X, m, 2 + rng.below(8));
    CHECK(eval_sl(pair.a, f) == eval_sl(pair.b, f));
  }
}

TEST_CASE("first order correspondence") {
  SLStructure I = mk({0, 1}, {{"x", 0}}, {{0, 1}});
  FOStructure M = corresponds(I);
  CHECK(M.universe == I.universe);
  CHECK(M.store == I.store);
  CHECK(M.preds.at("d") == std::set<Loc>{0});
  CHECK(M.fn.at(0) == 1);
  CHECK(M.fn.at(1) == 0);  // completed off dom(heap) with the smallest location

  FOStructure E = corresponds(mk({0}, {}, {}));
  CHECK(E.preds.at("d").empty());
  CHECK(E.fn.at(0) == 0);

  Rng rng(0xc03du);
  for (int i = 0; i < 200; ++i) {
    SLStructure R = gen::random_structure(rng, 5, {"x"});
    SLStructure back = sl_from_fo(corresponds(R));
    CHECK(same_structure(back, R));
  }
}

TEST_CASE("canonical stores use first-occurrence location order") {
  CHECK(canonical_stores({}, 3) ==
        std::vector<std::map<std::string, Loc>>{{}});
  CHECK(canonical_stores({"x"}, 2) ==
        std::vector<std::map<std::string, Loc>>{{{"x", 0}}});
  CHECK(canonical_stores({"x", "y"}, 3) ==
        std::vector<std::map<std::string, Loc>>{{{"x", 0}, {"y", 0}},
                                                {{"x", 0}, {"y", 1}}});
  CHECK(canonical_stores({"x", "y", "z"}, 2).size() == 4);
  CHECK(canonical_stores({"x", "y", "z"}, 3).size() == 5);
}

TEST_CASE("enumeration counts") {
  auto count = [](std::uint32_t u, const std::vector<std::string>& vars) {
    return enumerate_structures(u, vars, [](const SLStructure&) { return true; });
  };
  CHECK(count(1, {}) == 2);
  CHECK(count(2, {}) == 9);
  CHECK(count(3, {}) == 64);
  CHECK(count(4, {}) == 625);
  CHECK(count(1, {"x"}) == 2);
  CHECK(count(2, {"x", "y"}) == 18);

  // Early stop reports the number of structures actually visited.
  CHECK(enumerate_structures(2, {}, [k = 0](const SLStructure&) mutable {
          return ++k < 5;
        }) == 5);
}

TEST_CASE("heap enumerator slack tracks untouched locations") {
  std::uint64_t total = 0;
  for (HeapEnumerator e(3); !e.done(); e.advance()) {
    ++total;
    std::set<Loc> el = elems(e.heap());
    CHECK(e.slack() == 3 - el.size());
  }
  CHECK(total == 64);

  std::uint64_t sharded = 0;
  for (std::uint32_t d = 0; d <= 3; ++d) {
    for (HeapEnumerator e(3, d); !e.done(); e.advance()) {
      ++sharded;
      CHECK(e.digits()[0] == d);
    }
  }
  CHECK(sharded == 64);
}

TEST_CASE("structure text round trips") {
  SLStructure I = mk({0, 1, 2}, {{"x", 0}, {"y", 2}}, {{0, 1}, {1, 1}});
  std::string text = write_structure(I);
  CHECK(text == "universe 3\nstore x=0 y=2\nheap 0->1 1->1\n");
  CHECK(same_structure(parse_structure(text), I));

  SLStructure empty = mk({0, 1}, {}, {});
  CHECK(write_structure(empty) == "universe 2\nstore\nheap\n");
  CHECK(same_structure(parse_structure(write_structure(empty)), empty));

  // Sparse universes renumber order-preservingly on output.
  SLStructure sparse = mk({0, 1, 3}, {{"x", 0}}, {{0, 1}, {1, 3}});
  std::string out = write_structure(sparse);
  CHECK(out ==
        "# renumbered from: 0 1 3\nuniverse 3\nstore x=0\nheap 0->1 1->2\n");
  SLStructure re = parse_structure(out);
  CHECK(re.universe == std::vector<Loc>{0, 1, 2});
  CHECK(re.heap == std::map<Loc, Loc>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(parse_structure("universe 0\nstore\nheap\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_structure("universe 1\nstore\nheap 0->1\n"),
                  std::invalid_argument);

  FOStructure M;
  M.universe = {0, 1};
  M.store = {{"x", 1}};
  M.fn = {{0, 1}, {1, 1}};
  M.preds["d"] = {0};
  M.validate();
  std::string fo = write_fo_structure(M);
  CHECK(fo == "universe 2\nstore x=1\nfn 0->1 1->1\npred d = 0\n");
  FOStructure N = parse_fo_structure(fo);
  CHECK(N.universe == M.universe);
  CHECK(N.store == M.store);
  CHECK(N.fn == M.fn);
  CHECK(N.preds == M.preds);

  Rng rng(0x10a0u);
  for (int i = 0; i < 300; ++i) {
    SLStructure R = gen::random_structure(rng, 6, {"x", "y"});
    CHECK(same_structure(parse_structure(write_structure(R)), R));
  }
}
