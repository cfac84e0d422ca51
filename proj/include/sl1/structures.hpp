#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sl1/ast.hpp"

namespace sl1 {

using Loc = std::uint32_t;

// Finite universe, partial store, finite partial heap with one selector.
// The universe is a sorted vector of distinct ids; it need not be contiguous
// (contraction and restriction keep original ids).
struct SLStructure {
  std::vector<Loc> universe;
  std::map<std::string, Loc> store;
  std::map<Loc, Loc> heap;

  bool in_universe(Loc l) const;
  void validate() const;  // throws std::invalid_argument
};

// Total unary function fn and named unary predicates over the universe.
struct FOStructure {
  std::vector<Loc> universe;
  std::map<std::string, Loc> store;
  std::map<Loc, Loc> fn;
  std::map<std::string, std::set<Loc>> preds;

  bool in_universe(Loc l) const;
  void validate() const;
};

std::set<Loc> elems(const std::map<Loc, Loc>& heap);

// Indistinguishability of two structures by prenex sentences with n
// quantifiers over domain independent test atoms with free variables in X:
// same heap, same store equalities on X, pointwise-equal stores on X inside
// elems(heap), and at least n+|X| locations outside elems(heap) on both
// sides. Throws if a store misses some x in X.
bool equivalent(const SLStructure& a, const SLStructure& b,
                const std::set<std::string>& X, std::uint64_t n);

// FO image of an SL structure: d holds exactly on dom(heap), fn agrees with
// the heap there and maps everything else to the smallest universe element.
FOStructure corresponds(const SLStructure& I);
// Inverse direction: heap is fn restricted to the d predicate.
SLStructure sl_from_fo(const FOStructure& M);

// Text format (whitespace-insensitive, '#' comments):
//   universe 3
//   store x=0 y=2
//   heap 0->1 1->1
// All three lines are always written. Sparse universes are renumbered
// order-preservingly on output, with a "# renumbered from:" comment.
SLStructure parse_structure(const std::string& text);
std::string write_structure(const SLStructure& I);

// FO variant adds "fn 0->1 1->0 ..." (total) and "pred NAME = 0 2 ..." lines.
FOStructure parse_fo_structure(const std::string& text);
std::string write_fo_structure(const FOStructure& M);

// All stores over vars (in the given order) on universe {0..u-1} with values
// in first-use order: the first variable gets 0 and each later value is at
// most 1 + max of the earlier ones. Every (store, heap) pair is covered up to
// location renaming when heaps are enumerated in full.
std::vector<std::map<std::string, Loc>> canonical_stores(
    const std::vector<std::string>& vars, std::uint32_t u);

// Streams every (canonical store, heap) pair on universe {0..u-1} into fn in
// a fixed order (stores outer, heaps lexicographic inner); stops early when
// fn returns false. Returns the number of structures visited.
std::uint64_t enumerate_structures(std::uint32_t universe_size,
                                   const std::vector<std::string>& vars,
                                   const std::function<bool(const SLStructure&)>& fn);

// Odometer over every heap on universe {0..u-1}, in lexicographic order of
// the digit vector (one digit per location: 0 = unallocated, k = points to
// k-1; the last location's digit moves fastest). Supports sharding by the
// digit of location 0.
class HeapEnumerator {
 public:
  explicit HeapEnumerator(std::uint32_t u);
  // Enumerates only heaps whose digit for location 0 equals first_digit.
  HeapEnumerator(std::uint32_t u, std::uint32_t first_digit);

  bool done() const { return done_; }
  void advance();
  const std::map<Loc, Loc>& heap() const { return heap_; }
  const std::vector<std::uint32_t>& digits() const { return digits_; }
  // Number of locations outside dom(heap) ∪ img(heap), maintained per step.
  std::uint32_t slack() const;

 private:
  std::uint32_t u_;
  std::uint32_t fixed_first_ = 0;
  bool has_fixed_first_ = false;
  bool done_ = false;
  std::vector<std::uint32_t> digits_;
  std::map<Loc, Loc> heap_;
  std::vector<std::uint32_t> touch_;  // per location: dom membership + incoming edges
  std::uint32_t untouched_ = 0;

  void set_digit(std::uint32_t pos, std::uint32_t val);
};

}  // namespace sl1
