#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sl1/nat_inf.hpp"
#include "sl1/structures.hpp"

namespace sl1 {

struct FrontierSets {
  std::set<Loc> v;     // L together with the store image of X
  std::set<Loc> vbar;  // closure of v under heap application
  std::set<Loc> w;     // v plus vbar members with >= 2 heap predecessors in vbar
};

// Throws std::invalid_argument when the store misses some x in X or L leaves
// the universe.
FrontierSets frontier_sets(const SLStructure& I, const std::set<std::string>& X,
                           const std::set<Loc>& L);

// The maximal heap walk <l0, l1, ..., ln> with l1..ln in dom(heap) \ W,
// stopping once heap(ln) lands in W or heap(heap(ln)) is undefined. Finite N
// truncates to the first min(n, N) + 1 elements. Throws when l0 is
// unallocated or the walk revisits a location (impossible for l0 in W).
std::vector<Loc> segment(const SLStructure& I, Loc l0, const FrontierSets& sets,
                         NatInf N);

struct ContractionResult {
  SLStructure structure;
  // (U \ vbar) plus the truncated segment cells. structure.universe may add
  // retarget or copied-edge targets that fall outside this set; they are
  // needed to keep the heap image inside the universe.
  std::set<Loc> kept_universe;
  std::set<Loc> vbar;
  std::uint64_t segment_cells = 0;  // sum of truncated segment lengths over w
  std::uint64_t sx_size = 0;        // |store image of X|
  std::uint64_t l_size = 0;         // |L|
};

// Shortens every heap segment between frontier locations to at most N cells:
// the universe keeps everything outside vbar plus the truncated segments,
// interior segment cells keep their heap edges, and each truncated tail is
// re-targeted to the first heap iterate that reaches w or the location just
// before a dangling edge. Requires N >= 1.
ContractionResult contract_result(const SLStructure& I, std::uint64_t N,
                                  const std::set<std::string>& X,
                                  const std::set<Loc>& L);
SLStructure contract(const SLStructure& I, std::uint64_t N,
                     const std::set<std::string>& X, const std::set<Loc>& L);

// Universe becomes vbar, heap drops cells outside it, store entries whose
// value leaves vbar are dropped (X entries always survive). Throws when vbar
// is empty.
SLStructure restrict_structure(const SLStructure& I, const std::set<std::string>& X,
                               const std::set<Loc>& L);

// Picks L = L1 u L2 with |L ∩ dom(heap)| = N (lowest-id allocated locations
// off the store image) and, when achievable, |(L u s(X)) \ dom(heap)| =
// min(|U \ dom(heap)|, N+1). Absent when |dom(heap)| < N + |X|.
std::optional<std::set<Loc>> choose_L(const SLStructure& I,
                                      const std::set<std::string>& X,
                                      std::uint64_t N);

}  // namespace sl1
