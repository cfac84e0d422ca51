#include "sl1/contraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sl1 {

namespace {

std::set<Loc> store_image(const SLStructure& I, const std::set<std::string>& X) {
  std::set<Loc> sx;
  for (const auto& x : X) {
    auto it = I.store.find(x);
    if (it == I.store.end())
      throw std::invalid_argument("store has no value for variable " + x);
    sx.insert(it->second);
  }
  return sx;
}

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace

FrontierSets frontier_sets(const SLStructure& I, const std::set<std::string>& X,
                           const std::set<Loc>& L) {
  for (Loc l : L)
    if (!I.in_universe(l))
      throw std::invalid_argument("frontier location " + std::to_string(l) +
                                  " is outside the universe");
  FrontierSets fs;
  fs.v = store_image(I, X);
  fs.v.insert(L.begin(), L.end());

  fs.vbar = fs.v;
  std::vector<Loc> work(fs.vbar.begin(), fs.vbar.end());
  while (!work.empty()) {
    Loc l = work.back();
    work.pop_back();
    auto it = I.heap.find(l);
    if (it != I.heap.end() && fs.vbar.insert(it->second).second)
      work.push_back(it->second);
  }

  fs.w = fs.v;
  std::map<Loc, std::uint32_t> preds;
  for (Loc l : fs.vbar) {
    auto it = I.heap.find(l);
    if (it != I.heap.end() && fs.vbar.count(it->second)) ++preds[it->second];
  }
  for (const auto& [l, c] : preds)
    if (c >= 2) fs.w.insert(l);
  return fs;
}

std::vector<Loc> segment(const SLStructure& I, Loc l0, const FrontierSets& sets,
                         NatInf N) {
  if (!I.heap.count(l0))
    throw std::invalid_argument("segment start " + std::to_string(l0) +
                                " is unallocated");
  std::vector<Loc> seq{l0};
  std::set<Loc> seen{l0};
  Loc cur = l0;
  for (;;) {
    Loc next = I.heap.at(cur);
    if (sets.w.count(next)) break;           // ends at the frontier
    if (!I.heap.count(next)) break;          // next edge dangles
    if (!seen.insert(next).second)
      throw std::invalid_argument("segment walk revisits location " +
                                  std::to_string(next));
    seq.push_back(next);
    cur = next;
  }
  if (!N.is_inf()) {
    std::uint64_t keep = std::min<std::uint64_t>(seq.size() - 1, N.value()) + 1;
    seq.resize(keep);
  }
  return seq;
}

ContractionResult contract_result(const SLStructure& I, std::uint64_t N,
                                  const std::set<std::string>& X,
                                  const std::set<Loc>& L) {
  if (N == 0) throw std::invalid_argument("contract: N must be at least 1");
  I.validate();
  FrontierSets fs = frontier_sets(I, X, L);

  ContractionResult out;
  out.vbar = fs.vbar;
  out.sx_size = store_image(I, X).size();
  out.l_size = L.size();

  for (Loc l : I.universe)
    if (!fs.vbar.count(l)) out.kept_universe.insert(l);

  std::map<Loc, std::vector<Loc>> segs;
  for (Loc l0 : fs.w) {
    std::vector<Loc> seg =
        I.heap.count(l0) ? segment(I, l0, fs, NatInf(N)) : std::vector<Loc>{l0};
    out.segment_cells += seg.size();
    for (Loc l : seg) out.kept_universe.insert(l);
    segs.emplace(l0, std::move(seg));
  }
  // |w| <= 2(|s(X)|+|L|) and each truncated segment has at most N+1 cells.
  check(out.segment_cells <= 2 * (N + 1) * (out.sx_size + out.l_size),
        "contract: segment cell count exceeds its bound");

  std::map<Loc, Loc> h2;
  for (const auto& [a, b] : I.heap)
    if (!fs.vbar.count(a)) h2[a] = b;

  for (const auto& [l0, seg] : segs) {
    if (!I.heap.count(l0)) continue;
    const std::size_t M = seg.size() - 1;
    // Cells before the tail keep their edges; for M = 0 the tail rule below
    // replaces the plain copy on w.
    for (std::size_t i = 0; i < M; ++i) h2[seg[i]] = I.heap.at(seg[i]);
    Loc cur = I.heap.at(seg[M]);
    std::set<Loc> seen;
    while (!fs.w.count(cur) && I.heap.count(cur)) {
      check(seen.insert(cur).second, "contract: retarget walk cycles outside w");
      cur = I.heap.at(cur);
    }
    h2[seg[M]] = cur;
  }

  std::set<Loc> universe = out.kept_universe;
  for (const auto& [a, b] : h2) {
    check(universe.count(a) != 0, "contract: heap source left the universe");
    universe.insert(b);  // rescue retarget and copied-edge targets
  }

  out.structure.universe.assign(universe.begin(), universe.end());
  out.structure.heap = std::move(h2);
  for (const auto& [x, l] : I.store)
    if (universe.count(l)) out.structure.store.emplace(x, l);
  out.structure.validate();
  return out;
}

SLStructure contract(const SLStructure& I, std::uint64_t N,
                     const std::set<std::string>& X, const std::set<Loc>& L) {
  return contract_result(I, N, X, L).structure;
}

SLStructure restrict_structure(const SLStructure& I, const std::set<std::string>& X,
                               const std::set<Loc>& L) {
  I.validate();
  FrontierSets fs = frontier_sets(I, X, L);
  if (fs.vbar.empty())
    throw std::invalid_argument("restrict: nothing reachable from X and L");

  SLStructure out;
  out.universe.assign(fs.vbar.begin(), fs.vbar.end());
  for (const auto& [a, b] : I.heap)
    if (fs.vbar.count(a)) {
      check(fs.vbar.count(b) != 0, "restrict: heap image escapes vbar");
      out.heap.emplace(a, b);
    }
  for (const auto& [x, l] : I.store)
    if (fs.vbar.count(l)) out.store.emplace(x, l);
  out.validate();
  return out;
}

std::optional<std::set<Loc>> choose_L(const SLStructure& I,
                                      const std::set<std::string>& X,
                                      std::uint64_t N) {
  std::set<Loc> sx = store_image(I, X);
  if (I.heap.size() < N + X.size()) return std::nullopt;

  std::set<Loc> L;
  std::uint64_t taken = 0;
  for (const auto& [a, b] : I.heap) {
    (void)b;
    if (taken == N) break;
    if (!sx.count(a)) {
      L.insert(a);
      ++taken;
    }
  }
  check(taken == N, "choose_L: not enough allocated locations off the store");

  std::uint64_t unalloc = I.universe.size() - I.heap.size();
  std::uint64_t target = std::min<std::uint64_t>(unalloc, N + 1);
  std::uint64_t have = 0;  // |s(X) \ dom(heap)|
  for (Loc l : sx)
    if (!I.heap.count(l)) ++have;
  std::uint64_t need = target > have ? target - have : 0;
  for (Loc l : I.universe) {
    if (need == 0) break;
    if (!I.heap.count(l) && !sx.count(l) && !L.count(l)) {
      L.insert(l);
      --need;
    }
  }
  check(need == 0, "choose_L: ran out of unallocated locations");

  std::uint64_t outside = have;
  for (Loc l : L)
    if (!I.heap.count(l) && !sx.count(l)) ++outside;
  check(outside == std::max<std::uint64_t>(target, have),
        "choose_L: cardinality equation violated");
  return L;
}

}  // namespace sl1
