#include "sl1/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl1 {

bool SLStructure::in_universe(Loc l) const {
  return std::binary_search(universe.begin(), universe.end(), l);
}

void SLStructure::validate() const {
  if (universe.empty()) throw std::invalid_argument("structure: empty universe");
  if (!std::is_sorted(universe.begin(), universe.end()))
    throw std::invalid_argument("structure: universe not sorted");
  if (std::adjacent_find(universe.begin(), universe.end()) != universe.end())
    throw std::invalid_argument("structure: duplicate universe location");
  for (const auto& [v, l] : store)
    if (!in_universe(l))
      throw std::invalid_argument("structure: store value " + std::to_string(l) +
                                  " of '" + v + "' outside universe");
  for (const auto& [k, v] : heap) {
    if (!in_universe(k))
      throw std::invalid_argument("structure: heap domain location " + std::to_string(k) +
                                  " outside universe");
    if (!in_universe(v))
      throw std::invalid_argument("structure: heap image location " + std::to_string(v) +
                                  " outside universe");
  }
}

bool FOStructure::in_universe(Loc l) const {
  return std::binary_search(universe.begin(), universe.end(), l);
}

void FOStructure::validate() const {
  if (universe.empty()) throw std::invalid_argument("structure: empty universe");
  if (!std::is_sorted(universe.begin(), universe.end()))
    throw std::invalid_argument("structure: universe not sorted");
  if (std::adjacent_find(universe.begin(), universe.end()) != universe.end())
    throw std::invalid_argument("structure: duplicate universe location");
  for (const auto& [v, l] : store)
    if (!in_universe(l))
      throw std::invalid_argument("structure: store value of '" + v + "' outside universe");
  for (Loc l : universe)
    if (!fn.count(l))
      throw std::invalid_argument("structure: fn undefined on " + std::to_string(l));
  for (const auto& [k, v] : fn) {
    if (!in_universe(k) || !in_universe(v))
      throw std::invalid_argument("structure: fn entry outside universe");
  }
  for (const auto& [p, s] : preds)
    for (Loc l : s)
      if (!in_universe(l))
        throw std::invalid_argument("structure: predicate '" + p + "' holds outside universe");
}

std::set<Loc> elems(const std::map<Loc, Loc>& heap) {
  std::set<Loc> out;
  for (const auto& [k, v] : heap) {
    out.insert(k);
    out.insert(v);
  }
  return out;
}

bool equivalent(const SLStructure& a, const SLStructure& b,
                const std::set<std::string>& X, std::uint64_t n) {
  for (const auto& x : X) {
    if (!a.store.count(x))
      throw std::invalid_argument("equivalent: store undefined on '" + x + "'");
    if (!b.store.count(x))
      throw std::invalid_argument("equivalent: store undefined on '" + x + "'");
  }
  if (a.heap != b.heap) return false;
  std::set<Loc> el = elems(a.heap);
  for (const auto& x : X) {
    for (const auto& y : X) {
      bool ea = a.store.at(x) == a.store.at(y);
      bool eb = b.store.at(x) == b.store.at(y);
      if (ea != eb) return false;
    }
    Loc va = a.store.at(x), vb = b.store.at(x);
    if ((el.count(va) || el.count(vb)) && va != vb) return false;
  }
  auto outside = [&el](const SLStructure& s) {
    std::uint64_t c = 0;
    for (Loc l : s.universe)
      if (!el.count(l)) ++c;
    return c;
  };
  std::uint64_t need = n + X.size();
  return outside(a) >= need && outside(b) >= need;
}

FOStructure corresponds(const SLStructure& I) {
  FOStructure M;
  M.universe = I.universe;
  M.store = I.store;
  std::set<Loc> d;
  Loc def = I.universe.front();
  for (Loc l : I.universe) M.fn[l] = def;
  for (const auto& [k, v] : I.heap) {
    M.fn[k] = v;
    d.insert(k);
  }
  M.preds["d"] = d;
  return M;
}

SLStructure sl_from_fo(const FOStructure& M) {
  SLStructure I;
  I.universe = M.universe;
  I.store = M.store;
  auto it = M.preds.find("d");
  if (it != M.preds.end())
    for (Loc l : it->second) I.heap[l] = M.fn.at(l);
  return I;
}

// ---------------------------------------------------------------------------
// Text format.
// ---------------------------------------------------------------------------

namespace {

struct WordStream {
  std::vector<std::string> words;
  std::size_t pos = 0;

  explicit WordStream(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      std::string w;
      while (ls >> w) words.push_back(w);
    }
  }
  bool at_end() const { return pos >= words.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return at_end() ? empty : words[pos];
  }
  std::string next() {
    if (at_end()) throw std::invalid_argument("structure: unexpected end of input");
    return words[pos++];
  }
};

Loc parse_loc(const std::string& w) {
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("structure: expected location id, got '" + w + "'");
  unsigned long v = std::stoul(w);
  return static_cast<Loc>(v);
}

// "x=3" or "0->1" shaped words.
std::pair<std::string, std::string> split_on(const std::string& w, const std::string& sep) {
  auto p = w.find(sep);
  if (p == std::string::npos || p == 0 || p + sep.size() >= w.size())
    throw std::invalid_argument("structure: malformed entry '" + w + "'");
  return {w.substr(0, p), w.substr(p + sep.size())};
}

std::uint32_t parse_universe_header(WordStream& ws) {
  if (ws.next() != "universe") throw std::invalid_argument("structure: expected 'universe'");
  std::uint32_t u = parse_loc(ws.next());
  if (u == 0) throw std::invalid_argument("structure: universe must be nonempty");
  return u;
}

bool keyword(const std::string& w) {
  return w == "universe" || w == "store" || w == "heap" || w == "fn" || w == "pred";
}

}  // namespace

SLStructure parse_structure(const std::string& text) {
  WordStream ws(text);
  SLStructure I;
  std::uint32_t u = parse_universe_header(ws);
  for (Loc l = 0; l < u; ++l) I.universe.push_back(l);
  while (!ws.at_end()) {
    std::string section = ws.next();
    if (section == "store") {
      while (!ws.at_end() && !keyword(ws.peek())) {
        auto [name, val] = split_on(ws.next(), "=");
        I.store[name] = parse_loc(val);
      }
    } else if (section == "heap") {
      while (!ws.at_end() && !keyword(ws.peek())) {
        auto [from, to] = split_on(ws.next(), "->");
        I.heap[parse_loc(from)] = parse_loc(to);
      }
    } else {
      throw std::invalid_argument("structure: unexpected section '" + section + "'");
    }
  }
  I.validate();
  return I;
}

namespace {

// Order-preserving dense renumbering for sparse universes; identity when the
// universe is already 0..u-1.
std::map<Loc, Loc> renumbering(const std::vector<Loc>& universe, std::string& comment) {
  std::map<Loc, Loc> m;
  bool dense = true;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    m[universe[i]] = static_cast<Loc>(i);
    if (universe[i] != i) dense = false;
  }
  if (!dense) {
    comment = "# renumbered from:";
    for (Loc l : universe) comment += " " + std::to_string(l);
    comment += "\n";
  }
  return m;
}

}  // namespace

std::string write_structure(const SLStructure& I) {
  I.validate();
  std::string comment;
  std::map<Loc, Loc> rn = renumbering(I.universe, comment);
  std::string out = comment;
  out += "universe " + std::to_string(I.universe.size()) + "\n";
  out += "store";
  for (const auto& [v, l] : I.store) out += " " + v + "=" + std::to_string(rn.at(l));
  out += "\nheap";
  for (const auto& [k, v] : I.heap)
    out += " " + std::to_string(rn.at(k)) + "->" + std::to_string(rn.at(v));
  out += "\n";
  return out;
}

FOStructure parse_fo_structure(const std::string& text) {
  WordStream ws(text);
  FOStructure M;
  std::uint32_t u = parse_universe_header(ws);
  for (Loc l = 0; l < u; ++l) M.universe.push_back(l);
  while (!ws.at_end()) {
    std::string section = ws.next();
    if (section == "store") {
      while (!ws.at_end() && !keyword(ws.peek())) {
        auto [name, val] = split_on(ws.next(), "=");
        M.store[name] = parse_loc(val);
      }
    } else if (section == "fn") {
      while (!ws.at_end() && !keyword(ws.peek())) {
        auto [from, to] = split_on(ws.next(), "->");
        M.fn[parse_loc(from)] = parse_loc(to);
      }
    } else if (section == "pred") {
      std::string name = ws.next();
      if (ws.next() != "=") throw std::invalid_argument("structure: expected '=' after pred name");
      std::set<Loc>& s = M.preds[name];
      while (!ws.at_end() && !keyword(ws.peek())) s.insert(parse_loc(ws.next()));
    } else {
      throw std::invalid_argument("structure: unexpected section '" + section + "'");
    }
  }
  M.validate();
  return M;
}

std::string write_fo_structure(const FOStructure& M) {
  M.validate();
  std::string comment;
  std::map<Loc, Loc> rn = renumbering(M.universe, comment);
  std::string out = comment;
  out += "universe " + std::to_string(M.universe.size()) + "\n";
  out += "store";
  for (const auto& [v, l] : M.store) out += " " + v + "=" + std::to_string(rn.at(l));
  out += "\nfn";
  for (const auto& [k, v] : M.fn)
    out += " " + std::to_string(rn.at(k)) + "->" + std::to_string(rn.at(v));
  out += "\n";
  for (const auto& [p, s] : M.preds) {
    out += "pred " + p + " =";
    for (Loc l : s) out += " " + std::to_string(rn.at(l));
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

std::vector<std::map<std::string, Loc>> canonical_stores(
    const std::vector<std::string>& vars, std::uint32_t u) {
  std::vector<std::map<std::string, Loc>> out;
  if (u == 0) return out;
  std::vector<Loc> vals(vars.size(), 0);
  if (vars.empty()) {
    out.emplace_back();
    return out;
  }
  // Restricted-growth strings: vals[0] = 0, vals[i] <= 1 + max(vals[0..i-1]).
  std::size_t k = vars.size();
  for (;;) {
    std::map<std::string, Loc> s;
    for (std::size_t i = 0; i < k; ++i) s[vars[i]] = vals[i];
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i-- > 0) {
      Loc maxprev = 0;
      for (std::size_t j = 0; j < i; ++j) maxprev = std::max(maxprev, vals[j]);
      Loc cap = std::min<Loc>(i == 0 ? 0 : maxprev + 1, u - 1);
      if (vals[i] < cap) {
        ++vals[i];
        for (std::size_t j = i + 1; j < k; ++j) vals[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
  }
}

HeapEnumerator::HeapEnumerator(std::uint32_t u) : u_(u) {
  if (u == 0) throw std::invalid_argument("heap enumeration needs a nonempty universe");
  digits_.assign(u, 0);
  touch_.assign(u, 0);
  untouched_ = u;
}

HeapEnumerator::HeapEnumerator(std::uint32_t u, std::uint32_t first_digit) : HeapEnumerator(u) {
  if (first_digit > u) throw std::invalid_argument("heap shard digit out of range");
  has_fixed_first_ = true;
  fixed_first_ = first_digit;
  set_digit(0, first_digit);
}

void HeapEnumerator::set_digit(std::uint32_t pos, std::uint32_t val) {
  std::uint32_t old = digits_[pos];
  if (old == val) return;
  auto inc = [this](Loc x) {
    if (touch_[x]++ == 0) --untouched_;
  };
  auto dec = [this](Loc x) {
    if (--touch_[x] == 0) ++untouched_;
  };
  if (old > 0) {
    dec(pos);
    dec(old - 1);
  }
  if (val > 0) {
    inc(pos);
    inc(val - 1);
    heap_[pos] = val - 1;
  } else {
    heap_.erase(pos);
  }
  digits_[pos] = val;
}

void HeapEnumerator::advance() {
  std::uint32_t stop = has_fixed_first_ ? 1 : 0;
  std::uint32_t pos = u_;
  while (pos-- > stop) {
    if (digits_[pos] < u_) {
      set_digit(pos, digits_[pos] + 1);
      return;
    }
    set_digit(pos, 0);
    if (pos == stop) break;
  }
  done_ = true;
}

std::uint32_t HeapEnumerator::slack() const { return untouched_; }

std::uint64_t enumerate_structures(std::uint32_t universe_size,
                                   const std::vector<std::string>& vars,
                                   const std::function<bool(const SLStructure&)>& fn) {
  SLStructure I;
  I.universe.resize(universe_size);
  for (std::uint32_t i = 0; i < universe_size; ++i) I.universe[i] = i;
  std::uint64_t visited = 0;
  for (const auto& store : canonical_stores(vars, universe_size)) {
    I.store = store;
    for (HeapEnumerator e(universe_size); !e.done(); e.advance()) {
      I.heap = e.heap();
      ++visited;
      if (!fn(I)) return visited;
    }
  }
  return visited;
}

}  // namespace sl1
