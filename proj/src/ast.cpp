#include "sl1/ast.hpp"

#include <stdexcept>
#include <utility>

namespace sl1 {

SLFormula SLFormula::make(Node n) {
  SLFormula f;
  f.node_ = std::make_shared<const Node>(std::move(n));
  return f;
}

SLFormula SLFormula::ff() { return make({SLKind::False, "", "", 0, {}, {}}); }
SLFormula SLFormula::tt() { return make({SLKind::True, "", "", 0, {}, {}}); }
SLFormula SLFormula::emp() { return make({SLKind::Emp, "", "", 0, {}, {}}); }

SLFormula SLFormula::eq(std::string x, std::string y) {
  return make({SLKind::Eq, std::move(x), std::move(y), 0, {}, {}});
}
SLFormula SLFormula::points_to(std::string x, std::string y) {
  return make({SLKind::PointsTo, std::move(x), std::move(y), 0, {}, {}});
}
SLFormula SLFormula::hooks(std::string x, std::string y) {
  return make({SLKind::Hooks, std::move(x), std::move(y), 0, {}, {}});
}
SLFormula SLFormula::alloc(std::string x) {
  return make({SLKind::Alloc, std::move(x), "", 0, {}, {}});
}
SLFormula SLFormula::heap_ge(NatInf n) {
  return make({SLKind::HeapGe, "", "", n, {}, {}});
}
SLFormula SLFormula::univ_ge(std::uint64_t n) {
  return make({SLKind::UnivGe, "", "", n, {}, {}});
}
SLFormula SLFormula::heap_ge_univ_minus(std::uint64_t n) {
  return make({SLKind::HeapGeUnivMinus, "", "", n, {}, {}});
}
SLFormula SLFormula::negation(SLFormula f) {
  return make({SLKind::Not, "", "", 0, std::move(f), {}});
}
SLFormula SLFormula::conj(SLFormula a, SLFormula b) {
  return make({SLKind::And, "", "", 0, std::move(a), std::move(b)});
}
SLFormula SLFormula::disj(SLFormula a, SLFormula b) {
  return make({SLKind::Or, "", "", 0, std::move(a), std::move(b)});
}
SLFormula SLFormula::impl(SLFormula a, SLFormula b) {
  return disj(negation(std::move(a)), std::move(b));
}
SLFormula SLFormula::iff(SLFormula a, SLFormula b) {
  return conj(impl(a, b), impl(b, a));
}
SLFormula SLFormula::star(SLFormula a, SLFormula b) {
  return make({SLKind::Star, "", "", 0, std::move(a), std::move(b)});
}
SLFormula SLFormula::wand(SLFormula a, SLFormula b) {
  return make({SLKind::Wand, "", "", 0, std::move(a), std::move(b)});
}
SLFormula SLFormula::exists(std::string x, SLFormula f) {
  return make({SLKind::Exists, std::move(x), "", 0, std::move(f), {}});
}
SLFormula SLFormula::forall(std::string x, SLFormula f) {
  return make({SLKind::Forall, std::move(x), "", 0, std::move(f), {}});
}

bool operator==(const SLFormula& a, const SLFormula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.n != y.n) return false;
  if ((x.l.valid()) != (y.l.valid()) || (x.r.valid()) != (y.r.valid())) return false;
  if (x.l.valid() && !(x.l == y.l)) return false;
  if (x.r.valid() && !(x.r == y.r)) return false;
  return true;
}

FOTerm FOTerm::mkvar(std::string x) {
  FOTerm t;
  t.node_ = std::make_shared<const Node>(Node{TermKind::Var, std::move(x), {}});
  return t;
}
FOTerm FOTerm::app(FOTerm sub) {
  FOTerm t;
  t.node_ = std::make_shared<const Node>(Node{TermKind::App, "", std::move(sub)});
  return t;
}

bool operator==(const FOTerm& a, const FOTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == TermKind::Var) return a.var() == b.var();
  return a.arg() == b.arg();
}

FOFormula FOFormula::make(Node n) {
  FOFormula f;
  f.node_ = std::make_shared<const Node>(std::move(n));
  return f;
}

FOFormula FOFormula::ff() { return make({FOKind::False, "", {}, {}, {}, {}}); }
FOFormula FOFormula::tt() { return make({FOKind::True, "", {}, {}, {}, {}}); }
FOFormula FOFormula::eq(FOTerm a, FOTerm b) {
  return make({FOKind::Eq, "", std::move(a), std::move(b), {}, {}});
}
FOFormula FOFormula::pred(std::string p, FOTerm t) {
  return make({FOKind::Pred, std::move(p), std::move(t), {}, {}, {}});
}
FOFormula FOFormula::negation(FOFormula f) {
  return make({FOKind::Not, "", {}, {}, std::move(f), {}});
}
FOFormula FOFormula::conj(FOFormula a, FOFormula b) {
  return make({FOKind::And, "", {}, {}, std::move(a), std::move(b)});
}
FOFormula FOFormula::disj(FOFormula a, FOFormula b) {
  return make({FOKind::Or, "", {}, {}, std::move(a), std::move(b)});
}
FOFormula FOFormula::impl(FOFormula a, FOFormula b) {
  return disj(negation(std::move(a)), std::move(b));
}
FOFormula FOFormula::iff(FOFormula a, FOFormula b) {
  return conj(impl(a, b), impl(b, a));
}
FOFormula FOFormula::exists(std::string x, FOFormula f) {
  return make({FOKind::Exists, std::move(x), {}, {}, std::move(f), {}});
}
FOFormula FOFormula::forall(std::string x, FOFormula f) {
  return make({FOKind::Forall, std::move(x), {}, {}, std::move(f), {}});
}

bool operator==(const FOFormula& a, const FOFormula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name) return false;
  if (x.t1.valid() != y.t1.valid() || x.t2.valid() != y.t2.valid()) return false;
  if (x.t1.valid() && !(x.t1 == y.t1)) return false;
  if (x.t2.valid() && !(x.t2 == y.t2)) return false;
  if (x.l.valid() != y.l.valid() || x.r.valid() != y.r.valid()) return false;
  if (x.l.valid() && !(x.l == y.l)) return false;
  if (x.r.valid() && !(x.r == y.r)) return false;
  return true;
}

// --------------------------------------------------------------------------

std::uint64_t size_of(const SLFormula& f) {
  switch (f.kind()) {
    case SLKind::False:
    case SLKind::True:
    case SLKind::Emp:
      return 1;
    case SLKind::Eq:
    case SLKind::PointsTo:
    case SLKind::Hooks:
      return 3;
    case SLKind::Alloc:
      return 2;
    case SLKind::HeapGe:
    case SLKind::UnivGe:
      return 3;  // |h| (or |U|), >=, n
    case SLKind::HeapGeUnivMinus:
      return 5;  // |h|, >=, |U|, -, n
    case SLKind::Not:
      return 1 + size_of(f.lhs());
    case SLKind::And:
    case SLKind::Or:
    case SLKind::Star:
    case SLKind::Wand:
      return 1 + size_of(f.lhs()) + size_of(f.rhs());
    case SLKind::Exists:
    case SLKind::Forall:
      return 2 + size_of(f.body());
  }
  throw std::logic_error("size_of: bad kind");
}

static std::uint64_t size_of(const FOTerm& t) {
  return t.kind() == TermKind::Var ? 1 : 1 + size_of(t.arg());
}

std::uint64_t size_of(const FOFormula& f) {
  switch (f.kind()) {
    case FOKind::False:
    case FOKind::True:
      return 1;
    case FOKind::Eq:
      return 1 + size_of(f.t1()) + size_of(f.t2());
    case FOKind::Pred:
      return 1 + size_of(f.t1());
    case FOKind::Not:
      return 1 + size_of(f.lhs());
    case FOKind::And:
    case FOKind::Or:
      return 1 + size_of(f.lhs()) + size_of(f.rhs());
    case FOKind::Exists:
    case FOKind::Forall:
      return 2 + size_of(f.body());
  }
  throw std::logic_error("size_of: bad kind");
}

namespace {

void collect_sl(const SLFormula& f, std::set<std::string>& bound,
                std::set<std::string>& free, std::set<std::string>* all) {
  auto var = [&](const std::string& v) {
    if (all) all->insert(v);
    if (!bound.count(v)) free.insert(v);
  };
  switch (f.kind()) {
    case SLKind::False:
    case SLKind::True:
    case SLKind::Emp:
    case SLKind::HeapGe:
    case SLKind::UnivGe:
    case SLKind::HeapGeUnivMinus:
      return;
    case SLKind::Eq:
    case SLKind::PointsTo:
    case SLKind::Hooks:
      var(f.var1());
      var(f.var2());
      return;
    case SLKind::Alloc:
      var(f.var1());
      return;
    case SLKind::Not:
      collect_sl(f.lhs(), bound, free, all);
      return;
    case SLKind::And:
    case SLKind::Or:
    case SLKind::Star:
    case SLKind::Wand:
      collect_sl(f.lhs(), bound, free, all);
      collect_sl(f.rhs(), bound, free, all);
      return;
    case SLKind::Exists:
    case SLKind::Forall: {
      if (all) all->insert(f.var1());
      bool fresh = bound.insert(f.var1()).second;
      collect_sl(f.body(), bound, free, all);
      if (fresh) bound.erase(f.var1());
      return;
    }
  }
}

void collect_term(const FOTerm& t, std::set<std::string>& bound,
                  std::set<std::string>& free, std::set<std::string>* all) {
  if (t.kind() == TermKind::Var) {
    if (all) all->insert(t.var());
    if (!bound.count(t.var())) free.insert(t.var());
  } else {
    collect_term(t.arg(), bound, free, all);
  }
}

void collect_fo(const FOFormula& f, std::set<std::string>& bound,
                std::set<std::string>& free, std::set<std::string>* all) {
  switch (f.kind()) {
    case FOKind::False:
    case FOKind::True:
      return;
    case FOKind::Eq:
      collect_term(f.t1(), bound, free, all);
      collect_term(f.t2(), bound, free, all);
      return;
    case FOKind::Pred:
      collect_term(f.t1(), bound, free, all);
      return;
    case FOKind::Not:
      collect_fo(f.lhs(), bound, free, all);
      return;
    case FOKind::And:
    case FOKind::Or:
      collect_fo(f.lhs(), bound, free, all);
      collect_fo(f.rhs(), bound, free, all);
      return;
    case FOKind::Exists:
    case FOKind::Forall: {
      if (all) all->insert(f.name());
      bool fresh = bound.insert(f.name()).second;
      collect_fo(f.body(), bound, free, all);
      if (fresh) bound.erase(f.name());
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const SLFormula& f) {
  std::set<std::string> bound, free;
  collect_sl(f, bound, free, nullptr);
  return free;
}
std::set<std::string> free_vars(const FOFormula& f) {
  std::set<std::string> bound, free;
  collect_fo(f, bound, free, nullptr);
  return free;
}
std::set<std::string> all_vars(const SLFormula& f) {
  std::set<std::string> bound, free, all;
  collect_sl(f, bound, free, &all);
  return all;
}
std::set<std::string> all_vars(const FOFormula& f) {
  std::set<std::string> bound, free, all;
  collect_fo(f, bound, free, &all);
  return all;
}

namespace {

bool quantifier_free_sl(const SLFormula& f) {
  switch (f.kind()) {
    case SLKind::Exists:
    case SLKind::Forall:
      return false;
    case SLKind::Not:
      return quantifier_free_sl(f.lhs());
    case SLKind::And:
    case SLKind::Or:
    case SLKind::Star:
    case SLKind::Wand:
      return quantifier_free_sl(f.lhs()) && quantifier_free_sl(f.rhs());
    default:
      return true;
  }
}

bool quantifier_free_fo(const FOFormula& f) {
  switch (f.kind()) {
    case FOKind::Exists:
    case FOKind::Forall:
      return false;
    case FOKind::Not:
      return quantifier_free_fo(f.lhs());
    case FOKind::And:
    case FOKind::Or:
      return quantifier_free_fo(f.lhs()) && quantifier_free_fo(f.rhs());
    default:
      return true;
  }
}

PrefixClass classify_word(const std::string& word, bool matrix_qf) {
  PrefixClass pc;
  if (!matrix_qf) {
    pc.tag = PrefixTag::NonPrenex;
    return pc;
  }
  if (word.empty()) {
    pc.tag = PrefixTag::QuantifierFree;
    return pc;
  }
  pc.word = word;
  std::size_t i = 0;
  while (i < word.size() && word[i] == 'E') ++i;
  std::size_t j = i;
  while (j < word.size() && word[j] == 'A') ++j;
  if (j == word.size()) {
    pc.tag = PrefixTag::BSR;
    pc.n = static_cast<unsigned>(i);
    pc.m = static_cast<unsigned>(word.size() - i);
  } else {
    pc.tag = PrefixTag::Prenex;
  }
  return pc;
}

}  // namespace

std::string PrefixClass::str() const {
  switch (tag) {
    case PrefixTag::QuantifierFree:
      return "quantifier-free";
    case PrefixTag::BSR:
      return "bsr(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case PrefixTag::Prenex:
      return "prenex(" + word + ")";
    case PrefixTag::NonPrenex:
      return "non-prenex";
  }
  return "?";
}

PrefixClass classify_prefix(const SLFormula& f) {
  std::string word;
  SLFormula cur = f;
  while (cur.kind() == SLKind::Exists || cur.kind() == SLKind::Forall) {
    word.push_back(cur.kind() == SLKind::Exists ? 'E' : 'A');
    cur = cur.body();
  }
  return classify_word(word, quantifier_free_sl(cur));
}

PrefixClass classify_prefix(const FOFormula& f) {
  std::string word;
  FOFormula cur = f;
  while (cur.kind() == FOKind::Exists || cur.kind() == FOKind::Forall) {
    word.push_back(cur.kind() == FOKind::Exists ? 'E' : 'A');
    cur = cur.body();
  }
  return classify_word(word, quantifier_free_fo(cur));
}

PrenexParts prenex_parts(const SLFormula& f) {
  PrenexParts out;
  SLFormula cur = f;
  while (cur.kind() == SLKind::Exists || cur.kind() == SLKind::Forall) {
    out.prefix.emplace_back(cur.kind() == SLKind::Exists ? 'E' : 'A', cur.var1());
    cur = cur.body();
  }
  if (!quantifier_free_sl(cur)) throw std::invalid_argument("prenex_parts: formula is not prenex");
  out.matrix = cur;
  return out;
}

// --------------------------------------------------------------------------
// Flattening. extract() peels nested applications off a term, emitting flat
// defining equations f(v) = z with fresh z.
// --------------------------------------------------------------------------

namespace {

struct FreshNames {
  std::set<std::string> used;
  unsigned next = 1;
  std::string fresh() {
    for (;;) {
      std::string cand = "z" + std::to_string(next++);
      if (!used.count(cand)) {
        used.insert(cand);
        return cand;
      }
    }
  }
};

// Returns a variable naming t's value; defs receives equations f(v) = z in
// dependency order.
FOTerm extract(const FOTerm& t, FreshNames& names,
               std::vector<std::pair<FOTerm, std::string>>& defs) {
  if (t.kind() == TermKind::Var) return t;
  FOTerm inner = extract(t.arg(), names, defs);
  std::string z = names.fresh();
  defs.emplace_back(FOTerm::app(inner), z);
  return FOTerm::mkvar(z);
}

bool term_flat_arg(const FOTerm& t) { return t.kind() == TermKind::Var; }

bool atom_flat(const FOFormula& f) {
  if (f.kind() == FOKind::Pred) return term_flat_arg(f.t1());
  // Eq: var = var, f(var) = var, var = f(var)
  const FOTerm& a = f.t1();
  const FOTerm& b = f.t2();
  auto ok = [](const FOTerm& t) {
    return t.kind() == TermKind::Var ||
           (t.kind() == TermKind::App && term_flat_arg(t.arg()));
  };
  if (!ok(a) || !ok(b)) return false;
  return !(a.kind() == TermKind::App && b.kind() == TermKind::App);
}

FOFormula flatten_atom(const FOFormula& f, bool positive, FreshNames& names) {
  if (atom_flat(f)) return f;
  std::vector<std::pair<FOTerm, std::string>> defs;
  FOFormula core;
  if (f.kind() == FOKind::Pred) {
    FOTerm v = extract(f.t1(), names, defs);
    core = FOFormula::pred(f.name(), v);
  } else {
    const FOTerm& a = f.t1();
    const FOTerm& b = f.t2();
    // Keep one application in place when the other side reduces to a
    // variable, so f(x) = y style atoms survive with minimal fresh names.
    if (a.kind() == TermKind::App && b.kind() == TermKind::Var) {
      FOTerm v = extract(a.arg(), names, defs);
      core = FOFormula::eq(FOTerm::app(v), b);
    } else if (a.kind() == TermKind::Var && b.kind() == TermKind::App) {
      FOTerm v = extract(b.arg(), names, defs);
      core = FOFormula::eq(a, FOTerm::app(v));
    } else {
      FOTerm va = extract(a, names, defs);
      FOTerm vb = extract(b, names, defs);
      core = FOFormula::eq(va, vb);
    }
  }
  if (defs.empty()) return core;
  if (positive) {
    // exists z... (defs /\ core)
    FOFormula body = core;
    for (auto it = defs.rbegin(); it != defs.rend(); ++it)
      body = FOFormula::conj(FOFormula::eq(it->first, FOTerm::mkvar(it->second)), body);
    for (auto it = defs.rbegin(); it != defs.rend(); ++it)
      body = FOFormula::exists(it->second, body);
    return body;
  }
  // forall z... (defs -> core)
  FOFormula ante;
  for (const auto& d : defs) {
    FOFormula e = FOFormula::eq(d.first, FOTerm::mkvar(d.second));
    ante = ante.valid() ? FOFormula::conj(ante, e) : e;
  }
  FOFormula body = FOFormula::disj(FOFormula::negation(ante), core);
  for (auto it = defs.rbegin(); it != defs.rend(); ++it)
    body = FOFormula::forall(it->second, body);
  return body;
}

FOFormula flatten_rec(const FOFormula& f, bool positive, FreshNames& names) {
  switch (f.kind()) {
    case FOKind::False:
    case FOKind::True:
      return f;
    case FOKind::Eq:
    case FOKind::Pred:
      return flatten_atom(f, positive, names);
    case FOKind::Not:
      return FOFormula::negation(flatten_rec(f.lhs(), !positive, names));
    case FOKind::And:
      return FOFormula::conj(flatten_rec(f.lhs(), positive, names),
                             flatten_rec(f.rhs(), positive, names));
    case FOKind::Or:
      return FOFormula::disj(flatten_rec(f.lhs(), positive, names),
                             flatten_rec(f.rhs(), positive, names));
    case FOKind::Exists:
      return FOFormula::exists(f.name(), flatten_rec(f.body(), positive, names));
    case FOKind::Forall:
      return FOFormula::forall(f.name(), flatten_rec(f.body(), positive, names));
  }
  throw std::logic_error("flatten_fo: bad kind");
}

}  // namespace

FOFormula flatten_fo(const FOFormula& f) {
  FreshNames names;
  names.used = all_vars(f);
  return flatten_rec(f, true, names);
}

}  // namespace sl1
