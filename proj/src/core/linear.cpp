#include "core/linear.hpp"

#include <algorithm>
#include <set>

#include "core/branching.hpp"

namespace sk {

namespace {

bool classes_less(const std::vector<CP>& a, const std::vector<CP>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      canon_less);
}

}  // namespace

bool ObsItem::operator<(const ObsItem& o) const {
  if (k != o.k) return k < o.k;
  if (act != o.act) return act < o.act;
  if (acts != o.acts) return acts < o.acts;
  if (traces != o.traces) return traces < o.traces;
  return classes_less(classes, o.classes);
}

bool Obs::operator<(const Obs& o) const {
  if (sem != o.sem) return sem < o.sem;
  return std::lexicographical_compare(items.begin(), items.end(),
                                      o.items.begin(), o.items.end());
}

namespace {

bool is_pair_family(Sem s) {
  return s == Sem::F || s == Sem::R || s == Sem::IF || s == Sem::PF ||
         s == Sem::IS || s == Sem::PS;
}

ObsItem::K set_kind(Sem s) {
  switch (sem_datum(s)) {
    case Datum::Acts: return ObsItem::Acts;
    case Datum::Traces: return ObsItem::Traces;
    case Datum::Classes: return ObsItem::Classes;
    default: return ObsItem::Act;
  }
}

// the per-state relation the matching deciders use: "q' can stand in for p'"
bool state_rel(Ctx& cx, Sem s, CP qs, CP ps) {
  switch (s) {
    case Sem::F: case Sem::FT:
      return (qs->initials & ~ps->initials) == 0;
    case Sem::R: case Sem::RT:
      return qs->initials == ps->initials;
    case Sem::IF: case Sem::IFT: {
      const TraceSet& tp = cx.traces_of(ps);
      const TraceSet& tq = cx.traces_of(qs);
      return std::includes(tp.begin(), tp.end(), tq.begin(), tq.end());
    }
    case Sem::PF: case Sem::PFT:
      return cx.traces_of(ps) == cx.traces_of(qs);
    case Sem::IS: case Sem::IST:
      return sim(cx, qs, ps);
    case Sem::PS: case Sem::PST:
      return sim(cx, qs, ps) && sim(cx, ps, qs);
    default:
      return false;
  }
}

// does the set item hold at this state (the "refusal step" of the observation
// system: stay in place, check the datum)
bool datum_ok(Ctx& cx, Sem s, CP st, const ObsItem& it) {
  switch (s) {
    case Sem::F: case Sem::FT:
      return (st->initials & it.acts) == 0;
    case Sem::R: case Sem::RT:
      return st->initials == it.acts;
    case Sem::IF: case Sem::IFT: {
      const TraceSet& ts = cx.traces_of(st);
      for (const Trace& t : it.traces)
        if (std::binary_search(ts.begin(), ts.end(), t)) return false;
      return true;
    }
    case Sem::PF: case Sem::PFT:
      return cx.traces_of(st) == it.traces;
    case Sem::IS: case Sem::IST:
      for (CP c : it.classes)
        if (sim(cx, c, st)) return false;
      return true;
    case Sem::PS: case Sem::PST: {
      for (CP c : it.classes)
        if (!sim(cx, c, st)) return false;
      // nothing simulated by the state may be missing from the class set
      std::vector<CP> have = sim_class_set(cx, st, st->depth);
      if (have.size() != it.classes.size()) return false;
      for (size_t i = 0; i < have.size(); ++i)
        if (have[i] != it.classes[i]) return false;
      return true;
    }
    default:
      return false;
  }
}

// deduplicated reachable (trace, state) pairs, root first
std::vector<std::pair<Trace, CP>> reachable_dedup(CP p) {
  std::vector<std::pair<Trace, CP>> all = reachable_states(p);
  std::set<std::pair<Trace, uint32_t>> seen;
  std::vector<std::pair<Trace, CP>> out;
  for (auto& [t, c] : all)
    if (seen.emplace(t, c->id).second) out.push_back({t, c});
  return out;
}

// all root-to-leaf paths as (action, state) steps; the root enters with
// action -1
using Path = std::vector<std::pair<int, CP>>;

std::vector<Path> paths(CP p) {
  std::vector<Path> out;
  Path cur;
  // iterative DFS with explicit recursion
  struct Frame { CP node; size_t next_kid; };
  cur.push_back({-1, p});
  std::vector<Frame> stack = {{p, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.node->kids.empty() && f.next_kid == 0) {
      out.push_back(cur);
      stack.pop_back();
      cur.pop_back();
      continue;
    }
    if (f.next_kid == f.node->kids.size()) {
      stack.pop_back();
      cur.pop_back();
      continue;
    }
    auto& [a, c] = f.node->kids[f.next_kid++];
    cur.push_back({a, c});
    stack.push_back({c, 0});
  }
  return out;
}

std::vector<CP> states_after(CP p, const Trace& t) {
  std::vector<CP> cur = {p};
  for (int a : t) {
    std::vector<CP> next;
    for (CP s : cur)
      for (auto& [b, c] : s->kids)
        if (b == a) next.push_back(c);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

bool match_path(Ctx& cx, Sem s, const Path& path, size_t i, CP qs) {
  if (!state_rel(cx, s, qs, path[i].second)) return false;
  if (i + 1 == path.size()) return true;
  int a = path[i + 1].first;
  for (auto& [b, c] : qs->kids)
    if (b == a && match_path(cx, s, path, i + 1, c)) return true;
  return false;
}

bool includes_sorted(const TraceSet& big, const TraceSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool linear_pre(Ctx& cx, Sem s, CP p, CP q) {
  if (p == q) return true;
  uint64_t key = key3(s, p->id, q->id);
  auto it = cx.pre_memo.find(key);
  if (it != cx.pre_memo.end()) return it->second;

  bool r = true;
  if (s == Sem::T) {
    r = includes_sorted(cx.traces_of(q), cx.traces_of(p));
  } else if (s == Sem::CT) {
    r = includes_sorted(cx.ctraces_of(q), cx.ctraces_of(p));
  } else if (is_pair_family(s)) {
    for (auto& [t, ps] : reachable_dedup(p)) {
      bool found = false;
      for (CP qs : states_after(q, t))
        if (state_rel(cx, s, qs, ps)) { found = true; break; }
      if (!found) { r = false; break; }
    }
  } else {
    for (const Path& path : paths(p))
      if (!match_path(cx, s, path, 0, q)) { r = false; break; }
  }

  cx.pre_memo.emplace(key, r);
  return r;
}

bool preorder(Ctx& cx, Sem s, CP p, CP q) {
  if (sem_is_branching(s) || s == Sem::CONF) return branching_pre(cx, s, p, q);
  return linear_pre(cx, s, p, q);
}

std::string linear_witness(Ctx& cx, Sem s, CP p, CP q) {
  if (s == Sem::T || s == Sem::CT) {
    const TraceSet& tp = s == Sem::T ? cx.traces_of(p) : cx.ctraces_of(p);
    const TraceSet& tq = s == Sem::T ? cx.traces_of(q) : cx.ctraces_of(q);
    for (const Trace& t : tp)
      if (!std::binary_search(tq.begin(), tq.end(), t))
        return std::string(s == Sem::T ? "trace '" : "complete trace '") +
               trace_to_string(t, cx.al) + "' of lhs is missing on rhs";
    return "trace sets agree";  // unreachable when the preorder fails
  }
  if (is_pair_family(s)) {
    for (auto& [t, ps] : reachable_dedup(p)) {
      bool found = false;
      for (CP qs : states_after(q, t))
        if (state_rel(cx, s, qs, ps)) { found = true; break; }
      if (!found)
        return "reachable state '" + ps->text + "' after '" +
               trace_to_string(t, cx.al) +
               "' has no rhs counterpart under the " +
               std::string(sem_name(s)) + " state relation";
    }
    return "all reachable states matched";
  }
  for (const Path& path : paths(p)) {
    if (match_path(cx, s, path, 0, q)) continue;
    std::string word;
    for (size_t i = 1; i < path.size(); ++i) word += cx.al.name(path[i].first);
    return "maximal path '" + (word.empty() ? "(empty)" : word) +
           "' of lhs cannot be matched pointwise on rhs";
  }
  return "all paths matched";
}

// ------------------------------------------------------------- membership

namespace {

void check_shape(Ctx& cx, const Obs& x) {
  Sem s = x.sem;
  if (s == Sem::T || s == Sem::CT) {
    for (auto& it : x.items)
      if (it.k != ObsItem::Act)
        throw ParseError("trace observations may contain only actions");
    return;
  }
  ObsItem::K want = set_kind(s);
  if (is_pair_family(s)) {
    if (x.items.empty() || x.items.back().k != want)
      throw ParseError("pair observation must end with its datum set");
    for (size_t i = 0; i + 1 < x.items.size(); ++i)
      if (x.items[i].k != ObsItem::Act)
        throw ParseError("pair observation prefix must be actions");
    return;
  }
  if (!sem_is_word(s)) throw ParseError("semantics has no observations");
  for (auto& it : x.items)
    if (it.k != ObsItem::Act && it.k != want)
      throw ParseError("word observation item of the wrong kind");
  (void)cx;
}

bool member_word(Ctx& cx, Sem s, CP st, const Obs& x, size_t i) {
  if (i == x.items.size()) return true;
  const ObsItem& it = x.items[i];
  if (it.k == ObsItem::Act) {
    for (auto& [b, c] : st->kids)
      if (b == it.act && member_word(cx, s, c, x, i + 1)) return true;
    return false;
  }
  return datum_ok(cx, s, st, it) && member_word(cx, s, st, x, i + 1);
}

}  // namespace

bool obs_member(Ctx& cx, CP p, const Obs& x) {
  check_shape(cx, x);
  Sem s = x.sem;
  if (s == Sem::T || s == Sem::CT) {
    std::vector<CP> cur = {p};
    for (auto& it : x.items) {
      std::vector<CP> next;
      for (CP st : cur)
        for (auto& [b, c] : st->kids)
          if (b == it.act) next.push_back(c);
      cur = std::move(next);
      if (cur.empty()) return false;
    }
    if (s == Sem::T) return true;
    for (CP st : cur)
      if (st->leaf()) return true;
    return false;
  }
  if (is_pair_family(s)) {
    Trace t;
    for (size_t i = 0; i + 1 < x.items.size(); ++i) t.push_back(x.items[i].act);
    for (CP st : states_after(p, t))
      if (datum_ok(cx, s, st, x.items.back())) return true;
    return false;
  }
  return member_word(cx, s, p, x, 0);
}

// ------------------------------------------------- canonical observations

namespace {

TraceSet bounded_complement(Ctx& cx, int len_bound, const TraceSet& have) {
  // all words of length <= len_bound not in have
  double projected = 1;
  for (int i = 0; i < len_bound; ++i) projected = projected * cx.al.size() + 1;
  if (projected > static_cast<double>(cx.class_cap))
    throw BudgetError("trace complement needs ~" + std::to_string((long)projected) +
                      " words, over the class cap");
  TraceSet out;
  std::vector<Trace> layer = {{}};
  for (int len = 0;; ++len) {
    for (const Trace& w : layer)
      if (!std::binary_search(have.begin(), have.end(), w)) out.push_back(w);
    if (len == len_bound) break;
    std::vector<Trace> next;
    for (const Trace& w : layer)
      for (size_t a = 0; a < cx.al.size(); ++a) {
        Trace e = w;
        e.push_back(static_cast<int>(a));
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CP> class_complement(Ctx& cx, int depth_bound, CP st) {
  const Universe& u = cx.universe(depth_bound);
  std::vector<CP> out;
  for (CP c : u.members)
    if (!sim(cx, c, st)) out.push_back(c);
  return out;
}

// the maximal set datum observable at st, per family
ObsItem state_datum(Ctx& cx, Sem s, CP st, int outer_depth) {
  ObsItem it;
  it.k = set_kind(s);
  switch (s) {
    case Sem::F: case Sem::FT:
      it.acts = cx.al.full_mask() & ~st->initials;
      break;
    case Sem::R: case Sem::RT:
      it.acts = st->initials;
      break;
    case Sem::IF: case Sem::IFT:
      it.traces = bounded_complement(cx, outer_depth + 1, cx.traces_of(st));
      break;
    case Sem::PF: case Sem::PFT:
      it.traces = cx.traces_of(st);
      break;
    case Sem::IS: case Sem::IST:
      it.classes = class_complement(cx, outer_depth + 1, st);
      break;
    case Sem::PS: case Sem::PST:
      it.classes = sim_class_set(cx, st, st->depth);
      break;
    default:
      break;
  }
  return it;
}

}  // namespace

std::vector<Obs> canonical_obs(Ctx& cx, Sem s, CP p) {
  std::vector<Obs> out;
  if (s == Sem::T || s == Sem::CT) {
    const TraceSet& ts = s == Sem::T ? cx.traces_of(p) : cx.ctraces_of(p);
    for (const Trace& t : ts) {
      Obs x{s, {}};
      for (int a : t) x.items.push_back(ObsItem{ObsItem::Act, a, 0, {}, {}});
      out.push_back(std::move(x));
    }
    return out;
  }
  if (is_pair_family(s)) {
    for (auto& [t, st] : reachable_dedup(p)) {
      Obs x{s, {}};
      for (int a : t) x.items.push_back(ObsItem{ObsItem::Act, a, 0, {}, {}});
      x.items.push_back(state_datum(cx, s, st, p->depth));
      out.push_back(std::move(x));
    }
  } else {
    if (!sem_is_word(s)) throw ParseError("semantics has no observations");
    for (const Path& path : paths(p)) {
      Obs x{s, {}};
      for (size_t i = 0; i < path.size(); ++i) {
        if (i) x.items.push_back(ObsItem{ObsItem::Act, path[i].first, 0, {}, {}});
        x.items.push_back(state_datum(cx, s, path[i].second, p->depth));
      }
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ------------------------------------------------------------ enumeration

namespace {

struct Enum {
  Ctx& cx;
  Sem s;
  const ObsBudget& budget;
  std::vector<Obs> out;

  void emit(Obs x) {
    out.push_back(std::move(x));
    if (out.size() > budget.max_obs)
      throw BudgetError("observation enumeration exceeded the budget");
  }

  // every set datum legal at st, within the cardinality cap
  std::vector<ObsItem> legal_sets(CP st, int outer_depth) {
    std::vector<ObsItem> sets;
    int cap = budget.set_card_cap;
    switch (s) {
      case Sem::F: case Sem::FT: {
        ActMask c = cx.al.full_mask() & ~st->initials;
        ActMask m = c;
        while (true) {
          if (cap < 0 || __builtin_popcount(m) <= cap)
            sets.push_back(ObsItem{ObsItem::Acts, -1, m, {}, {}});
          if (m == 0) break;
          m = (m - 1) & c;
        }
        break;
      }
      case Sem::R: case Sem::RT:
        sets.push_back(ObsItem{ObsItem::Acts, -1, st->initials, {}, {}});
        break;
      case Sem::IF: case Sem::IFT: {
        TraceSet avoid = bounded_complement(cx, outer_depth + 1, cx.traces_of(st));
        subsets_traces(avoid, cap, sets);
        break;
      }
      case Sem::PF: case Sem::PFT:
        sets.push_back(ObsItem{ObsItem::Traces, -1, 0, cx.traces_of(st), {}});
        break;
      case Sem::IS: case Sem::IST: {
        std::vector<CP> anti = class_complement(cx, outer_depth + 1, st);
        subsets_classes(anti, cap, sets);
        break;
      }
      case Sem::PS: case Sem::PST:
        sets.push_back(
            ObsItem{ObsItem::Classes, -1, 0, {}, sim_class_set(cx, st, st->depth)});
        break;
      default:
        break;
    }
    return sets;
  }

  void subsets_traces(const TraceSet& pool, int cap, std::vector<ObsItem>& sets) {
    size_t limit = cap < 0 ? pool.size() : static_cast<size_t>(cap);
    TraceSet cur;
    subsets_traces_rec(pool, 0, limit, cur, sets);
  }
  void subsets_traces_rec(const TraceSet& pool, size_t i, size_t limit,
                          TraceSet& cur, std::vector<ObsItem>& sets) {
    sets.push_back(ObsItem{ObsItem::Traces, -1, 0, cur, {}});
    if (sets.size() > budget.max_obs)
      throw BudgetError("set enumeration exceeded the budget");
    if (cur.size() == limit) return;
    for (size_t j = i; j < pool.size(); ++j) {
      cur.push_back(pool[j]);
      subsets_traces_rec(pool, j + 1, limit, cur, sets);
      cur.pop_back();
    }
  }

  void subsets_classes(const std::vector<CP>& pool, int cap,
                       std::vector<ObsItem>& sets) {
    size_t limit = cap < 0 ? pool.size() : static_cast<size_t>(cap);
    std::vector<CP> cur;
    subsets_classes_rec(pool, 0, limit, cur, sets);
  }
  void subsets_classes_rec(const std::vector<CP>& pool, size_t i, size_t limit,
                           std::vector<CP>& cur, std::vector<ObsItem>& sets) {
    sets.push_back(ObsItem{ObsItem::Classes, -1, 0, {}, cur});
    if (sets.size() > budget.max_obs)
      throw BudgetError("set enumeration exceeded the budget");
    if (cur.size() == limit) return;
    for (size_t j = i; j < pool.size(); ++j) {
      cur.push_back(pool[j]);
      subsets_classes_rec(pool, j + 1, limit, cur, sets);
      cur.pop_back();
    }
  }

  // pair families: prefix actions already fixed by the reachable walk
  void run_pairs(CP p) {
    for (auto& [t, st] : reachable_dedup(p)) {
      std::vector<ObsItem> prefix;
      for (int a : t) prefix.push_back(ObsItem{ObsItem::Act, a, 0, {}, {}});
      for (ObsItem& datum : legal_sets(st, p->depth)) {
        Obs x{s, prefix};
        x.items.push_back(std::move(datum));
        emit(std::move(x));
      }
    }
  }

  // word families: interleaved runs up to length 2*depth+1. At most one set
  // between consecutive actions; every legal word merges adjacent sets into
  // this shape without changing membership anywhere (tested separately by
  // the word-normalization suite), so the restriction loses no distinctions.
  void run_words(CP st, int outer_depth, size_t max_len, Obs& cur, bool last_was_set) {
    emit(cur);
    if (cur.items.size() >= max_len) return;
    if (!last_was_set)
      for (ObsItem& datum : legal_sets(st, outer_depth)) {
        cur.items.push_back(datum);
        run_words(st, outer_depth, max_len, cur, true);
        cur.items.pop_back();
      }
    for (auto& [a, c] : st->kids) {
      cur.items.push_back(ObsItem{ObsItem::Act, a, 0, {}, {}});
      run_words(c, outer_depth, max_len, cur, false);
      cur.items.pop_back();
    }
  }
};

}  // namespace

std::vector<Obs> xfin_enumerate(Ctx& cx, Sem s, CP p, const ObsBudget& budget) {
  Enum e{cx, s, budget, {}};
  if (s == Sem::T || s == Sem::CT) {
    return canonical_obs(cx, s, p);  // already the literal set
  }
  if (is_pair_family(s)) {
    e.run_pairs(p);
  } else {
    if (!sem_is_word(s)) throw ParseError("semantics has no observations");
    Obs cur{s, {}};
    e.run_words(p, p->depth, 2 * static_cast<size_t>(p->depth) + 1, cur, false);
  }
  std::sort(e.out.begin(), e.out.end());
  e.out.erase(std::unique(e.out.begin(), e.out.end()), e.out.end());
  return e.out;
}

// ---------------------------------------------------------- normalization

Obs normalize_word(const Ctx& cx, const Obs& x) {
  (void)cx;
  if (!sem_is_word(x.sem)) return x;
  bool refusal = sem_is_refusal(x.sem);
  Obs out{x.sem, {}};
  for (const ObsItem& it : x.items) {
    if (it.k != ObsItem::Act && !out.items.empty() &&
        out.items.back().k == it.k) {
      ObsItem& prev = out.items.back();
      if (refusal) {
        // union of refused data observes the same stays
        prev.acts |= it.acts;
        TraceSet merged = prev.traces;
        merged.insert(merged.end(), it.traces.begin(), it.traces.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        prev.traces = std::move(merged);
        std::vector<CP> mc = prev.classes;
        mc.insert(mc.end(), it.classes.begin(), it.classes.end());
        std::sort(mc.begin(), mc.end(), canon_less);
        mc.erase(std::unique(mc.begin(), mc.end()), mc.end());
        prev.classes = std::move(mc);
        continue;
      }
      if (prev == it) continue;  // equality-style: drop exact repeats only
    }
    out.items.push_back(it);
  }
  return out;
}

std::string obs_to_string(const Ctx& cx, const Obs& x) {
  std::string out;
  bool first = true;
  for (const ObsItem& it : x.items) {
    if (!first) out += " ";
    first = false;
    switch (it.k) {
      case ObsItem::Act:
        out += cx.al.name(it.act);
        break;
      case ObsItem::Acts:
        out += mask_to_string(cx.al, it.acts);
        break;
      case ObsItem::Traces: {
        out += "{";
        for (size_t i = 0; i < it.traces.size(); ++i) {
          if (i) out += ",";
          out += it.traces[i].empty() ? "-" : cx.al.encode_word(it.traces[i]);
        }
        out += "}";
        break;
      }
      case ObsItem::Classes: {
        out += "{";
        for (size_t i = 0; i < it.classes.size(); ++i) {
          if (i) out += ",";
          out += it.classes[i]->text;
        }
        out += "}";
        break;
      }
    }
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace sk
