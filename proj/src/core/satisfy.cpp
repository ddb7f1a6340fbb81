#include "core/satisfy.hpp"

#include <algorithm>

namespace sk {

static bool eval(Ctx& cx, CP p, FId f) {
  const FNode& n = cx.forms.node(f);
  if (n.k == FK::True) return true;
  if (n.k == FK::False) return false;

  uint64_t key = key2(p->id, f);
  auto it = cx.sat_memo.find(key);
  if (it != cx.sat_memo.end()) return it->second;

  bool r = false;
  switch (n.k) {
    case FK::True: case FK::False:
      break;  // handled above
    case FK::And:
      r = true;
      for (FId k : n.kids)
        if (!eval(cx, p, k)) { r = false; break; }
      break;
    case FK::Or:
      for (FId k : n.kids)
        if (eval(cx, p, k)) { r = true; break; }
      break;
    case FK::Neg:
      r = !eval(cx, p, n.kids[0]);
      break;
    case FK::Dia:
      for (auto& [a, c] : p->kids)
        if (a == n.act && eval(cx, c, n.kids[0])) { r = true; break; }
      break;
    case FK::Box:
      r = true;
      for (auto& [a, c] : p->kids)
        if (a == n.act && !eval(cx, c, n.kids[0])) { r = false; break; }
      break;
    case FK::ZeroF:
      r = p->leaf();
      break;
    case FK::Ready:
      r = p->initials == n.mask;
      break;
    case FK::TraceSetF: {
      // bounded trace-set equality: traces of p up to (longest member + 1)
      size_t longest = 0;
      for (auto& t : n.tset) longest = std::max(longest, t.size());
      size_t bound = longest + 1;
      const TraceSet& ts = cx.traces_of(p);
      TraceSet cut;
      for (auto& t : ts)
        if (t.size() <= bound) cut.push_back(t);
      r = cut == n.tset;
      break;
    }
    case FK::ConfDia: {
      bool has = false;
      bool all = true;
      for (auto& [a, c] : p->kids)
        if (a == n.act) {
          has = true;
          if (!eval(cx, c, n.kids[0])) { all = false; break; }
        }
      r = has && all;
      break;
    }
  }
  cx.sat_memo.emplace(key, r ? 1 : 0);
  return r;
}

bool satisfies(Ctx& cx, CP p, FId f) { return eval(cx, p, f); }

bool satisfies(Ctx& cx, const PP& p, FId f) {
  return eval(cx, cx.procs.canonicalize(p), f);
}

Bits sat_set(Ctx& cx, FId f, const Universe& u) {
  Bits out(u.members.size());
  for (size_t i = 0; i < u.members.size(); ++i)
    if (eval(cx, u.members[i], f)) out.set(i);
  return out;
}

}  // namespace sk
