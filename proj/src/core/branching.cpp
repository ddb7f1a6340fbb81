#include "core/branching.hpp"

#include <algorithm>

namespace sk {

static bool pre_rec(Ctx& cx, Sem s, CP p, CP q) {
  if (p == q) return true;  // canonical: identity implies every preorder
  if (s == Sem::BS) return false;

  uint64_t key = key3(s, p->id, q->id);
  auto it = cx.pre_memo.find(key);
  if (it != cx.pre_memo.end()) return it->second;

  bool r = true;
  switch (s) {
    case Sem::CS:
      r = p->leaf() == q->leaf();
      break;
    case Sem::RS:
      r = p->initials == q->initials;
      break;
    case Sem::TS:
      r = cx.traces_of(p) == cx.traces_of(q);
      break;
    case Sem::TwoS:
      r = pre_rec(cx, Sem::S, q, p);
      break;
    case Sem::CONF:
      r = (p->initials & ~q->initials) == 0;
      break;
    default:
      break;
  }

  if (r && s == Sem::CONF) {
    // for all q -a-> q' with p -a->: some p -a-> p' with p' below q'
    for (auto& [a, qc] : q->kids) {
      if (!((p->initials >> a) & 1)) continue;
      bool found = false;
      for (auto& [b, pc] : p->kids)
        if (b == a && pre_rec(cx, s, pc, qc)) { found = true; break; }
      if (!found) { r = false; break; }
    }
  } else if (r) {
    // for all p -a-> p': some q -a-> q' above it
    for (auto& [a, pc] : p->kids) {
      bool found = false;
      for (auto& [b, qc] : q->kids)
        if (b == a && pre_rec(cx, s, pc, qc)) { found = true; break; }
      if (!found) { r = false; break; }
    }
  }

  cx.pre_memo.emplace(key, r);
  return r;
}

bool branching_pre(Ctx& cx, Sem s, CP p, CP q) { return pre_rec(cx, s, p, q); }

bool strict_sim(Ctx& cx, CP p, CP q) {
  return sim(cx, p, q) && !sim(cx, q, p);
}

std::vector<CP> max_succ(Ctx& cx, CP p, int a) {
  std::vector<CP> succ;
  for (auto& [b, c] : p->kids)
    if (b == a) succ.push_back(c);
  std::vector<CP> out;
  for (CP c : succ) {
    bool dominated = false;
    for (CP d : succ)
      if (d != c && strict_sim(cx, c, d)) { dominated = true; break; }
    if (!dominated) out.push_back(c);
  }
  return out;
}

std::vector<CP> sim_class_set(Ctx& cx, CP p, int bound) {
  const Universe& u = cx.universe(bound);
  std::vector<CP> out;
  for (CP c : u.members)
    if (sim(cx, c, p)) out.push_back(c);
  return out;
}

static std::string clause_text(Ctx& cx, Sem s, CP p, CP q) {
  switch (s) {
    case Sem::CS:
      return p->leaf() ? "lhs is deadlocked but rhs is not"
                       : "rhs is deadlocked but lhs is not";
    case Sem::RS:
      return "initial sets differ: " + mask_to_string(cx.al, p->initials) +
             " vs " + mask_to_string(cx.al, q->initials);
    case Sem::TS:
      return "trace sets differ";
    case Sem::TwoS:
      return "rhs does not simulate lhs back";
    case Sem::CONF:
      return "initials not included: " + mask_to_string(cx.al, p->initials) +
             " vs " + mask_to_string(cx.al, q->initials);
    default:
      return "simulation clause fails";
  }
}

static std::string witness_rec(Ctx& cx, Sem s, CP p, CP q, std::string path) {
  std::string at = path.empty() ? "at the root" : "after '" + path + "'";

  // root clause first
  bool aux = true;
  switch (s) {
    case Sem::CS: aux = p->leaf() == q->leaf(); break;
    case Sem::RS: aux = p->initials == q->initials; break;
    case Sem::TS: aux = cx.traces_of(p) == cx.traces_of(q); break;
    case Sem::TwoS: aux = pre_rec(cx, Sem::S, q, p); break;
    case Sem::CONF: aux = (p->initials & ~q->initials) == 0; break;
    case Sem::BS:
      if (!pre_rec(cx, Sem::S, p, q) || !pre_rec(cx, Sem::S, q, p))
        return at + ": not mutually similar";
      return at + ": branching structure differs";
    default: break;
  }
  if (!aux) return at + ": " + clause_text(cx, s, p, q);

  if (s == Sem::CONF) {
    for (auto& [a, qc] : q->kids) {
      if (!((p->initials >> a) & 1)) continue;
      bool found = false;
      CP first = nullptr;
      for (auto& [b, pc] : p->kids)
        if (b == a) {
          if (!first) first = pc;
          if (pre_rec(cx, s, pc, qc)) { found = true; break; }
        }
      if (!found)
        return witness_rec(cx, s, first, qc,
                           path + cx.al.name(a));
    }
  } else {
    for (auto& [a, pc] : p->kids) {
      bool found = false;
      CP first = nullptr;
      for (auto& [b, qc] : q->kids)
        if (b == a) {
          if (!first) first = qc;
          if (pre_rec(cx, s, pc, qc)) { found = true; break; }
        }
      if (found) continue;
      if (!first)
        return at + ": lhs offers '" + cx.al.name(a) +
               "' which rhs cannot match";
      return witness_rec(cx, s, pc, first, path + cx.al.name(a));
    }
  }
  return at + ": processes differ";  // unreachable when the preorder fails
}

std::string branching_witness(Ctx& cx, Sem s, CP p, CP q) {
  return witness_rec(cx, s, p, q, "");
}

}  // namespace sk
