#include "core/charform.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "core/branching.hpp"
#include "core/grammar.hpp"
#include "core/primality.hpp"
#include "core/satisfy.hpp"

namespace sk {

namespace {

// ⋀_{a∈y}[a]ff
FId refusal_conj(Ctx& cx, ActMask y) {
  std::vector<FId> kids;
  for (int a = 0; a < static_cast<int>(cx.al.size()); ++a)
    if (y & (ActMask(1) << a)) kids.push_back(cx.forms.mbox(a, cx.forms.ff()));
  return cx.forms.mand(std::move(kids));
}

// ⋀_{σ∈g}[σ]ff
FId avoid_conj(Ctx& cx, const TraceSet& g) {
  std::vector<FId> kids;
  kids.reserve(g.size());
  for (const Trace& t : g) kids.push_back(cx.forms.mbox_seq(t, cx.forms.ff()));
  return cx.forms.mand(std::move(kids));
}

// ⋀_{c∈e} neg_push(chi_S(c)): excludes every class of e from the rhs class set
FId exclude_conj(Ctx& cx, const std::vector<CP>& e) {
  std::vector<FId> kids;
  kids.reserve(e.size());
  for (CP c : e) kids.push_back(neg_push(cx, chi(cx, Sem::S, c)));
  return cx.forms.mand(std::move(kids));
}

// ⋀_{c∈cl} chi_S(c) ∧ ⋁_{c∈cl} sim_by(c): the rhs class set equals cl
FId class_set_formula(Ctx& cx, const std::vector<CP>& cl) {
  std::vector<FId> kids;
  std::vector<FId> caps;
  for (CP c : cl) {
    kids.push_back(chi(cx, Sem::S, c));
    caps.push_back(sim_by(cx, c));
  }
  kids.push_back(cx.forms.mor(std::move(caps)));
  return cx.forms.mand(std::move(kids));
}

FId set_item_formula(Ctx& cx, Sem s, const ObsItem& it) {
  switch (sem_datum(s)) {
    case Datum::Acts:
      if (it.k != ObsItem::Acts) break;
      return s == Sem::F || s == Sem::FT ? refusal_conj(cx, it.acts)
                                         : cx.forms.mready(it.acts);
    case Datum::Traces:
      if (it.k != ObsItem::Traces) break;
      return s == Sem::IF || s == Sem::IFT ? avoid_conj(cx, it.traces)
                                           : cx.forms.mtraceset(it.traces);
    case Datum::Classes:
      if (it.k != ObsItem::Classes) break;
      return s == Sem::IS || s == Sem::IST ? exclude_conj(cx, it.classes)
                                           : class_set_formula(cx, it.classes);
    default:
      break;
  }
  throw ParseError("observation item does not fit the semantics datum");
}

// One-step extensions of the trace set: ⟨σa⟩tt for σ ∈ ts with σa ∉ ts, and
// [σ]ff for every nonempty σ ∈ ts. Together they reject any trace-set change.
void trace_set_fences(Ctx& cx, const TraceSet& ts, std::vector<FId>* out) {
  for (const Trace& t : ts) {
    for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
      Trace ext = t;
      ext.push_back(a);
      if (!std::binary_search(ts.begin(), ts.end(), ext))
        out->push_back(cx.forms.mdia_seq(ext, cx.forms.tt()));
    }
    if (!t.empty()) out->push_back(cx.forms.mbox_seq(t, cx.forms.ff()));
  }
}

// ⋀ of the 2-nested-simulation negative basis of p, memoized
FId twos_neg_conj(Ctx& cx, CP p);

std::vector<FId> twos_negative(Ctx& cx, CP p) {
  std::vector<FId> neg;
  for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
    std::vector<FId> alts;
    for (CP m : max_succ(cx, p, a)) alts.push_back(twos_neg_conj(cx, m));
    neg.push_back(cx.forms.mbox(a, cx.forms.mor(std::move(alts))));
  }
  return neg;
}

FId twos_neg_conj(Ctx& cx, CP p) {
  auto it = cx.twos_neg_memo.find(p->id);
  if (it != cx.twos_neg_memo.end()) return it->second;
  FId r = cx.forms.mand(twos_negative(cx, p));
  cx.twos_neg_memo.emplace(p->id, r);
  return r;
}

// Φ̄(p): satisfied exactly by the processes that do not simulate p
FId phi_bar(Ctx& cx, CP p) {
  auto it = cx.phibar_memo.find(p->id);
  if (it != cx.phibar_memo.end()) return it->second;
  std::vector<FId> ds;
  for (const auto& [a, m] : p->kids) {
    ds.push_back(cx.forms.mbox(a, cx.forms.ff()));
    ds.push_back(cx.forms.mbox(a, phi_bar(cx, m)));
  }
  FId r = cx.forms.mor(std::move(ds));
  cx.phibar_memo.emplace(p->id, r);
  return r;
}

std::vector<FId> branching_negative(Ctx& cx, Sem s, CP p) {
  std::vector<FId> neg;
  switch (s) {
    case Sem::S:
      break;
    case Sem::CS:
      if (p->leaf()) neg.push_back(cx.forms.mzero());
      break;
    case Sem::RS:
      for (int a = 0; a < static_cast<int>(cx.al.size()); ++a)
        if (!(p->initials & (ActMask(1) << a)))
          neg.push_back(cx.forms.mbox(a, cx.forms.ff()));
      break;
    case Sem::TS: {
      // [σa]ff for every one-step extension σa leaving the trace set
      const TraceSet& ts = cx.traces_of(p);
      for (const Trace& t : ts)
        for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
          Trace ext = t;
          ext.push_back(a);
          if (!std::binary_search(ts.begin(), ts.end(), ext))
            neg.push_back(cx.forms.mbox_seq(ext, cx.forms.ff()));
        }
      break;
    }
    case Sem::TwoS:
      neg = twos_negative(cx, p);
      break;
    case Sem::BS:
      for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
        std::vector<FId> alts;
        for (const auto& [act, m] : p->kids)
          if (act == a) alts.push_back(chi(cx, Sem::BS, m));
        neg.push_back(cx.forms.mbox(a, cx.forms.mor(std::move(alts))));
      }
      break;
    default:
      throw ParseError("no finite basis for semantics " +
                       std::string(sem_name(s)));
  }
  return neg;
}

constexpr size_t kFullSubsetCap = 12;  // 2^12 subset conjunctions per successor

// The literal basis with every subset conjunction, for the monotonicity lemma
std::vector<FId> full_basis(Ctx& cx, Sem s, CP p) {
  std::vector<FId> basis{cx.forms.tt()};
  for (const auto& [a, m] : p->kids) {
    std::vector<FId> sub = full_basis(cx, s, m);
    if (sub.size() > kFullSubsetCap)
      throw BudgetError("full basis of successor has " +
                        std::to_string(sub.size()) +
                        " members; subset enumeration capped at 2^" +
                        std::to_string(kFullSubsetCap));
    for (size_t pick = 0; pick < (size_t(1) << sub.size()); ++pick) {
      std::vector<FId> conj;
      for (size_t i = 0; i < sub.size(); ++i)
        if (pick & (size_t(1) << i)) conj.push_back(sub[i]);
      basis.push_back(cx.forms.mdia(a, cx.forms.mand(std::move(conj))));
    }
  }
  for (FId g : branching_negative(cx, s, p)) basis.push_back(g);
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

}  // namespace

std::vector<FId> BSet::all() const {
  std::vector<FId> m = positive;
  m.insert(m.end(), negative.begin(), negative.end());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

BSet b_set(Ctx& cx, Sem s, CP p, bool full_mode) {
  if (!sem_is_branching(s))
    throw ParseError("b_set is defined for the branching spectrum only");
  BSet b{s, full_mode, {}, {}};
  if (full_mode) {
    b.positive = full_basis(cx, s, p);
    return b;
  }
  b.positive.push_back(cx.forms.tt());
  for (const auto& [a, m] : p->kids)
    b.positive.push_back(cx.forms.mdia(a, chi(cx, s, m)));
  b.negative = branching_negative(cx, s, p);
  return b;
}

FId chi(Ctx& cx, Sem s, CP p) {
  if (s == Sem::CONF)
    throw ParseError("conformance simulation has no characteristic formulae");
  uint64_t key = key2(static_cast<uint32_t>(s), p->id);
  auto it = cx.chi_memo.find(key);
  if (it != cx.chi_memo.end()) return it->second;

  std::vector<FId> kids;
  if (sem_is_branching(s)) {
    BSet b = b_set(cx, s, p);
    kids = b.positive;
    kids.insert(kids.end(), b.negative.begin(), b.negative.end());
  } else {
    for (const Obs& x : canonical_obs(cx, s, p))
      kids.push_back(obs_formula(cx, x));
  }
  FId r = cx.forms.mand(std::move(kids));
  cx.chi_memo.emplace(key, r);
  return r;
}

FId obs_formula(Ctx& cx, const Obs& x) {
  FId acc = x.sem == Sem::CT ? cx.forms.mzero() : cx.forms.tt();
  for (auto it = x.items.rbegin(); it != x.items.rend(); ++it) {
    if (it->k == ObsItem::Act) {
      acc = cx.forms.mdia(it->act, acc);
      continue;
    }
    FId setf = set_item_formula(cx, x.sem, *it);
    acc = cx.forms.mand({setf, acc});
  }
  return acc;
}

FId sim_by(Ctx& cx, CP p) {
  auto it = cx.simby_memo.find(p->id);
  if (it != cx.simby_memo.end()) return it->second;
  std::vector<FId> kids;
  for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
    std::vector<FId> alts;
    for (const auto& [act, m] : p->kids)
      if (act == a) alts.push_back(sim_by(cx, m));
    kids.push_back(cx.forms.mbox(a, cx.forms.mor(std::move(alts))));
  }
  FId r = cx.forms.mand(std::move(kids));
  cx.simby_memo.emplace(p->id, r);
  return r;
}

FId bar_chi(Ctx& cx, Sem s, CP p) {
  if (s == Sem::CONF)
    throw ParseError(
        "conformance simulation has no anti-characteristic formulae");
  uint64_t key = key2(static_cast<uint32_t>(s), p->id);
  auto it = cx.barchi_memo.find(key);
  if (it != cx.barchi_memo.end()) return it->second;

  std::vector<FId> ds;
  if (sem_is_branching(s)) {
    if (s == Sem::BS) {
      ds.push_back(cx.forms.mneg(chi(cx, Sem::BS, p)));
    } else {
      // ⟨a⟩⋀_{p→a p'} bar_chi(p') for every action; ⟨a⟩tt when a ∉ I(p)
      for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
        std::vector<FId> conj;
        for (const auto& [act, m] : p->kids)
          if (act == a) conj.push_back(bar_chi(cx, s, m));
        ds.push_back(cx.forms.mdia(a, cx.forms.mand(std::move(conj))));
      }
      switch (s) {
        case Sem::S:
          break;
        case Sem::CS:
          if (!p->leaf()) ds.push_back(cx.forms.mzero());
          break;
        case Sem::RS:
          for (int a = 0; a < static_cast<int>(cx.al.size()); ++a)
            if (p->initials & (ActMask(1) << a))
              ds.push_back(cx.forms.mbox(a, cx.forms.ff()));
          break;
        case Sem::TS:
          trace_set_fences(cx, cx.traces_of(p), &ds);
          break;
        case Sem::TwoS:
          ds.push_back(phi_bar(cx, p));
          break;
        default:
          break;  // unreachable
      }
    }
  } else {
    // every canonical observation of a bounded-depth class that p lacks
    std::set<Obs> missing;
    for (CP c : cx.universe(p->depth).members)
      for (const Obs& x : canonical_obs(cx, s, c))
        if (!obs_member(cx, p, x)) missing.insert(x);
    for (const Obs& x : missing) ds.push_back(obs_formula(cx, x));

    // any trace one longer than depth(p) also separates from p
    double count = 1;
    for (int i = 0; i <= p->depth; ++i) count *= double(cx.al.size());
    if (count > double(cx.class_cap))
      throw BudgetError("deep-trace disjunction exceeds the class cap");
    std::vector<Trace> words{{}};
    for (int i = 0; i <= p->depth; ++i) {
      std::vector<Trace> next;
      for (const Trace& w : words)
        for (int a = 0; a < static_cast<int>(cx.al.size()); ++a) {
          Trace ext = w;
          ext.push_back(a);
          next.push_back(std::move(ext));
        }
      words = std::move(next);
    }
    for (const Trace& w : words)
      ds.push_back(cx.forms.mdia_seq(w, cx.forms.tt()));
  }
  FId r = cx.forms.mor(std::move(ds));
  cx.barchi_memo.emplace(key, r);
  return r;
}

DecomposeResult decompose(Ctx& cx, Sem s, FId f, const Universe& u) {
  if (!grammar_check(cx, s, f))
    throw ParseError("formula is outside the sub-logic of " +
                     std::string(sem_name(s)) + ": " +
                     grammar_explain(cx, s, f));
  std::vector<CP> reps = minimal_models(cx, s, f, u);
  if (reps.empty()) return {DecomposeStatus::Inconsistent, nullptr, 0, 0};

  CP pivot = reps.front();
  Bits sat = sat_set(cx, f, u);
  bool closure = true;
  for (size_t i = 0; i < u.members.size(); ++i)
    if (sat.get(i) != preorder(cx, s, pivot, u.members[i])) {
      closure = false;
      break;
    }
  FId cf = chi(cx, s, pivot);
  if (closure) return {DecomposeStatus::AlreadyCharacteristic, pivot, cf, 0};
  FId rem = cx.forms.mand({bar_chi(cx, s, pivot), f});
  return {DecomposeStatus::Decomposed, pivot, cf, rem};
}

}  // namespace sk
