#include "core/grammar.hpp"

namespace sk {

namespace {

// Nonterminal tags for the memo key. PHI/PSI/GAMMA are per-semantics; the
// EXIST/UNIV/FULL fragments are shared, keyed under a pseudo-semantics slot.
enum Nt : uint32_t { PHI = 0, PSI = 1, GAMMA = 2 };
constexpr uint32_t kShared = kSemCount;
enum SharedNt : uint32_t { EXIST = 0, UNIV = 1, FULL = 2 };

struct GCheck {
  Ctx& cx;

  bool memoized(uint32_t slot, Nt nt, FId f, bool (GCheck::*fn)(uint32_t, FId)) {
    uint64_t key = key2(slot * 4 + nt, f);
    auto it = cx.grammar_memo.find(key);
    if (it != cx.grammar_memo.end()) return it->second;
    bool r = (this->*fn)(slot, f);
    cx.grammar_memo[key] = r ? 1 : 0;
    return r;
  }

  const FNode& node(FId f) { return cx.forms.node(f); }

  // length of a [a1]...[ak]ff chain; 0 for bare ff, -1 when not a chain
  int box_chain_ff(FId f) {
    const FNode& n = node(f);
    if (n.k == FK::False) return 0;
    if (n.k == FK::Box) {
      int r = box_chain_ff(n.kids[0]);
      return r < 0 ? -1 : r + 1;
    }
    return -1;
  }

  // pure existential fragment: tt | ff | and | or | <a>
  bool exist(FId f) { return memoized(kShared, static_cast<Nt>(EXIST), f, &GCheck::exist_raw); }
  bool exist_raw(uint32_t, FId f) {
    const FNode& n = node(f);
    switch (n.k) {
      case FK::True: case FK::False: return true;
      case FK::And: case FK::Or:
        for (FId k : n.kids)
          if (!exist(k)) return false;
        return true;
      case FK::Dia: return exist(n.kids[0]);
      default: return false;
    }
  }

  // pure universal fragment: tt | ff | and | or | [a]
  bool univ(FId f) { return memoized(kShared, static_cast<Nt>(UNIV), f, &GCheck::univ_raw); }
  bool univ_raw(uint32_t, FId f) {
    const FNode& n = node(f);
    switch (n.k) {
      case FK::True: case FK::False: return true;
      case FK::And: case FK::Or:
        for (FId k : n.kids)
          if (!univ(k)) return false;
        return true;
      case FK::Box: return univ(n.kids[0]);
      default: return false;
    }
  }

  // full modal fragment (bisimulation): everything except the set sugar and
  // the conformance modality
  bool full(FId f) { return memoized(kShared, static_cast<Nt>(FULL), f, &GCheck::full_raw); }
  bool full_raw(uint32_t, FId f) {
    const FNode& n = node(f);
    switch (n.k) {
      case FK::True: case FK::False: return true;
      case FK::And: case FK::Or:
        for (FId k : n.kids)
          if (!full(k)) return false;
        return true;
      case FK::Neg: case FK::Dia: case FK::Box: return full(n.kids[0]);
      default: return false;
    }
  }

  bool phi(Sem s, FId f) { return memoized(static_cast<uint32_t>(s), PHI, f, &GCheck::phi_raw); }
  bool phi_raw(uint32_t slot, FId f) {
    Sem s = static_cast<Sem>(slot);
    const FNode& n = node(f);

    if (s == Sem::BS) return full(f);

    if (s == Sem::CONF) {
      switch (n.k) {
        case FK::True: case FK::False: return true;
        case FK::And: case FK::Or:
          for (FId k : n.kids)
            if (!phi(s, k)) return false;
          return true;
        case FK::ConfDia: return phi(s, n.kids[0]);
        default: return false;
      }
    }

    // common top level of both spectra
    switch (n.k) {
      case FK::True: case FK::False: return true;
      case FK::And: case FK::Or:
        for (FId k : n.kids)
          if (!phi(s, k)) return false;
        return true;
      default: break;
    }

    if (sem_is_branching(s)) {
      switch (s) {
        case Sem::S:
          return n.k == FK::Dia && phi(s, n.kids[0]);
        case Sem::CS:
          if (n.k == FK::ZeroF) return true;
          return n.k == FK::Dia && phi(s, n.kids[0]);
        case Sem::RS:
          if (n.k == FK::Box) return node(n.kids[0]).k == FK::False;
          return n.k == FK::Dia && phi(s, n.kids[0]);
        case Sem::TS:
          if (box_chain_ff(f) >= 0) return true;
          return n.k == FK::Dia && phi(s, n.kids[0]);
        case Sem::TwoS:
          // negated simulation formulae, plus their De Morgan normal forms
          if (n.k == FK::Neg) return exist(n.kids[0]);
          if (univ(f)) return true;
          return n.k == FK::Dia && phi(s, n.kids[0]);
        default: return false;  // unreachable
      }
    }

    return psi(s, f);
  }

  bool psi(Sem s, FId f) { return memoized(static_cast<uint32_t>(s), PSI, f, &GCheck::psi_raw); }
  bool psi_raw(uint32_t slot, FId f) {
    Sem s = static_cast<Sem>(slot);
    const FNode& n = node(f);
    if (n.k == FK::True) return true;
    switch (s) {
      case Sem::T:
        return n.k == FK::Dia && psi(s, n.kids[0]);
      case Sem::CT:
        if (n.k == FK::ZeroF) return true;
        return n.k == FK::Dia && psi(s, n.kids[0]);
      case Sem::F:
        if (n.k == FK::Dia) return psi(s, n.kids[0]);
        return gamma(s, f);
      case Sem::R:
        if (n.k == FK::Ready) return true;
        return n.k == FK::Dia && psi(s, n.kids[0]);
      case Sem::FT:
        // tt | [a]ff | <a>psi | [a]ff /\ psi, conjunction flattened
        if (n.k == FK::Box) return node(n.kids[0]).k == FK::False;
        if (n.k == FK::Dia) return psi(s, n.kids[0]);
        if (n.k == FK::And) {
          int rest = 0;
          for (FId k : n.kids) {
            const FNode& m = node(k);
            if (m.k == FK::Box && node(m.kids[0]).k == FK::False) continue;
            if (!psi(s, k) || ++rest > 1) return false;
          }
          return true;
        }
        return false;
      case Sem::RT:
        if (n.k == FK::Ready) return true;  // <>Y, as <>Y /\ tt
        if (n.k == FK::Dia) return psi(s, n.kids[0]);
        if (n.k == FK::And) {
          int rest = 0;
          for (FId k : n.kids) {
            if (node(k).k == FK::Ready) continue;
            if (!psi(s, k) || ++rest > 1) return false;
          }
          return true;
        }
        return false;
      case Sem::IF:
        if (n.k == FK::Dia) return psi(s, n.kids[0]);
        return gamma(s, f);
      case Sem::PF:
        if (n.k == FK::TraceSetF) return true;
        return n.k == FK::Dia && psi(s, n.kids[0]);
      case Sem::IFT:
        if (box_chain_ff(f) >= 1) return true;
        if (n.k == FK::Dia) return psi(s, n.kids[0]);
        if (n.k == FK::And) {
          int rest = 0;
          for (FId k : n.kids) {
            if (box_chain_ff(k) >= 1) continue;
            if (!psi(s, k) || ++rest > 1) return false;
          }
          return true;
        }
        return false;
      case Sem::PFT:
        if (n.k == FK::TraceSetF) return true;
        if (n.k == FK::Dia) return psi(s, n.kids[0]);
        if (n.k == FK::And) {
          int rest = 0;
          for (FId k : n.kids) {
            if (node(k).k == FK::TraceSetF) continue;
            if (!psi(s, k) || ++rest > 1) return false;
          }
          return true;
        }
        return false;
      case Sem::IS:
        if (n.k == FK::Dia && psi(s, n.kids[0])) return true;
        return univ(f);
      case Sem::PS:
        // tt | <a>psi | gamma-exists /\ gamma-forall (each side optional)
        if (n.k == FK::Dia && psi(s, n.kids[0])) return true;
        if (exist(f) || univ(f)) return true;
        if (n.k == FK::And) {
          for (FId k : n.kids)
            if (!exist(k) && !univ(k)) return false;
          return true;
        }
        return false;
      case Sem::IST:
        if (n.k == FK::Dia && psi(s, n.kids[0])) return true;
        if (univ(f)) return true;
        if (n.k == FK::And) {
          int rest = 0;
          for (FId k : n.kids) {
            if (univ(k)) continue;
            if (!psi(s, k) || ++rest > 1) return false;
          }
          return true;
        }
        return false;
      case Sem::PST:
        if (n.k == FK::Dia && psi(s, n.kids[0])) return true;
        if (exist(f) || univ(f)) return true;
        if (n.k == FK::And) {
          int rest = 0;
          for (FId k : n.kids) {
            if (exist(k) || univ(k)) continue;
            if (!psi(s, k) || ++rest > 1) return false;
          }
          return true;
        }
        return false;
      default:
        return false;
    }
  }

  bool gamma(Sem s, FId f) { return memoized(static_cast<uint32_t>(s), GAMMA, f, &GCheck::gamma_raw); }
  bool gamma_raw(uint32_t slot, FId f) {
    Sem s = static_cast<Sem>(slot);
    const FNode& n = node(f);
    switch (s) {
      case Sem::F:
        // [a]ff | gamma /\ gamma
        if (n.k == FK::Box) return node(n.kids[0]).k == FK::False;
        if (n.k == FK::And) {
          for (FId k : n.kids)
            if (!gamma(s, k)) return false;
          return true;
        }
        return false;
      case Sem::IF:
        // [tau]ff | gamma /\ gamma
        if (box_chain_ff(f) >= 1) return true;
        if (n.k == FK::And) {
          for (FId k : n.kids)
            if (!gamma(s, k)) return false;
          return true;
        }
        return false;
      default:
        return false;
    }
  }
};

// first offending subformula on a failed check, for the explanation string
FId find_reject(GCheck& g, Sem s, FId f) {
  const FNode& n = g.cx.forms.node(f);
  for (FId k : n.kids)
    if (!g.phi(s, k) && !g.psi(s, k)) return find_reject(g, s, k);
  return f;
}

}  // namespace

bool grammar_check(Ctx& cx, Sem s, FId f) {
  GCheck g{cx};
  return g.phi(s, f);
}

std::string grammar_explain(Ctx& cx, Sem s, FId f) {
  GCheck g{cx};
  if (g.phi(s, f)) return "";
  FId bad = find_reject(g, s, f);
  return "not in L_" + std::string(sem_name(s)) + ": subformula '" +
         print_formula(cx, bad) + "' has no derivation";
}

}  // namespace sk
