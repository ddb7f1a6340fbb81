#include "core/sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/grammar.hpp"

namespace sk {

namespace {

int pick(Rng& rng, int n) { return static_cast<int>(rng() % uint64_t(n)); }

int rand_act(Ctx& cx, Rng& rng) { return pick(rng, int(cx.al.size())); }

ActMask rand_mask(Ctx& cx, Rng& rng) {
  return ActMask(rng()) & cx.al.full_mask();
}

PP sample_pp(Ctx& cx, Rng& rng, int max_depth, int max_width) {
  int width = max_depth == 0 ? 0 : pick(rng, max_width + 1);
  PP acc = Proc::nil();
  for (int i = 0; i < width; ++i) {
    PP kid = sample_pp(cx, rng, max_depth - 1, max_width);
    PP part = Proc::prefix(rand_act(cx, rng), std::move(kid));
    acc = i == 0 ? std::move(part) : Proc::sum(std::move(acc), std::move(part));
  }
  return acc;
}

TraceSet rand_trace_set(Ctx& cx, Rng& rng, int max_words, int max_len) {
  TraceSet ts;
  int n = pick(rng, max_words + 1);
  for (int i = 0; i < n; ++i) ts.push_back(sample_trace(cx, rng, max_len));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

std::vector<CP> rand_classes(Ctx& cx, Rng& rng, int max_classes) {
  const Universe& u = cx.universe(1);
  std::vector<CP> cl;
  int n = pick(rng, max_classes + 1);
  for (int i = 0; i < n; ++i)
    cl.push_back(u.members[pick(rng, int(u.members.size()))]);
  std::sort(cl.begin(), cl.end(), canon_less);
  cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  return cl;
}

// Formula generation walks the same productions the grammar checker accepts.
// d is the remaining modal depth, b a shrinking connective budget.
struct FGen {
  Ctx& cx;
  Rng& rng;

  FormulaTable& ft() { return cx.forms; }
  int act() { return rand_act(cx, rng); }
  int roll(int n) { return pick(rng, n); }

  Trace word(int d) {
    int len = 1 + roll(std::max(1, d));
    Trace w;
    for (int i = 0; i < len; ++i) w.push_back(act());
    return w;
  }

  FId atom() { return roll(4) == 0 ? ft().ff() : ft().tt(); }

  FId exist(int b, int d) {
    if (b <= 0) return atom();
    switch (roll(d > 0 ? 4 : 2)) {
      case 0: return atom();
      case 1: return ft().raw_and({exist(b / 2, d), exist(b / 2, d)});
      case 2: return ft().mdia(act(), exist(b - 1, d - 1));
      default: return ft().raw_or({exist(b / 2, d), exist(b / 2, d)});
    }
  }

  FId univ(int b, int d) {
    if (b <= 0) return atom();
    switch (roll(d > 0 ? 4 : 2)) {
      case 0: return atom();
      case 1: return ft().raw_and({univ(b / 2, d), univ(b / 2, d)});
      case 2: return ft().mbox(act(), univ(b - 1, d - 1));
      default: return ft().raw_or({univ(b / 2, d), univ(b / 2, d)});
    }
  }

  FId full(int b, int d) {
    if (b <= 0) return atom();
    switch (roll(d > 0 ? 6 : 3)) {
      case 0: return atom();
      case 1: return ft().raw_and({full(b / 2, d), full(b / 2, d)});
      case 2: return ft().raw_or({full(b / 2, d), full(b / 2, d)});
      case 3: return ft().mneg(full(b - 1, d));
      case 4: return ft().mdia(act(), full(b - 1, d - 1));
      default: return ft().mbox(act(), full(b - 1, d - 1));
    }
  }

  FId gamma_f(int b) {
    if (b <= 0 || roll(2) == 0) return ft().mbox(act(), ft().ff());
    return ft().raw_and({gamma_f(b / 2), gamma_f(b / 2)});
  }

  FId gamma_if(int b, int d) {
    if (b <= 0 || roll(2) == 0)
      return ft().mbox_seq(word(d), ft().ff());
    return ft().raw_and({gamma_if(b / 2, d), gamma_if(b / 2, d)});
  }

  FId branching(Sem s, int b, int d) {
    if (b <= 0) return atom();
    // the extra production of each branching semantics
    switch (roll(d > 0 ? 5 : 3)) {
      case 0: return atom();
      case 1:
        switch (s) {
          case Sem::CS: return d >= 1 ? ft().mzero() : atom();
          case Sem::RS: return d >= 1 ? ft().mbox(act(), ft().ff()) : atom();
          case Sem::TS: return d >= 1 ? ft().mbox_seq(word(d), ft().ff()) : atom();
          case Sem::TwoS:
            if (d < 1) return atom();
            return roll(2) == 0 ? ft().mneg(exist(b - 1, d)) : univ(b - 1, d);
          default: return atom();
        }
      case 2: return ft().raw_and({branching(s, b / 2, d), branching(s, b / 2, d)});
      case 3: return ft().raw_or({branching(s, b / 2, d), branching(s, b / 2, d)});
      default: return ft().mdia(act(), branching(s, b - 1, d - 1));
    }
  }

  FId conf(int b, int d) {
    if (b <= 0) return atom();
    switch (roll(d > 0 ? 4 : 3)) {
      case 0: return atom();
      case 1: return ft().raw_and({conf(b / 2, d), conf(b / 2, d)});
      case 2: return ft().raw_or({conf(b / 2, d), conf(b / 2, d)});
      default: return ft().mconf(act(), conf(b - 1, d - 1));
    }
  }

  // the set-or-box member a word-family conjunction may repeat; every one of
  // these carries at least one modality, so depth 0 falls back to tt
  FId set_member(Sem s, int b, int d) {
    if (d < 1) return ft().tt();
    switch (s) {
      case Sem::F: case Sem::FT: return gamma_f(b);
      case Sem::R: case Sem::RT: return ft().mready(rand_mask(cx, rng));
      case Sem::IF: case Sem::IFT: return gamma_if(b, d);
      case Sem::PF: case Sem::PFT:
        return ft().mtraceset(rand_trace_set(cx, rng, 3, d - 1));
      case Sem::IS: case Sem::IST: return univ(b, d);
      default:  // PS, PST
        return roll(2) == 0 ? exist(b, d) : univ(b, d);
    }
  }

  FId psi(Sem s, int b, int d) {
    if (b <= 0 || d <= 0) return ft().tt();
    int r = roll(4);
    if (r == 0) return ft().tt();
    if (r == 1) {
      // a bare set member where the grammar has one; tt otherwise
      switch (s) {
        case Sem::T: return ft().tt();
        case Sem::CT: return ft().mzero();
        default: return set_member(s, b, d);
      }
    }
    if (r == 2) return ft().mdia(act(), psi(s, b - 1, d - 1));
    // the conjunction production; the semantics without one prefix instead
    switch (s) {
      case Sem::T: case Sem::CT: case Sem::IS:
      case Sem::F: case Sem::R: case Sem::IF: case Sem::PF:
        return ft().mdia(act(), psi(s, b - 1, d - 1));
      case Sem::PS: {
        std::vector<FId> kids{exist(b / 2, d), univ(b / 2, d)};
        if (roll(2) == 0) kids.push_back(roll(2) ? exist(b / 4, d) : univ(b / 4, d));
        return ft().raw_and(std::move(kids));
      }
      default: {
        std::vector<FId> kids{set_member(s, b / 2, d)};
        if (roll(3) == 0) kids.push_back(set_member(s, b / 4, d));
        if (roll(4) != 0) kids.push_back(psi(s, b / 2, d));
        return ft().raw_and(std::move(kids));
      }
    }
  }

  FId top(Sem s, int b, int d) {
    if (b > 2 && roll(3) == 0) {
      std::vector<FId> kids{top(s, b / 2, d), top(s, b / 2, d)};
      return roll(2) ? ft().raw_and(std::move(kids)) : ft().raw_or(std::move(kids));
    }
    if (sem_is_branching(s)) return s == Sem::BS ? full(b, d) : branching(s, b, d);
    if (s == Sem::CONF) return conf(b, d);
    return psi(s, b, d);
  }
};

}  // namespace

CP sample_process(Ctx& cx, Rng& rng, int max_depth, int max_width) {
  return cx.procs.canonicalize(sample_pp(cx, rng, max_depth, max_width));
}

Trace sample_trace(Ctx& cx, Rng& rng, int max_len) {
  Trace w;
  int len = pick(rng, max_len + 1);
  for (int i = 0; i < len; ++i) w.push_back(rand_act(cx, rng));
  return w;
}

FId sample_formula(Ctx& cx, Sem s, Rng& rng, int max_depth, int node_budget) {
  FGen g{cx, rng};
  FId f = g.top(s, node_budget, max_depth);
  if (!grammar_check(cx, s, f))
    throw std::logic_error("sampler drifted from the grammar of " +
                           std::string(sem_name(s)) + ": " +
                           print_formula(cx, f));
  return f;
}

Obs sample_word_obs(Ctx& cx, Sem s, Rng& rng, int max_items) {
  if (!sem_is_word(s))
    throw ParseError("word observations exist for the word families only");
  Obs x{s, {}};
  int n = pick(rng, max_items) + 1;
  for (int i = 0; i < n; ++i) {
    ObsItem it;
    if (rng() % 2) {
      it.k = ObsItem::Act;
      it.act = rand_act(cx, rng);
    } else {
      switch (sem_datum(s)) {
        case Datum::Acts:
          it.k = ObsItem::Acts;
          it.acts = rand_mask(cx, rng);
          break;
        case Datum::Traces:
          it.k = ObsItem::Traces;
          it.traces = rand_trace_set(cx, rng, 2, 2);
          break;
        default:
          it.k = ObsItem::Classes;
          it.classes = rand_classes(cx, rng, 2);
          break;
      }
    }
    x.items.push_back(std::move(it));
  }
  return x;
}

}  // namespace sk
