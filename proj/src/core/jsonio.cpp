#include "core/jsonio.hpp"

#include "core/branching.hpp"
#include "core/formula.hpp"
#include "core/process.hpp"

namespace sk {

namespace {

ojson acts_array(const Alphabet& al, ActMask m) {
  ojson arr = ojson::array();
  for (size_t a = 0; a < al.size(); ++a)
    if (m & (1u << a)) arr.push_back(al.name(static_cast<int>(a)));
  return arr;
}

ojson traces_array(const Alphabet& al, const TraceSet& ts) {
  ojson arr = ojson::array();
  for (const Trace& t : ts)
    arr.push_back(t.empty() ? std::string("-") : al.encode_word(t));
  return arr;
}

ojson classes_array(const std::vector<CP>& cs) {
  ojson arr = ojson::array();
  for (CP c : cs) arr.push_back(c->text);
  return arr;
}

// The datum key names the role the set plays in the family's observations.
const char* datum_key(Sem s) {
  switch (s) {
    case Sem::F: case Sem::FT: return "refuse";
    case Sem::R: case Sem::RT: return "ready";
    case Sem::IF: case Sem::IFT: return "avoid";
    case Sem::PF: case Sem::PFT: return "traces";
    case Sem::IS: case Sem::IST: return "exclude";
    case Sem::PS: case Sem::PST: return "classes";
    default: return "set";
  }
}

const char* datum_suffix(Datum d) {
  switch (d) {
    case Datum::Acts: return "acts";
    case Datum::Traces: return "traces";
    case Datum::Classes: return "classes";
    default: return "none";
  }
}

ojson datum_value(const Ctx& cx, const ObsItem& it) {
  switch (it.k) {
    case ObsItem::Acts: return acts_array(cx.al, it.acts);
    case ObsItem::Traces: return traces_array(cx.al, it.traces);
    case ObsItem::Classes: return classes_array(it.classes);
    default: return ojson();
  }
}

}  // namespace

ojson obs_to_json(const Ctx& cx, const Obs& x) {
  ojson j;
  Datum d = sem_datum(x.sem);
  if (d == Datum::None) {
    j["kind"] = "trace";
    std::string w;
    for (const ObsItem& it : x.items) w += cx.al.name(it.act);
    j["trace"] = w;
    return j;
  }
  if (!sem_is_word(x.sem)) {
    j["kind"] = std::string("pair-") + datum_suffix(d);
    std::string w;
    const ObsItem* tail = nullptr;
    for (const ObsItem& it : x.items) {
      if (it.k == ObsItem::Act) w += cx.al.name(it.act);
      else tail = &it;
    }
    j["trace"] = w;
    if (tail) j[datum_key(x.sem)] = datum_value(cx, *tail);
    return j;
  }
  j["kind"] = std::string("word-") + datum_suffix(d);
  ojson items = ojson::array();
  for (const ObsItem& it : x.items) {
    ojson e;
    if (it.k == ObsItem::Act) e["act"] = cx.al.name(it.act);
    else e[datum_key(x.sem)] = datum_value(cx, it);
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

ojson chi_report(Ctx& cx, Sem s, CP p) {
  ojson j;
  j["semantics"] = std::string(sem_name(s));
  j["process"] = p->text;
  j["chi"] = print_formula(cx, chi(cx, s, p));
  j["barChi"] = print_formula(cx, bar_chi(cx, s, p));
  // basis size: explicit members for the branching families, tt plus one
  // formula per canonical observation for the linear ones
  size_t bsize;
  if (sem_is_branching(s)) {
    bsize = b_set(cx, s, p).all().size();
  } else {
    bsize = 1 + canonical_obs(cx, s, p).size();
  }
  j["bSize"] = bsize;
  return j;
}

ojson verdict_report(Ctx& cx, Sem s, FId f, const Verdict& v,
                     int universe_bound) {
  ojson j;
  j["formula"] = print_formula(cx, f);
  j["semantics"] = std::string(sem_name(s));
  switch (v.kind) {
    case Verdict::Kind::Inconsistent:
      j["verdict"] = "inconsistent";
      break;
    case Verdict::Kind::Characteristic:
      j["verdict"] = "characteristic";
      j["pivot"] = v.pivot->text;
      break;
    case Verdict::Kind::NonPrime: {
      j["verdict"] = "non-prime";
      j["witnesses"] = ojson::array(
          {print_formula(cx, v.w1), print_formula(cx, v.w2)});
      ojson reps = ojson::array();
      for (CP r : v.reps) reps.push_back(r->text);
      j["representation"] = std::move(reps);
      break;
    }
  }
  j["universeBound"] = universe_bound;
  return j;
}

ojson decompose_report(Ctx& cx, Sem s, FId f, const DecomposeResult& d,
                       int universe_bound) {
  ojson j;
  j["formula"] = print_formula(cx, f);
  j["semantics"] = std::string(sem_name(s));
  switch (d.status) {
    case DecomposeStatus::Inconsistent:
      j["status"] = "inconsistent";
      break;
    case DecomposeStatus::AlreadyCharacteristic:
      j["status"] = "characteristic";
      j["pivot"] = d.pivot->text;
      j["chi"] = print_formula(cx, d.chi_f);
      break;
    case DecomposeStatus::Decomposed:
      j["status"] = "decomposed";
      j["pivot"] = d.pivot->text;
      j["chi"] = print_formula(cx, d.chi_f);
      j["remainder"] = print_formula(cx, d.remainder);
      break;
  }
  j["universeBound"] = universe_bound;
  return j;
}

ojson spectrum_report(Ctx& cx, CP p, CP q) {
  ojson j;
  j["p"] = p->text;
  j["q"] = q->text;
  ojson rows = ojson::array();
  for (int k = 0; k < kSemCount; ++k) {
    Sem s = static_cast<Sem>(k);
    ojson row;
    row["semantics"] = std::string(sem_name(s));
    bool pq = preorder(cx, s, p, q);
    bool qp = preorder(cx, s, q, p);
    row["pq"] = pq;
    row["qp"] = qp;
    row["equivalent"] = pq && qp;
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

ojson suite_report_json(const SuiteReport& rep) {
  ojson j;
  j["suite"] = rep.suite;
  j["checks"] = rep.checks;
  j["violations"] = rep.violations;
  j["pass"] = rep.pass();
  return j;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace sk
