#include "core/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

#include "core/ctx.hpp"

namespace sk {

static uint64_t hash_mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

static uint64_t node_hash(const FNode& n) {
  uint64_t h = static_cast<uint64_t>(n.k) * 0x100000001b3ull;
  h = hash_mix(h, static_cast<uint64_t>(n.act + 1));
  h = hash_mix(h, n.mask);
  for (auto& t : n.tset) {
    h = hash_mix(h, 0x7f);
    for (int a : t) h = hash_mix(h, static_cast<uint64_t>(a + 1));
  }
  for (FId k : n.kids) h = hash_mix(h, k);
  return h;
}

static bool node_eq(const FNode& a, const FNode& b) {
  return a.k == b.k && a.act == b.act && a.mask == b.mask && a.tset == b.tset &&
         a.kids == b.kids;
}

FormulaTable::FormulaTable() {
  FNode t{FK::True};
  FNode f{FK::False};
  intern(std::move(t));
  intern(std::move(f));
}

FId FormulaTable::intern(FNode n) {
  n.hash = node_hash(n);
  auto [lo, hi] = index_.equal_range(n.hash);
  for (auto it = lo; it != hi; ++it)
    if (node_eq(nodes_[it->second], n)) return it->second;

  switch (n.k) {
    case FK::True: case FK::False:
      n.modal_depth = 0;
      break;
    case FK::And: case FK::Or: case FK::Neg:
      for (FId k : n.kids) n.modal_depth = std::max(n.modal_depth, nodes_[k].modal_depth);
      break;
    case FK::Dia: case FK::Box: case FK::ConfDia:
      n.modal_depth = 1 + nodes_[n.kids[0]].modal_depth;
      break;
    case FK::ZeroF: case FK::Ready:
      n.modal_depth = 1;
      break;
    case FK::TraceSetF: {
      size_t longest = 0;
      for (auto& t : n.tset) longest = std::max(longest, t.size());
      n.modal_depth = static_cast<int>(longest) + 1;
      break;
    }
  }
  FId id = static_cast<FId>(nodes_.size());
  index_.emplace(n.hash, id);
  nodes_.push_back(std::move(n));
  return id;
}

FId FormulaTable::mand(std::vector<FId> kids) {
  std::vector<FId> flat;
  for (FId k : kids) {
    const FNode& n = nodes_[k];
    if (n.k == FK::True) continue;
    if (n.k == FK::False) return ff();
    if (n.k == FK::And) {
      flat.insert(flat.end(), n.kids.begin(), n.kids.end());
    } else {
      flat.push_back(k);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return tt();
  if (flat.size() == 1) return flat[0];
  FNode n{FK::And};
  n.kids = std::move(flat);
  return intern(std::move(n));
}

FId FormulaTable::mor(std::vector<FId> kids) {
  std::vector<FId> flat;
  for (FId k : kids) {
    const FNode& n = nodes_[k];
    if (n.k == FK::False) continue;
    if (n.k == FK::True) return tt();
    if (n.k == FK::Or) {
      flat.insert(flat.end(), n.kids.begin(), n.kids.end());
    } else {
      flat.push_back(k);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return ff();
  if (flat.size() == 1) return flat[0];
  FNode n{FK::Or};
  n.kids = std::move(flat);
  return intern(std::move(n));
}

FId FormulaTable::raw_and(std::vector<FId> kids) {
  std::vector<FId> flat;
  for (FId k : kids) {
    const FNode& n = nodes_[k];
    if (n.k == FK::And)
      flat.insert(flat.end(), n.kids.begin(), n.kids.end());
    else
      flat.push_back(k);
  }
  std::sort(flat.begin(), flat.end());
  if (flat.size() == 1) return flat[0];
  FNode n{FK::And};
  n.kids = std::move(flat);
  return intern(std::move(n));
}

FId FormulaTable::raw_or(std::vector<FId> kids) {
  std::vector<FId> flat;
  for (FId k : kids) {
    const FNode& n = nodes_[k];
    if (n.k == FK::Or)
      flat.insert(flat.end(), n.kids.begin(), n.kids.end());
    else
      flat.push_back(k);
  }
  std::sort(flat.begin(), flat.end());
  if (flat.size() == 1) return flat[0];
  FNode n{FK::Or};
  n.kids = std::move(flat);
  return intern(std::move(n));
}

FId FormulaTable::mneg(FId f) {
  const FNode& n = nodes_[f];
  if (n.k == FK::True) return ff();
  if (n.k == FK::False) return tt();
  if (n.k == FK::Neg) return n.kids[0];
  FNode m{FK::Neg};
  m.kids = {f};
  return intern(std::move(m));
}

FId FormulaTable::mdia(int a, FId f) {
  FNode n{FK::Dia};
  n.act = a;
  n.kids = {f};
  return intern(std::move(n));
}

FId FormulaTable::mbox(int a, FId f) {
  FNode n{FK::Box};
  n.act = a;
  n.kids = {f};
  return intern(std::move(n));
}

FId FormulaTable::mdia_seq(const std::vector<int>& tau, FId f) {
  FId acc = f;
  for (auto it = tau.rbegin(); it != tau.rend(); ++it) acc = mdia(*it, acc);
  return acc;
}

FId FormulaTable::mbox_seq(const std::vector<int>& tau, FId f) {
  FId acc = f;
  for (auto it = tau.rbegin(); it != tau.rend(); ++it) acc = mbox(*it, acc);
  return acc;
}

FId FormulaTable::mzero() {
  FNode n{FK::ZeroF};
  return intern(std::move(n));
}

FId FormulaTable::mready(ActMask y) {
  FNode n{FK::Ready};
  n.mask = y;
  return intern(std::move(n));
}

FId FormulaTable::mtraceset(std::vector<std::vector<int>> g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  FNode n{FK::TraceSetF};
  n.tset = std::move(g);
  return intern(std::move(n));
}

FId FormulaTable::mconf(int a, FId f) {
  FNode n{FK::ConfDia};
  n.act = a;
  n.kids = {f};
  return intern(std::move(n));
}

// --------------------------------------------------------------- desugar

FId desugar(Ctx& cx, FId f) {
  auto it = cx.desugar_memo.find(f);
  if (it != cx.desugar_memo.end()) return it->second;
  FormulaTable& ft = cx.forms;
  const FNode n = ft.node(f);  // copy: interning may reallocate nodes_
  FId r = f;
  switch (n.k) {
    case FK::True: case FK::False:
      break;
    case FK::And: case FK::Or: {
      std::vector<FId> kids;
      for (FId k : n.kids) kids.push_back(desugar(cx, k));
      r = (n.k == FK::And) ? ft.mand(kids) : ft.mor(kids);
      break;
    }
    case FK::Neg:
      r = ft.mneg(desugar(cx, n.kids[0]));
      break;
    case FK::Dia:
      r = ft.mdia(n.act, desugar(cx, n.kids[0]));
      break;
    case FK::Box:
      r = ft.mneg(ft.mdia(n.act, ft.mneg(desugar(cx, n.kids[0]))));
      break;
    case FK::ZeroF: {
      std::vector<FId> kids;
      for (size_t a = 0; a < cx.al.size(); ++a)
        kids.push_back(ft.mneg(ft.mdia(static_cast<int>(a), ft.tt())));
      r = ft.mand(kids);
      break;
    }
    case FK::Ready: {
      std::vector<FId> kids;
      for (size_t a = 0; a < cx.al.size(); ++a) {
        FId d = ft.mdia(static_cast<int>(a), ft.tt());
        kids.push_back((n.mask >> a) & 1 ? d : ft.mneg(d));
      }
      r = ft.mand(kids);
      break;
    }
    case FK::TraceSetF: {
      size_t longest = 0;
      for (auto& t : n.tset) longest = std::max(longest, t.size());
      size_t bound = longest + 1;
      // all words of length <= bound, in lexicographic layers
      std::vector<Trace> words = {{}};
      std::vector<FId> kids;
      size_t produced = 0;
      for (size_t len = 0; len <= bound; ++len) {
        for (const Trace& w : words) {
          bool inside = std::binary_search(n.tset.begin(), n.tset.end(), w);
          FId dia = ft.mdia_seq(w, ft.tt());
          kids.push_back(inside ? dia : ft.mneg(dia));
          if (++produced > 20000)
            throw BudgetError("trace-set desugaring too large");
        }
        if (len == bound) break;
        std::vector<Trace> next;
        for (const Trace& w : words)
          for (size_t a = 0; a < cx.al.size(); ++a) {
            Trace e = w;
            e.push_back(static_cast<int>(a));
            next.push_back(std::move(e));
          }
        words = std::move(next);
      }
      r = ft.mand(kids);
      break;
    }
    case FK::ConfDia:
      // <<a>>f  ==  <a>tt /\ [a]f
      r = ft.mand({ft.mdia(n.act, ft.tt()),
                   ft.mneg(ft.mdia(n.act, ft.mneg(desugar(cx, n.kids[0]))))});
      break;
  }
  cx.desugar_memo.emplace(f, r);
  return r;
}

// Builds the De Morgan normal form of "not f" without a Neg node (except for
// negations already present in f, which simply cancel).
FId neg_push(Ctx& cx, FId f) {
  auto it = cx.negpush_memo.find(f);
  if (it != cx.negpush_memo.end()) return it->second;
  FormulaTable& ft = cx.forms;
  const FNode n = ft.node(f);
  FId r;
  switch (n.k) {
    case FK::True: r = ft.ff(); break;
    case FK::False: r = ft.tt(); break;
    case FK::Neg: r = n.kids[0]; break;
    case FK::And: {
      std::vector<FId> kids;
      for (FId k : n.kids) kids.push_back(neg_push(cx, k));
      r = ft.mor(kids);
      break;
    }
    case FK::Or: {
      std::vector<FId> kids;
      for (FId k : n.kids) kids.push_back(neg_push(cx, k));
      r = ft.mand(kids);
      break;
    }
    case FK::Dia: r = ft.mbox(n.act, neg_push(cx, n.kids[0])); break;
    case FK::Box: r = ft.mdia(n.act, neg_push(cx, n.kids[0])); break;
    case FK::ZeroF: {
      std::vector<FId> kids;
      for (size_t a = 0; a < cx.al.size(); ++a)
        kids.push_back(ft.mdia(static_cast<int>(a), ft.tt()));
      r = ft.mor(kids);
      break;
    }
    case FK::Ready: {
      std::vector<FId> kids;
      for (size_t a = 0; a < cx.al.size(); ++a) {
        if ((n.mask >> a) & 1)
          kids.push_back(ft.mbox(static_cast<int>(a), ft.ff()));
        else
          kids.push_back(ft.mdia(static_cast<int>(a), ft.tt()));
      }
      r = ft.mor(kids);
      break;
    }
    case FK::TraceSetF:
      r = neg_push(cx, desugar(cx, f));
      break;
    case FK::ConfDia:
      throw ParseError("the conformance modality has no negation here");
  }
  cx.negpush_memo.emplace(f, r);
  return r;
}

// --------------------------------------------------------------- parsing

namespace {

struct FParser {
  Ctx& cx;
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }
  bool eat(const char* tok) {
    size_t n = strlen(tok);
    if (s.compare(i, n, tok) == 0) {
      i += n;
      return true;
    }
    return false;
  }

  std::string read_ident() {
    size_t start = i;
    if (i >= s.size() || s[i] < 'a' || s[i] > 'z') fail("expected an action name");
    ++i;
    while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }

  int read_action() {
    size_t at = i;
    std::string name = read_ident();
    auto a = cx.al.index(name);
    if (!a) {
      i = at;
      fail("unknown action '" + name + "' (alphabet has " +
           mask_to_string(cx.al, cx.al.full_mask()) + ")");
    }
    return *a;
  }

  // or ::= and ('\/' and)*
  FId parse_or() {
    std::vector<FId> kids = {parse_and()};
    skip_ws();
    while (eat("\\/")) {
      kids.push_back(parse_and());
      skip_ws();
    }
    return kids.size() == 1 ? kids[0] : cx.forms.raw_or(kids);
  }

  // and ::= unary ('/\' unary)*
  FId parse_and() {
    std::vector<FId> kids = {parse_unary()};
    skip_ws();
    while (eat("/\\")) {
      kids.push_back(parse_unary());
      skip_ws();
    }
    return kids.size() == 1 ? kids[0] : cx.forms.raw_and(kids);
  }

  FId parse_unary() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of formula");
    if (eat("~")) return cx.forms.mneg(parse_unary());
    if (s[i] == '<') {
      if (eat("<<")) {
        int a = read_action();
        if (!eat(">>")) fail("expected '>>'");
        return cx.forms.mconf(a, parse_unary());
      }
      ++i;
      if (eat("tau:")) {
        std::vector<int> tau = read_word('>');
        if (!eat(">")) fail("expected '>'");
        return cx.forms.mdia_seq(tau, parse_unary());
      }
      int a = read_action();
      if (!eat(">")) fail("expected '>'");
      return cx.forms.mdia(a, parse_unary());
    }
    if (s[i] == '[') {
      ++i;
      if (eat("tau:")) {
        std::vector<int> tau = read_word(']');
        if (!eat("]")) fail("expected ']'");
        return cx.forms.mbox_seq(tau, parse_unary());
      }
      int a = read_action();
      if (!eat("]")) fail("expected ']'");
      return cx.forms.mbox(a, parse_unary());
    }
    return parse_atom();
  }

  std::vector<int> read_word(char stop) {
    size_t start = i;
    while (i < s.size() && s[i] != stop && s[i] != ',' && s[i] != '}') ++i;
    std::string word = s.substr(start, i - start);
    try {
      return cx.al.decode_word(word);
    } catch (const ParseError& e) {
      i = start + (e.pos == std::string::npos ? 0 : e.pos);
      throw ParseError(e.what(), i);
    }
  }

  FId parse_atom() {
    skip_ws();
    if (eat("tt")) return cx.forms.tt();
    if (eat("ff")) return cx.forms.ff();
    if (eat("0f")) return cx.forms.mzero();
    if (eat("ready{")) {
      ActMask y = 0;
      skip_ws();
      if (!eat("}")) {
        while (true) {
          y |= 1u << read_action();
          skip_ws();
          if (eat("}")) break;
          if (!eat(",")) fail("expected ',' or '}' in ready set");
          skip_ws();
        }
      }
      return cx.forms.mready(y);
    }
    if (eat("traces{")) {
      std::vector<std::vector<int>> g;
      skip_ws();
      if (!eat("}")) {
        while (true) {
          // "-" denotes the empty trace; "traces{}" alone is the empty set
          if (eat("-"))
            g.emplace_back();
          else
            g.push_back(read_word('}'));
          skip_ws();
          if (eat("}")) break;
          if (!eat(",")) fail("expected ',' or '}' in trace set");
          skip_ws();
        }
      }
      return cx.forms.mtraceset(std::move(g));
    }
    if (eat("(")) {
      FId f = parse_or();
      skip_ws();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    fail("expected a formula");
  }
};

}  // namespace

FId parse_formula(Ctx& cx, const std::string& text) {
  FParser fp{cx, text};
  FId f = fp.parse_or();
  fp.skip_ws();
  if (fp.i != text.size()) fp.fail("trailing input after formula");
  return f;
}

// -------------------------------------------------------------- printing

namespace {

struct FPrinter {
  const Ctx& cx;
  std::unordered_map<FId, std::string> memo;

  // precedence: 0 = or, 1 = and, 2 = unary/atom
  const std::string& str(FId f) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    const FNode& n = cx.forms.node(f);
    std::string out;
    switch (n.k) {
      case FK::True: out = "tt"; break;
      case FK::False: out = "ff"; break;
      case FK::ZeroF: out = "0f"; break;
      case FK::Ready: {
        out = "ready{";
        bool first = true;
        for (size_t a = 0; a < cx.al.size(); ++a)
          if ((n.mask >> a) & 1) {
            if (!first) out += ",";
            out += cx.al.name(static_cast<int>(a));
            first = false;
          }
        out += "}";
        break;
      }
      case FK::TraceSetF: {
        out = "traces{";
        for (size_t t = 0; t < n.tset.size(); ++t) {
          if (t) out += ",";
          out += n.tset[t].empty() ? "-" : cx.al.encode_word(n.tset[t]);
        }
        out += "}";
        break;
      }
      case FK::Neg: out = "~" + arg(n.kids[0]); break;
      case FK::Dia: out = "<" + cx.al.name(n.act) + ">" + arg(n.kids[0]); break;
      case FK::Box: out = "[" + cx.al.name(n.act) + "]" + arg(n.kids[0]); break;
      case FK::ConfDia: out = "<<" + cx.al.name(n.act) + ">>" + arg(n.kids[0]); break;
      case FK::And: out = join(n.kids, " /\\ ", /*wrap_or=*/true); break;
      case FK::Or: out = join(n.kids, " \\/ ", /*wrap_or=*/false); break;
    }
    return memo.emplace(f, std::move(out)).first->second;
  }

  // modality/negation argument: parenthesized when it is a binary connective
  std::string arg(FId f) {
    const FNode& n = cx.forms.node(f);
    if (n.k == FK::And || n.k == FK::Or) return "(" + str(f) + ")";
    return str(f);
  }

  std::string join(const std::vector<FId>& kids, const char* sep, bool wrap_or) {
    std::vector<std::string> parts;
    parts.reserve(kids.size());
    for (FId k : kids) {
      const FNode& n = cx.forms.node(k);
      bool wrap = wrap_or && n.k == FK::Or;
      parts.push_back(wrap ? "(" + str(k) + ")" : str(k));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j) out += sep;
      out += parts[j];
    }
    return out;
  }
};

}  // namespace

std::string print_formula(const Ctx& cx, FId f) {
  FPrinter p{cx, {}};
  return p.str(f);
}

static void dag_count(const Ctx& cx, FId f, std::vector<char>& seen) {
  if (seen[f]) return;
  seen[f] = 1;
  for (FId k : cx.forms.node(f).kids) dag_count(cx, k, seen);
}

size_t formula_dag_size(const Ctx& cx, FId f) {
  std::vector<char> seen(cx.forms.size(), 0);
  dag_count(cx, f, seen);
  size_t n = 0;
  for (char c : seen) n += c;
  return n;
}

}  // namespace sk
