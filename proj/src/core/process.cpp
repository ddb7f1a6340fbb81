#include "core/process.hpp"

#include <algorithm>

namespace sk {

PP Proc::nil() {
  static const PP n = std::make_shared<Proc>(Proc{Nil, -1, nullptr, nullptr});
  return n;
}
PP Proc::prefix(int a, PP p) {
  return std::make_shared<Proc>(Proc{Prefix, a, std::move(p), nullptr});
}
PP Proc::sum(PP a, PP b) {
  return std::make_shared<Proc>(Proc{Sum, -1, std::move(a), std::move(b)});
}

static void collect_transitions(const PP& p, std::vector<std::pair<int, PP>>& out) {
  switch (p->kind) {
    case Proc::Nil: break;
    case Proc::Prefix: out.emplace_back(p->act, p->c1); break;
    case Proc::Sum:
      collect_transitions(p->c1, out);
      collect_transitions(p->c2, out);
      break;
  }
}

std::vector<std::pair<int, PP>> transitions(const PP& p) {
  std::vector<std::pair<int, PP>> out;
  collect_transitions(p, out);
  return out;
}

ActMask initials(const PP& p) {
  switch (p->kind) {
    case Proc::Nil: return 0;
    case Proc::Prefix: return 1u << p->act;
    case Proc::Sum: return initials(p->c1) | initials(p->c2);
  }
  return 0;
}

int depth(const PP& p) {
  switch (p->kind) {
    case Proc::Nil: return 0;
    case Proc::Prefix: return 1 + depth(p->c1);
    case Proc::Sum: return std::max(depth(p->c1), depth(p->c2));
  }
  return 0;
}

// ---------------------------------------------------------------- parsing

namespace {

struct PParser {
  const std::string& s;
  const Alphabet& al;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

  // sum ::= term ('+' term)* ; '+' is lowest precedence, left-associated
  PP parse_sum() {
    PP left = parse_term();
    skip_ws();
    while (i < s.size() && s[i] == '+') {
      ++i;
      PP right = parse_term();
      left = Proc::sum(left, right);
      skip_ws();
    }
    return left;
  }

  // term ::= '0' | '(' sum ')' | IDENT '.' term
  PP parse_term() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of input, expected a process term");
    char c = s[i];
    if (c == '0') {
      ++i;
      return Proc::nil();
    }
    if (c == '(') {
      ++i;
      PP inner = parse_sum();
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      size_t start = i;
      ++i;
      while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string name = s.substr(start, i - start);
      auto a = al.index(name);
      if (!a) {
        i = start;
        fail("unknown action '" + name + "' (alphabet has " + mask_to_string(al, al.full_mask()) + ")");
      }
      skip_ws();
      if (i >= s.size() || s[i] != '.') fail("expected '.' after action '" + name + "'");
      ++i;
      return Proc::prefix(*a, parse_term());
    }
    fail(std::string("unexpected character '") + c + "' in process term");
  }
};

}  // namespace

PP parse_process(const std::string& text, const Alphabet& al) {
  PParser pp{text, al};
  PP r = pp.parse_sum();
  pp.skip_ws();
  if (pp.i != text.size()) pp.fail("trailing input after process term");
  return r;
}

static void print_proc_rec(const PP& p, const Alphabet& al, std::string& out) {
  switch (p->kind) {
    case Proc::Nil: out += "0"; break;
    case Proc::Prefix:
      out += al.name(p->act);
      out += ".";
      if (p->c1->kind == Proc::Sum) {
        out += "(";
        print_proc_rec(p->c1, al, out);
        out += ")";
      } else {
        print_proc_rec(p->c1, al, out);
      }
      break;
    case Proc::Sum:
      print_proc_rec(p->c1, al, out);
      out += " + ";
      print_proc_rec(p->c2, al, out);
      break;
  }
}

std::string print_process(const PP& p, const Alphabet& al) {
  std::string out;
  print_proc_rec(p, al, out);
  return out;
}

// ------------------------------------------------------------- canonical

CanonTable::CanonTable(const Alphabet& al) : al_(al) {
  nil_ = intern({});
}

CP CanonTable::intern(std::vector<std::pair<int, CP>> kids) {
  std::sort(kids.begin(), kids.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second->text < y.second->text;
  });
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());

  std::vector<std::pair<int, uint32_t>> key;
  key.reserve(kids.size());
  for (auto& [a, c] : kids) key.emplace_back(a, c->id);
  auto it = nodes_.find(key);
  if (it != nodes_.end()) return it->second.get();

  auto node = std::make_unique<CanonNode>();
  node->id = static_cast<uint32_t>(nodes_.size());
  node->kids = std::move(kids);
  for (auto& [a, c] : node->kids) {
    node->depth = std::max(node->depth, 1 + c->depth);
    node->initials |= 1u << a;
  }
  if (node->kids.empty()) {
    node->text = "0";
  } else {
    std::string t;
    for (size_t k = 0; k < node->kids.size(); ++k) {
      if (k) t += " + ";
      auto& [a, c] = node->kids[k];
      t += al_.name(a);
      t += ".";
      if (c->kids.size() >= 2) {
        t += "(" + c->text + ")";
      } else {
        t += c->text;
      }
    }
    node->text = std::move(t);
  }
  CP raw = node.get();
  nodes_.emplace(std::move(key), std::move(node));
  return raw;
}

CP CanonTable::canonicalize(const PP& p) {
  std::vector<std::pair<int, CP>> kids;
  for (auto& [a, q] : transitions(p)) kids.emplace_back(a, canonicalize(q));
  return intern(std::move(kids));
}

PP canon_to_proc(CP c) {
  if (c->kids.empty()) return Proc::nil();
  PP acc = nullptr;
  for (auto it = c->kids.rbegin(); it != c->kids.rend(); ++it) {
    PP part = Proc::prefix(it->first, canon_to_proc(it->second));
    acc = acc ? Proc::sum(std::move(part), std::move(acc)) : std::move(part);
  }
  return acc;
}

int canon_size(CP c) {
  int n = 1;
  for (const auto& [a, k] : c->kids) n += canon_size(k);
  return n;
}

std::string trace_to_string(const Trace& t, const Alphabet& al) {
  return al.encode_word(t);
}

}  // namespace sk
