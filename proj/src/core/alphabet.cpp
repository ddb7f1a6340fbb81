#include "core/alphabet.hpp"

#include <algorithm>

namespace sk {

static bool valid_action_name(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Alphabet Alphabet::from_csv(const std::string& csv) {
  Alphabet al;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    std::string item = csv.substr(start, comma - start);
    // trim spaces
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) {
      if (!valid_action_name(item))
        throw ParseError("invalid action name '" + item + "'");
      al.names_.push_back(item);
    }
    if (comma == csv.size()) break;
    start = comma + 1;
  }
  if (al.names_.empty()) throw ParseError("alphabet is empty");
  std::sort(al.names_.begin(), al.names_.end());
  auto dup = std::adjacent_find(al.names_.begin(), al.names_.end());
  if (dup != al.names_.end())
    throw ParseError("duplicate action '" + *dup + "' in alphabet");
  if (al.names_.size() > 30) throw ParseError("alphabet too large (max 30 actions)");
  return al;
}

std::optional<int> Alphabet::index(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it != names_.end() && *it == name) return static_cast<int>(it - names_.begin());
  return std::nullopt;
}

std::vector<int> Alphabet::decode_word(std::string_view word) const {
  std::vector<int> out;
  size_t i = 0;
  while (i < word.size()) {
    int best = -1;
    size_t best_len = 0;
    for (size_t a = 0; a < names_.size(); ++a) {
      const std::string& n = names_[a];
      if (n.size() > best_len && word.compare(i, n.size(), n) == 0) {
        best = static_cast<int>(a);
        best_len = n.size();
      }
    }
    if (best < 0)
      throw ParseError("cannot decode action sequence '" + std::string(word) +
                           "' at offset " + std::to_string(i),
                       i);
    out.push_back(best);
    i += best_len;
  }
  return out;
}

std::string Alphabet::encode_word(const std::vector<int>& acts) const {
  std::string s;
  for (int a : acts) s += name(a);
  return s;
}

std::string mask_to_string(const Alphabet& al, ActMask m) {
  std::string s = "{";
  bool first = true;
  for (size_t a = 0; a < al.size(); ++a) {
    if (m & (1u << a)) {
      if (!first) s += ",";
      s += al.name(static_cast<int>(a));
      first = false;
    }
  }
  return s + "}";
}

}  // namespace sk
