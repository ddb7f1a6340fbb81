// Universe enumeration: one representative per bisimulation class, bottom-up.
// The classes of depth <= d are exactly the subsets of Act x classes(<= d-1),
// because canonical children sets are in bijection with bisimulation classes.
#include <algorithm>
#include <cmath>

#include "core/ctx.hpp"

namespace sk {

static std::string projected_count(int acts, size_t prev) {
  double bits = static_cast<double>(acts) * static_cast<double>(prev);
  double log10v = bits * std::log10(2.0);
  return "2^" + std::to_string(static_cast<long long>(bits)) + " (~1e" +
         std::to_string(static_cast<long long>(log10v)) + ")";
}

const Universe& Ctx::universe(int max_depth) {
  auto it = universes_.find(max_depth);
  if (it != universes_.end()) return *it->second;

  auto uni = std::make_unique<Universe>();
  uni->max_depth = max_depth;

  std::vector<CP> level = {procs.nil()};  // classes of depth <= 0
  for (int d = 1; d <= max_depth; ++d) {
    // candidate children: Act x classes(<= d-1)
    std::vector<std::pair<int, CP>> pairs;
    for (size_t a = 0; a < al.size(); ++a)
      for (CP c : level) pairs.emplace_back(static_cast<int>(a), c);

    size_t n = pairs.size();
    if (n >= 63 || (1ull << n) > static_cast<uint64_t>(class_cap))
      throw BudgetError("universe(" + std::to_string(max_depth) +
                        ") would have " + projected_count(static_cast<int>(al.size()), level.size()) +
                        " classes, over the cap of " + std::to_string(class_cap));

    std::vector<CP> next;
    next.reserve(1ull << n);
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<std::pair<int, CP>> kids;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) kids.push_back(pairs[i]);
      next.push_back(procs.intern(std::move(kids)));
    }
    level = std::move(next);
  }

  uni->members = std::move(level);
  std::sort(uni->members.begin(), uni->members.end(), canon_less);
  for (size_t i = 0; i < uni->members.size(); ++i)
    uni->index[uni->members[i]->id] = static_cast<int>(i);

  auto& slot = universes_[max_depth];
  slot = std::move(uni);
  return *slot;
}

const TraceSet& Ctx::traces_of(CP p) {
  auto it = traces_memo.find(p->id);
  if (it != traces_memo.end()) return it->second;
  TraceSet ts;
  ts.push_back({});  // epsilon
  for (auto& [a, c] : p->kids) {
    for (const Trace& t : traces_of(c)) {
      Trace ext;
      ext.reserve(t.size() + 1);
      ext.push_back(a);
      ext.insert(ext.end(), t.begin(), t.end());
      ts.push_back(std::move(ext));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return traces_memo.emplace(p->id, std::move(ts)).first->second;
}

const TraceSet& Ctx::ctraces_of(CP p) {
  auto it = ctraces_memo.find(p->id);
  if (it != ctraces_memo.end()) return it->second;
  TraceSet ts;
  if (p->leaf()) ts.push_back({});
  for (auto& [a, c] : p->kids) {
    for (const Trace& t : ctraces_of(c)) {
      Trace ext;
      ext.reserve(t.size() + 1);
      ext.push_back(a);
      ext.insert(ext.end(), t.begin(), t.end());
      ts.push_back(std::move(ext));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ctraces_memo.emplace(p->id, std::move(ts)).first->second;
}

static void reach_rec(CP p, Trace& prefix, std::vector<std::pair<Trace, CP>>& out) {
  out.emplace_back(prefix, p);
  for (auto& [a, c] : p->kids) {
    prefix.push_back(a);
    reach_rec(c, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::pair<Trace, CP>> reachable_states(CP p) {
  std::vector<std::pair<Trace, CP>> out;
  Trace prefix;
  reach_rec(p, prefix, out);
  return out;
}

}  // namespace sk
