#include "cubical/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cubical {

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::C1: return "C1";
    case Axiom::C2: return "C2";
    case Axiom::C3: return "C3";
    case Axiom::C4: return "C4";
    case Axiom::Ma: return "Ma";
    case Axiom::Mb: return "Mb";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::Ma, Axiom::Mb})
    if (to_string(a) == name) return a;
  return std::nullopt;
}

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::Medium: return "medium";
    case Kind::CubicalNotMedium: return "cubical_not_medium";
    case Kind::NotCubical: return "not_cubical";
  }
  return "?";
}

namespace {

struct Arc {
  TokenId token;
  StateId to;
};

std::vector<std::vector<Arc>> effective_arcs(const TokenSystem& sys,
                                             const std::vector<bool>* excluded = nullptr) {
  std::vector<std::vector<Arc>> arcs(sys.num_states());
  for (StateId s : sys.states())
    for (TokenId t : sys.tokens()) {
      if (excluded && (*excluded)[t.value]) continue;
      if (StateId v = sys.step(s, t); v != s) arcs[s.value].push_back({t, v});
    }
  return arcs;
}

/// BFS over effective arcs; parent[v] = (predecessor, token). Stops early once
/// `stop` accepts a reached state and returns it.
struct Bfs {
  std::vector<std::optional<std::pair<StateId, TokenId>>> parent;
  std::vector<bool> seen;
  std::vector<std::size_t> depth;

  Message path_to(StateId v) const {
    std::vector<TokenId> rev;
    while (parent[v.value]) {
      rev.push_back(parent[v.value]->second);
      v = parent[v.value]->first;
    }
    return Message(std::vector<TokenId>(rev.rbegin(), rev.rend()));
  }
};

template <class Stop>
std::optional<StateId> bfs(const std::vector<std::vector<Arc>>& arcs, StateId start, Bfs& out,
                           Stop stop) {
  const std::size_t n = arcs.size();
  out.parent.assign(n, std::nullopt);
  out.seen.assign(n, false);
  out.depth.assign(n, 0);
  std::deque<StateId> queue{start};
  out.seen[start.value] = true;
  while (!queue.empty()) {
    StateId u = queue.front();
    queue.pop_front();
    if (stop(u)) return u;
    for (const Arc& a : arcs[u.value]) {
      if (out.seen[a.to.value]) continue;
      out.seen[a.to.value] = true;
      out.parent[a.to.value] = std::make_pair(u, a.token);
      out.depth[a.to.value] = out.depth[u.value] + 1;
      queue.push_back(a.to);
    }
  }
  return std::nullopt;
}

Message shortest_message(const std::vector<std::vector<Arc>>& arcs, StateId from, StateId to) {
  Bfs b;
  bfs(arcs, from, b, [&](StateId u) { return u == to; });
  return b.path_to(to);
}

bool all_reverses_exist(const TokenSystem& sys) {
  for (TokenId t : sys.tokens())
    if (!sys.reverse(t)) return false;
  return true;
}

std::size_t default_bound(const TokenSystem& sys, const CheckOptions& opts) {
  return opts.bound ? opts.bound : 2 * sys.num_states();
}

AxiomVerdict holds(Axiom a, Method m = Method::exact_method()) {
  return AxiomVerdict{a, true, std::nullopt, m};
}

AxiomVerdict fails(Axiom a, Witness w, Method m = Method::exact_method()) {
  return AxiomVerdict{a, false, std::move(w), m};
}

// Cycle-space analysis. With every token reversible, each effective arc
// (u, t, v) has the anti-parallel arc (v, rev t, u), so stepwise-effective
// closed messages are closed walks on an undirected multigraph. The signed
// per-class count is an antisymmetric edge value (integers for a proper
// reverse pair, Z/2 for a self-reverse token), and every closed walk is
// balanced iff that value is a potential difference along a spanning forest.
class CycleSpace {
 public:
  explicit CycleSpace(const TokenSystem& sys) : sys_(sys), arcs_(effective_arcs(sys)) {
    const std::size_t n = sys.num_states();
    const std::size_t k = sys.num_pair_classes();
    potential_.assign(n, std::vector<long long>(k, 0));
    component_.assign(n, n);
    parent_.assign(n, std::nullopt);
    depth_.assign(n, 0);
    for (StateId root : sys.states()) {
      if (component_[root.value] != n) continue;
      component_[root.value] = root.value;
      std::deque<StateId> queue{root};
      while (!queue.empty()) {
        StateId u = queue.front();
        queue.pop_front();
        for (const Arc& a : arcs_[u.value]) {
          if (component_[a.to.value] != n) continue;
          component_[a.to.value] = root.value;
          parent_[a.to.value] = std::make_pair(u, a.token);
          depth_[a.to.value] = depth_[u.value] + 1;
          potential_[a.to.value] = shifted(potential_[u.value], a.token);
          queue.push_back(a.to);
        }
      }
    }
  }

  /// A closed, non-vacuous message if some fundamental cycle is unbalanced.
  std::optional<std::pair<StateId, Message>> unbalanced_cycle() const {
    for (StateId u : sys_.states())
      for (const Arc& a : arcs_[u.value]) {
        if (shifted(potential_[u.value], a.token) == potential_[a.to.value]) continue;
        StateId lca = common_ancestor(u, a.to);
        Message m = tree_path_down(lca, u);
        m.push_back(a.token);
        m = m + tree_path_up(a.to, lca);
        return std::make_pair(lca, m);
      }
    return std::nullopt;
  }

  /// Two distinct states of one component with equal potential; only
  /// meaningful once unbalanced_cycle() is empty.
  std::optional<std::pair<StateId, StateId>> potential_collision() const {
    std::map<std::pair<std::size_t, std::vector<long long>>, StateId> first;
    for (StateId s : sys_.states()) {
      auto [it, fresh] = first.emplace(std::make_pair(component_[s.value], potential_[s.value]), s);
      if (!fresh) return std::make_pair(it->second, s);
    }
    return std::nullopt;
  }

  const std::vector<std::vector<Arc>>& arcs() const { return arcs_; }

 private:
  std::vector<long long> shifted(std::vector<long long> p, TokenId t) const {
    const std::size_t c = sys_.pair_class(t);
    if (sys_.reverse(t) == t) {
      p[c] = (p[c] + 1) % 2;
    } else {
      p[c] += sys_.class_representative(c) == t ? 1 : -1;
    }
    return p;
  }

  StateId common_ancestor(StateId a, StateId b) const {
    while (depth_[a.value] > depth_[b.value]) a = parent_[a.value]->first;
    while (depth_[b.value] > depth_[a.value]) b = parent_[b.value]->first;
    while (a != b) {
      a = parent_[a.value]->first;
      b = parent_[b.value]->first;
    }
    return a;
  }

  Message tree_path_down(StateId ancestor, StateId v) const {
    std::vector<TokenId> rev;
    while (v != ancestor) {
      rev.push_back(parent_[v.value]->second);
      v = parent_[v.value]->first;
    }
    return Message(std::vector<TokenId>(rev.rbegin(), rev.rend()));
  }

  Message tree_path_up(StateId v, StateId ancestor) const {
    Message m;
    while (v != ancestor) {
      m.push_back(*sys_.reverse(parent_[v.value]->second));
      v = parent_[v.value]->first;
    }
    return m;
  }

  const TokenSystem& sys_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::vector<long long>> potential_;
  std::vector<std::size_t> component_;
  std::vector<std::optional<std::pair<StateId, TokenId>>> parent_;
  std::vector<std::size_t> depth_;
};

/// Occurrences of each token and its reverse alternate in m.
bool alternates(const TokenSystem& sys, const Message& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[j] != m[i]) continue;
      auto r = sys.reverse(m[i]);
      bool between = false;
      for (std::size_t k = i + 1; k < j && !between; ++k) between = r && m[k] == *r;
      if (!between) return false;
      break;  // later occurrences are checked from j onwards
    }
  return true;
}

}  // namespace

AxiomVerdict check_c1(const TokenSystem& sys) {
  for (TokenId t : sys.tokens()) {
    auto r = sys.reverse(t);
    if (!r || *r == t) return fails(Axiom::C1, Witness{.token = t});
  }
  return holds(Axiom::C1);
}

AxiomVerdict check_c2(const TokenSystem& sys) {
  const auto arcs = effective_arcs(sys);
  for (StateId s : sys.states()) {
    Bfs b;
    bfs(arcs, s, b, [](StateId) { return false; });
    for (StateId v : sys.states())
      if (!b.seen[v.value]) return fails(Axiom::C2, Witness{.from = s, .to = v});
  }
  return holds(Axiom::C2);
}

AxiomVerdict check_c3(const TokenSystem& sys, const CheckOptions& opts) {
  if (!all_reverses_exist(sys)) {
    AxiomVerdict v = check_c3_bounded(sys, default_bound(sys, opts), opts.node_budget);
    return v;
  }
  CycleSpace cs(sys);
  if (auto cycle = cs.unbalanced_cycle())
    return fails(Axiom::C3, Witness{.from = cycle->first, .message = cycle->second});
  if (auto pair = cs.potential_collision())
    return fails(Axiom::C3, Witness{.from = pair->first,
                                    .to = pair->second,
                                    .message = shortest_message(cs.arcs(), pair->first, pair->second)});
  return holds(Axiom::C3);
}

AxiomVerdict check_mb(const TokenSystem& sys, const CheckOptions& opts) {
  if (!all_reverses_exist(sys)) return check_mb_bounded(sys, default_bound(sys, opts), opts.node_budget);
  CycleSpace cs(sys);
  if (auto cycle = cs.unbalanced_cycle())
    return fails(Axiom::Mb, Witness{.from = cycle->first, .message = cycle->second});
  return holds(Axiom::Mb);
}

AxiomVerdict check_c4(const TokenSystem& sys) {
  for (TokenId t : sys.tokens()) {
    std::vector<bool> excluded(sys.num_tokens(), false);
    excluded[t.value] = true;
    if (auto r = sys.reverse(t)) excluded[r->value] = true;
    const auto arcs = effective_arcs(sys, &excluded);
    for (StateId s : sys.states()) {
      if (!sys.is_effective(s, t)) continue;
      Bfs b;
      auto hit = bfs(arcs, sys.step(s, t), b, [&](StateId u) { return sys.is_effective(u, t); });
      if (!hit) continue;
      Message m{t};
      m = m + b.path_to(*hit);
      m.push_back(t);
      return fails(Axiom::C4, Witness{.token = t, .from = s, .message = m});
    }
  }
  return holds(Axiom::C4);
}

AxiomVerdict check_ma(const TokenSystem& sys, const CheckOptions& opts) {
  const std::size_t classes = sys.num_pair_classes();
  if (classes > 64)
    throw Error(ErrorCode::BudgetExceeded, "Ma check supports at most 64 reverse-pair classes");
  const auto arcs = effective_arcs(sys);
  std::size_t nodes = 0;
  for (StateId s : sys.states()) {
    std::vector<bool> reached(sys.num_states(), false);
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    std::vector<std::pair<StateId, std::uint64_t>> stack{{s, 0}};
    seen.emplace(s.value, 0);
    while (!stack.empty()) {
      auto [u, mask] = stack.back();
      stack.pop_back();
      reached[u.value] = true;
      if (++nodes > opts.node_budget)
        throw Error(ErrorCode::BudgetExceeded, "Ma search exceeded the node budget");
      for (const Arc& a : arcs[u.value]) {
        const std::uint64_t bit = std::uint64_t{1} << sys.pair_class(a.token);
        if (mask & bit) continue;
        if (seen.emplace(a.to.value, mask | bit).second) stack.emplace_back(a.to, mask | bit);
      }
    }
    for (StateId v : sys.states())
      if (!reached[v.value]) return fails(Axiom::Ma, Witness{.from = s, .to = v});
  }
  return holds(Axiom::Ma);
}

AxiomVerdict check_axiom(const TokenSystem& sys, Axiom a, const CheckOptions& opts) {
  switch (a) {
    case Axiom::C1: return check_c1(sys);
    case Axiom::C2: return check_c2(sys);
    case Axiom::C3: return check_c3(sys, opts);
    case Axiom::C4: return check_c4(sys);
    case Axiom::Ma: return check_ma(sys, opts);
    case Axiom::Mb: return check_mb(sys, opts);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown axiom");
}

Classification classify(const TokenSystem& sys, const CheckOptions& opts) {
  Classification c;
  for (Axiom a : {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::Ma, Axiom::Mb})
    c.verdicts[static_cast<std::size_t>(a)] = check_axiom(sys, a, opts);
  const auto ok = [&](Axiom a) { return c.verdict(a).holds; };
  if (!(ok(Axiom::C1) && ok(Axiom::C2) && ok(Axiom::C3) && ok(Axiom::C4)))
    c.kind = Kind::NotCubical;
  else if (ok(Axiom::Ma) && ok(Axiom::Mb))
    c.kind = Kind::Medium;
  else
    c.kind = Kind::CubicalNotMedium;
  return c;
}

bool is_cubical(const TokenSystem& sys) {
  // C3 is exact here: C1 guarantees reverses.
  return check_c1(sys).holds && check_c2(sys).holds && check_c3(sys).holds && check_c4(sys).holds;
}

void require_cubical(const TokenSystem& sys) {
  for (Axiom a : {Axiom::C1, Axiom::C2, Axiom::C4, Axiom::C3}) {
    AxiomVerdict v = check_axiom(sys, a);
    if (!v.holds)
      throw Error(ErrorCode::NotCubical,
                  "system is not cubical: " + std::string(to_string(a)) + " fails");
  }
}

bool MessageFilter::accepts(const TokenSystem& sys, StateId start, const Message& m,
                            StateId end) const {
  if (closed_only && end != start) return false;
  if (target && end != *target) return false;
  if (concise_only && !is_concise(sys, start, m)) return false;
  return true;
}

void for_each_message(const TokenSystem& sys, StateId start, std::size_t max_len,
                      const std::function<bool(const Message&, StateId)>& visit,
                      std::size_t node_budget) {
  if (start.value >= sys.num_states()) throw Error(ErrorCode::UnknownState, "state out of range");
  const auto arcs = effective_arcs(sys);
  std::size_t nodes = 0;
  Message m;
  // Explicit stack of (state, next arc index).
  std::vector<std::pair<StateId, std::size_t>> stack{{start, 0}};
  if (!visit(m, start)) return;
  ++nodes;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    if (m.size() >= max_len || next >= arcs[u.value].size()) {
      stack.pop_back();
      if (!m.empty()) m.pop_back();
      continue;
    }
    const Arc a = arcs[u.value][next++];
    m.push_back(a.token);
    if (++nodes > node_budget)
      throw Error(ErrorCode::BudgetExceeded, "message enumeration exceeded the node budget");
    if (!visit(m, a.to)) return;
    stack.emplace_back(a.to, 0);
  }
}

std::vector<Message> enumerate_messages(const TokenSystem& sys, StateId start, std::size_t max_len,
                                        const MessageFilter& filter, std::size_t node_budget) {
  std::vector<Message> out;
  for_each_message(
      sys, start, max_len,
      [&](const Message& m, StateId end) {
        if (filter.accepts(sys, start, m, end)) out.push_back(m);
        return true;
      },
      node_budget);
  std::stable_sort(out.begin(), out.end(), [](const Message& a, const Message& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.tokens() < b.tokens();
  });
  return out;
}

AxiomVerdict check_c3_bounded(const TokenSystem& sys, std::size_t max_len, std::size_t node_budget) {
  for (StateId s : sys.states()) {
    std::optional<Message> bad;
    for_each_message(
        sys, s, max_len,
        [&](const Message& m, StateId end) {
          if ((end == s) != is_vacuous(sys, m)) {
            bad = m;
            return false;
          }
          return true;
        },
        node_budget);
    if (bad) return fails(Axiom::C3, Witness{.from = s, .message = *bad}, Method::bounded(max_len));
  }
  return holds(Axiom::C3, Method::bounded(max_len));
}

AxiomVerdict check_mb_bounded(const TokenSystem& sys, std::size_t max_len, std::size_t node_budget) {
  for (StateId s : sys.states()) {
    std::optional<Message> bad;
    for_each_message(
        sys, s, max_len,
        [&](const Message& m, StateId end) {
          if (end == s && !is_vacuous(sys, m)) {
            bad = m;
            return false;
          }
          return true;
        },
        node_budget);
    if (bad) return fails(Axiom::Mb, Witness{.from = s, .message = *bad}, Method::bounded(max_len));
  }
  return holds(Axiom::Mb, Method::bounded(max_len));
}

AxiomVerdict check_c4_bounded(const TokenSystem& sys, std::size_t max_len, std::size_t node_budget) {
  for (StateId s : sys.states()) {
    std::optional<Message> bad;
    for_each_message(
        sys, s, max_len,
        [&](const Message& m, StateId) {
          // Every prefix is visited, so only the last token needs scanning.
          if (m.empty()) return true;
          const TokenId t = m[m.size() - 1];
          const auto r = sys.reverse(t);
          for (std::size_t k = m.size() - 1; k-- > 0;) {
            if (m[k] == t) {
              bad = m;
              return false;
            }
            if (r && m[k] == *r) break;
          }
          return true;
        },
        node_budget);
    if (bad) {
      const TokenId t = (*bad)[bad->size() - 1];
      return fails(Axiom::C4, Witness{.token = t, .from = s, .message = *bad},
                   Method::bounded(max_len));
    }
  }
  return holds(Axiom::C4, Method::bounded(max_len));
}

bool witness_replays(const TokenSystem& sys, const AxiomVerdict& v) {
  if (v.holds || !v.witness) return false;
  const Witness& w = *v.witness;
  switch (v.axiom) {
    case Axiom::C1: {
      if (!w.token) return false;
      auto r = reverse_of(sys, *w.token);
      return !r || *r == *w.token;
    }
    case Axiom::C2:
    case Axiom::Ma: {
      if (!w.from || !w.to || *w.from == *w.to) return false;
      MessageFilter f{.concise_only = v.axiom == Axiom::Ma, .target = *w.to};
      // Shortest producing messages visit distinct states; concise ones use
      // each reverse-pair class at most once.
      const std::size_t len = v.axiom == Axiom::C2 ? sys.num_states() - 1 : sys.num_pair_classes();
      return enumerate_messages(sys, *w.from, len, f).empty();
    }
    case Axiom::C3:
      return w.from && w.message && is_stepwise_effective(sys, *w.from, *w.message) &&
             is_closed(sys, *w.from, *w.message) != is_vacuous(sys, *w.message);
    case Axiom::Mb:
      return w.from && w.message && is_closed(sys, *w.from, *w.message) &&
             !is_vacuous(sys, *w.message);
    case Axiom::C4:
      return w.from && w.message && is_stepwise_effective(sys, *w.from, *w.message) &&
             !alternates(sys, *w.message);
  }
  return false;
}

std::string describe(const TokenSystem& sys, const AxiomVerdict& v) {
  std::ostringstream out;
  out << to_string(v.axiom) << ' ' << (v.holds ? "holds" : "fails");
  if (!v.method.exact) out << " (bounded, L=" << v.method.bound << ")";
  if (v.witness) {
    const Witness& w = *v.witness;
    out << ": witness";
    if (w.token) out << " token " << sys.token_name(*w.token);
    if (w.from) out << " from " << sys.state_name(*w.from);
    if (w.to) out << " to " << sys.state_name(*w.to);
    if (w.message) out << " message " << format_message(sys, *w.message);
  }
  return out.str();
}

}  // namespace cubical
