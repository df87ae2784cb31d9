#include "cubical/gsystem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "cubical/random.hpp"

namespace cubical {

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

void SetFamily::validate() const {
  if (ground.size() > kMaxGround)
    throw Error(ErrorCode::InvalidArgument, "ground sets are limited to 64 elements");
  std::set<std::string> names;
  for (const auto& g : ground) {
    if (g.empty()) throw Error(ErrorCode::InvalidArgument, "empty ground element name");
    if (!names.insert(g).second) throw Error(ErrorCode::DuplicateName, "duplicate ground element '" + g + "'");
  }
  if (members.size() < 2) throw Error(ErrorCode::InvalidArgument, "a family needs at least two members");
  const std::uint64_t mask = ground.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground.size()) - 1;
  std::set<Subset> seen;
  for (Subset m : members) {
    if ((m.bits() & ~mask) != 0) throw Error(ErrorCode::InvalidArgument, "member outside the ground set");
    if (!seen.insert(m).second) throw Error(ErrorCode::DuplicateName, "duplicate member " + name_of(m));
  }
}

std::optional<std::size_t> SetFamily::find(Subset s) const {
  auto it = std::find(members.begin(), members.end(), s);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

Subset SetFamily::all_union() const {
  Subset u;
  for (Subset m : members) u = u | m;
  return u;
}

Subset SetFamily::all_intersection() const {
  if (members.empty()) return {};
  Subset i = members.front();
  for (Subset m : members) i = i & m;
  return i;
}

std::string SetFamily::name_of(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : s.elements()) {
    if (!first) out += ',';
    out += e < ground.size() ? ground[e] : "#" + std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::optional<std::size_t> SetFamily::element(std::string_view name) const {
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (ground[i] == name) return i;
  return std::nullopt;
}

CubeGraph CubeGraph::induced(SetFamily family) {
  CubeGraph g{std::move(family), {}};
  const auto& ms = g.family.members;
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (distance(ms[a], ms[b]) == 1) g.edges.emplace_back(a, b);
  return g;
}

bool CubeGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool CubeGraph::is_connected() const {
  const std::size_t n = family.members.size();
  if (n == 0) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        queue.push_back(v);
      }
  }
  return count == n;
}

void CubeGraph::validate() const {
  family.validate();
  for (auto [a, b] : edges) {
    if (a >= family.members.size() || b >= family.members.size() || a == b)
      throw Error(ErrorCode::NotCubeEdge, "edge refers to an unknown member");
    if (distance(family.members[a], family.members[b]) != 1)
      throw Error(ErrorCode::NotCubeEdge, "edge " + family.name_of(family.members[a]) + "|" +
                                              family.name_of(family.members[b]) +
                                              " is not an edge of the cube");
  }
  if (!is_connected()) throw Error(ErrorCode::Disconnected, "the cube subgraph is not connected");
}

std::string add_token_name(const std::string& element) { return "g:" + element; }
std::string remove_token_name(const std::string& element) { return "g~:" + element; }

GSystem GSystem::build(CubeGraph graph) {
  graph.validate();
  for (auto& [a, b] : graph.edges)
    if (a > b) std::swap(a, b);
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());

  const SetFamily& fam = graph.family;
  const Subset active_set = Subset(fam.all_union().bits() & ~fam.all_intersection().bits());
  if (active_set.empty())
    throw Error(ErrorCode::DegenerateGround, "union minus intersection of the family is empty");
  const std::vector<std::size_t> active = active_set.elements();

  std::vector<std::string> states;
  for (Subset m : fam.members) states.push_back(fam.name_of(m));

  std::vector<std::pair<std::string, MoveTable>> tokens;
  for (std::size_t x : active) {
    MoveTable add, remove;
    for (auto [a, b] : graph.edges) {
      if ((fam.members[a] ^ fam.members[b]) != Subset().with(x)) continue;
      if (fam.members[b].contains(x)) std::swap(a, b);  // a holds x, b lacks it
      add.emplace_back(states[b], states[a]);
      remove.emplace_back(states[a], states[b]);
    }
    tokens.emplace_back(add_token_name(fam.ground[x]), std::move(add));
    tokens.emplace_back(remove_token_name(fam.ground[x]), std::move(remove));
  }
  try {
    TokenSystem sys = TokenSystem::build(std::move(states), std::move(tokens));
    return GSystem(std::move(graph), std::move(sys), active);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IdentityToken || e.code() == ErrorCode::DuplicateToken)
      throw Error(ErrorCode::InternalInconsistency, std::string("G-system construction: ") + e.what());
    throw;
  }
}

std::optional<StateId> GSystem::state_of(Subset s) const {
  if (auto i = graph_.family.find(s)) return StateId{*i};
  return std::nullopt;
}

TokenId GSystem::add_token(std::size_t element) const {
  auto it = std::find(active_.begin(), active_.end(), element);
  if (it == active_.end()) throw Error(ErrorCode::UnknownToken, "element carries no token");
  return TokenId{2 * static_cast<std::size_t>(it - active_.begin())};
}

TokenId GSystem::remove_token(std::size_t element) const {
  return TokenId{add_token(element).value + 1};
}

std::pair<std::size_t, bool> GSystem::token_action(TokenId t) const {
  if (t.value >= 2 * active_.size()) throw Error(ErrorCode::UnknownToken, "token index out of range");
  return {active_[t.value / 2], t.value % 2 == 0};
}

Message walk_to_message(const GSystem& g, const std::vector<Subset>& walk) {
  Message m;
  if (walk.empty()) throw Error(ErrorCode::NotAWalk, "a walk has at least one vertex");
  std::optional<StateId> prev = g.state_of(walk.front());
  if (!prev) throw Error(ErrorCode::NotAWalk, "walk vertex is not a family member");
  for (std::size_t i = 1; i < walk.size(); ++i) {
    auto cur = g.state_of(walk[i]);
    if (!cur || !g.graph().has_edge(prev->value, cur->value))
      throw Error(ErrorCode::NotAWalk, "consecutive walk vertices are not a graph edge");
    const Subset diff = walk[i - 1] ^ walk[i];
    const std::size_t x = diff.elements().front();
    m.push_back(walk[i].contains(x) ? g.add_token(x) : g.remove_token(x));
    prev = cur;
  }
  return m;
}

std::vector<Subset> message_to_walk(const GSystem& g, Subset start, const Message& m) {
  auto s = g.state_of(start);
  if (!s) throw Error(ErrorCode::UnknownState, "start is not a family member");
  if (!is_stepwise_effective(g.system(), *s, m))
    throw Error(ErrorCode::NotStepwiseEffective, "message is not stepwise effective for the start");
  std::vector<Subset> walk;
  for (StateId v : produced_sequence(g.system(), *s, m)) walk.push_back(g.set_of(v));
  return walk;
}

CubeGraph random_cube_graph(std::size_t ground_size, std::size_t max_members, double edge_p,
                            std::mt19937_64& rng) {
  if (ground_size < 1 || ground_size > 20)
    throw Error(ErrorCode::InvalidArgument, "random cube graphs support 1..20 ground elements");
  if (max_members < 2) throw Error(ErrorCode::InvalidArgument, "need room for two members");
  SetFamily fam;
  for (std::size_t i = 0; i < ground_size; ++i) fam.ground.push_back("x" + std::to_string(i));

  const std::size_t cube = std::size_t{1} << ground_size;
  const std::size_t cap = std::min(max_members, cube);
  const std::size_t target = 2 + uniform_index(rng, cap - 1);

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> tree;
  const Subset first(rng() & (cube - 1));
  fam.members.push_back(first);
  index.emplace(first.bits(), 0);
  while (fam.members.size() < target) {
    const std::size_t from = uniform_index(rng, fam.members.size());
    const Subset next = fam.members[from].toggled(uniform_index(rng, ground_size));
    if (index.count(next.bits())) continue;
    index.emplace(next.bits(), fam.members.size());
    tree.emplace_back(from, fam.members.size());
    fam.members.push_back(next);
  }

  CubeGraph g{fam, {}};
  std::set<std::pair<std::size_t, std::size_t>> kept;
  for (auto [a, b] : tree) kept.emplace(std::min(a, b), std::max(a, b));
  for (std::size_t a = 0; a < fam.members.size(); ++a)
    for (std::size_t x = 0; x < ground_size; ++x) {
      auto it = index.find(fam.members[a].toggled(x).bits());
      if (it == index.end() || it->second < a) continue;
      const auto e = std::make_pair(a, it->second);
      if (kept.count(e) == 0 && uniform01(rng) < edge_p) kept.insert(e);
    }
  g.edges.assign(kept.begin(), kept.end());
  return g;
}

}  // namespace cubical
