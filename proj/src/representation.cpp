#include "cubical/representation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "cubical/axioms.hpp"

namespace cubical {

std::string label_name(const TokenSystem& sys, std::size_t pair_class) {
  const TokenId rep = sys.class_representative(pair_class);
  std::string name = sys.token_name(rep);
  if (auto r = sys.reverse(rep)) name = std::min(name, sys.token_name(*r));
  return "j:" + name;
}

SystemGraph system_graph(const TokenSystem& sys) {
  require_cubical(sys);
  SystemGraph g;
  for (std::size_t c = 0; c < sys.num_pair_classes(); ++c) g.label_names.push_back(label_name(sys, c));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (StateId s : sys.states())
    for (TokenId t : sys.tokens()) {
      const StateId v = sys.step(s, t);
      if (v == s) continue;
      const auto key = std::minmax(s.value, v.value);
      if (!seen.insert(key).second) continue;
      g.edges.push_back({StateId{key.first}, StateId{key.second}, sys.pair_class(t)});
    }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return g;
}

Isomorphism Embedding::isomorphism() const {
  Isomorphism iso;
  for (std::size_t s = 0; s < alpha.size(); ++s) iso.states.push_back(*gsystem.state_of(alpha[s]));
  for (auto [label, adds] : beta)
    iso.tokens.push_back(adds ? gsystem.add_token(label) : gsystem.remove_token(label));
  return iso;
}

namespace {

StateId lexicographic_first(const TokenSystem& sys) {
  StateId best{0};
  for (StateId s : sys.states())
    if (sys.state_name(s) < sys.state_name(best)) best = s;
  return best;
}

GSystem image_gsystem(const TokenSystem& sys, const std::vector<std::string>& labels,
                      const std::vector<Subset>& alpha) {
  CubeGraph graph;
  graph.family.ground = labels;
  graph.family.members = alpha;
  for (const auto& e : system_graph(sys).edges) graph.edges.emplace_back(e.a.value, e.b.value);
  return GSystem::build(std::move(graph));
}

}  // namespace

Embedding embed(const TokenSystem& sys, std::optional<StateId> base) {
  require_cubical(sys);
  const StateId root = base.value_or(lexicographic_first(sys));
  if (root.value >= sys.num_states()) throw Error(ErrorCode::UnknownState, "base state out of range");
  if (sys.num_pair_classes() > kMaxGround)
    throw Error(ErrorCode::InvalidArgument, "embedding supports at most 64 reverse-pair classes");

  std::vector<std::string> labels;
  for (std::size_t c = 0; c < sys.num_pair_classes(); ++c) labels.push_back(label_name(sys, c));

  // Parity of label crossings along a BFS tree from the base.
  std::vector<std::optional<Subset>> parity(sys.num_states());
  parity[root.value] = Subset();
  std::deque<StateId> queue{root};
  while (!queue.empty()) {
    StateId u = queue.front();
    queue.pop_front();
    for (TokenId t : sys.tokens()) {
      StateId v = sys.step(u, t);
      if (v == u || parity[v.value]) continue;
      parity[v.value] = parity[u.value]->toggled(sys.pair_class(t));
      queue.push_back(v);
    }
  }
  std::vector<Subset> alpha;
  std::set<Subset> distinct;
  for (const auto& p : parity) {
    if (!p) throw Error(ErrorCode::InternalInconsistency, "state unreachable from the base");
    if (!distinct.insert(*p).second)
      throw Error(ErrorCode::InternalInconsistency, "two states received the same label set");
    alpha.push_back(*p);
  }

  std::vector<std::optional<std::pair<std::size_t, bool>>> beta(sys.num_tokens());
  for (StateId p : sys.states())
    for (TokenId t : sys.tokens()) {
      StateId q = sys.step(p, t);
      if (q == p) continue;
      const std::size_t j = sys.pair_class(t);
      const Subset from = alpha[p.value], to = alpha[q.value];
      std::optional<std::pair<std::size_t, bool>> action;
      if (to == from.with(j) && from != to) action = std::make_pair(j, true);
      if (to == from.without(j) && from != to) action = std::make_pair(j, false);
      if (!action || (beta[t.value] && *beta[t.value] != *action))
        throw Error(ErrorCode::InternalInconsistency,
                    "token '" + sys.token_name(t) + "' does not act as a single label flip");
      beta[t.value] = action;
    }

  std::vector<std::pair<std::size_t, bool>> beta_out;
  for (TokenId t : sys.tokens()) {
    if (!beta[t.value]) throw Error(ErrorCode::InternalInconsistency, "token never effective");
    beta_out.push_back(*beta[t.value]);
  }
  GSystem image = image_gsystem(sys, labels, alpha);
  return Embedding{root, std::move(labels), std::move(alpha), std::move(beta_out), std::move(image)};
}

bool verify_embedding(const TokenSystem& sys, const Embedding& e) {
  try {
    if (e.alpha.size() != sys.num_states() || e.beta.size() != sys.num_tokens()) return false;
    if (e.base.value >= sys.num_states() || !e.alpha[e.base.value].empty()) return false;
    if (std::set<Subset>(e.alpha.begin(), e.alpha.end()).size() != e.alpha.size()) return false;
    for (StateId p : sys.states())
      for (TokenId t : sys.tokens()) {
        StateId q = sys.step(p, t);
        if (q == p) continue;
        const auto [label, adds] = e.beta[t.value];
        const Subset from = e.alpha[p.value], to = e.alpha[q.value];
        if ((from ^ to) != Subset().with(label)) return false;
        if (to.contains(label) != adds) return false;
      }
    const GSystem rebuilt = image_gsystem(sys, e.labels, e.alpha);
    Isomorphism iso;
    for (Subset a : e.alpha) iso.states.push_back(*rebuilt.state_of(a));
    for (auto [label, adds] : e.beta)
      iso.tokens.push_back(adds ? rebuilt.add_token(label) : rebuilt.remove_token(label));
    return check_isomorphism(sys, rebuilt.system(), iso);
  } catch (const Error&) {
    return false;
  }
}

CubicalGraphResult is_cubical_system_graph(const TokenSystem& sys) {
  try {
    embed(sys);
    return {true, {}};
  } catch (const Error& e) {
    return {false, std::string(to_string(e.code())) + ": " + e.what()};
  }
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const TokenSystem& sys, const SystemGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (StateId s : sys.states()) out << "  " << quoted(sys.state_name(s)) << ";\n";
  for (const auto& e : g.edges) {
    const TokenId rep = sys.class_representative(e.label);
    std::string label = sys.token_name(rep);
    if (auto r = sys.reverse(rep); r && *r != rep) label += "/" + sys.token_name(*r);
    out << "  " << quoted(sys.state_name(e.a)) << " -- " << quoted(sys.state_name(e.b))
        << " [label=" << quoted(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cubical
