#include "cubical/content.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "cubical/axioms.hpp"

namespace cubical {

std::size_t occurrence_count(const Message& m, TokenId t) {
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), t));
}

ContentSet message_content(const TokenSystem& sys, const Message& m) {
  std::vector<std::size_t> count(sys.num_tokens(), 0);
  for (TokenId t : m) {
    if (t.value >= sys.num_tokens()) throw Error(ErrorCode::UnknownToken, "token index out of range");
    if (!sys.reverse(t))
      throw Error(ErrorCode::NoReverse, "token '" + sys.token_name(t) + "' has no reverse");
    ++count[t.value];
  }
  ContentSet c;
  for (TokenId t : sys.tokens())
    if (count[t.value] > 0 && count[t.value] > count[sys.reverse(t)->value]) c.insert(t);
  return c;
}

StateContents::StateContents(const TokenSystem& sys) {
  require_cubical(sys);
  const std::size_t n = sys.num_states();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  // Incoming effective arcs, for distance-to-target searches.
  std::vector<std::vector<StateId>> incoming(n);
  for (StateId u : sys.states())
    for (TokenId t : sys.tokens())
      if (StateId v = sys.step(u, t); v != u) incoming[v.value].push_back(u);

  contents_.resize(n);
  for (StateId target : sys.states()) {
    std::vector<std::size_t> dist(n, kInf);
    dist[target.value] = 0;
    std::deque<StateId> queue{target};
    while (!queue.empty()) {
      StateId v = queue.front();
      queue.pop_front();
      for (StateId u : incoming[v.value])
        if (dist[u.value] == kInf) {
          dist[u.value] = dist[v.value] + 1;
          queue.push_back(u);
        }
    }
    ContentSet& out = contents_[target.value];
    for (StateId source : sys.states()) {
      Message m;
      for (StateId u = source; u != target;) {
        for (TokenId t : sys.tokens()) {
          StateId v = sys.step(u, t);
          if (v != u && dist[v.value] + 1 == dist[u.value]) {
            m.push_back(t);
            u = v;
            break;
          }
        }
      }
      const ContentSet c = message_content(sys, m);
      out.insert(c.begin(), c.end());
    }
  }
}

ContentSet state_content(const TokenSystem& sys, StateId s) {
  if (s.value >= sys.num_states()) throw Error(ErrorCode::UnknownState, "state index out of range");
  return StateContents(sys).of(s);
}

ContentSet state_content_oracle(const TokenSystem& sys, StateId s, std::size_t max_len) {
  if (s.value >= sys.num_states()) throw Error(ErrorCode::UnknownState, "state index out of range");
  for (TokenId t : sys.tokens())
    if (!sys.reverse(t))
      throw Error(ErrorCode::NoReverse, "token '" + sys.token_name(t) + "' has no reverse");

  // Messages sharing their end state and their per-token surplus over the
  // reverse have the same content now and after any extension, so walking
  // the (end state, surplus) pairs covers every producing message.
  const std::size_t k = sys.num_tokens();
  using Node = std::pair<std::size_t, std::vector<long long>>;
  std::set<Node> seen;
  std::vector<Node> frontier;
  for (StateId v : sys.states()) {
    Node start{v.value, std::vector<long long>(k, 0)};
    seen.insert(start);
    frontier.push_back(std::move(start));
  }
  ContentSet out;
  const auto collect = [&](const Node& node) {
    if (node.first != s.value) return;
    for (TokenId t : sys.tokens())
      if (node.second[t.value] > 0) out.insert(t);
  };
  for (const Node& node : frontier) collect(node);
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      StateId u{node.first};
      for (TokenId t : sys.tokens()) {
        StateId v = sys.step(u, t);
        if (v == u) continue;
        Node succ{v.value, node.second};
        const TokenId r = *sys.reverse(t);
        if (r != t) {
          ++succ.second[t.value];
          --succ.second[r.value];
        }
        if (seen.insert(succ).second) {
          collect(succ);
          next.push_back(std::move(succ));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::pair<ContentSet, ContentSet> content_delta(const TokenSystem& sys, StateId s, StateId v) {
  StateContents contents(sys);
  const ContentSet& cs = contents.of(s);
  const ContentSet& cv = contents.of(v);
  ContentSet gained, lost;
  std::set_difference(cv.begin(), cv.end(), cs.begin(), cs.end(), std::inserter(gained, gained.end()));
  std::set_difference(cs.begin(), cs.end(), cv.begin(), cv.end(), std::inserter(lost, lost.end()));
  return {gained, lost};
}

std::vector<StateId> effective_domain(const TokenSystem& sys, TokenId t) {
  std::vector<StateId> out;
  for (StateId s : sys.states())
    if (sys.is_effective(s, t)) out.push_back(s);
  return out;
}

std::string format_content(const TokenSystem& sys, const ContentSet& c) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (TokenId t : c) {
    out << (first ? " " : ", ") << sys.token_name(t);
    first = false;
  }
  out << " }";
  return out.str();
}

}  // namespace cubical
