#include "cubical/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cubical {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DuplicateToken: return "DuplicateToken";
    case ErrorCode::IdentityToken: return "IdentityToken";
    case ErrorCode::TooFewStates: return "TooFewStates";
    case ErrorCode::NoTokens: return "NoTokens";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoReverse: return "NoReverse";
    case ErrorCode::NotCubical: return "NotCubical";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotCubeEdge: return "NotCubeEdge";
    case ErrorCode::DegenerateGround: return "DegenerateGround";
    case ErrorCode::NotAWalk: return "NotAWalk";
    case ErrorCode::NotStepwiseEffective: return "NotStepwiseEffective";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ZeroTokenProbability: return "ZeroTokenProbability";
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DistributionError: return "DistributionError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Message operator+(const Message& m, const Message& n) {
  std::vector<TokenId> out = m.tokens_;
  out.insert(out.end(), n.tokens_.begin(), n.tokens_.end());
  return Message(std::move(out));
}

TokenSystem TokenSystem::build(std::vector<std::string> states,
                               std::vector<std::pair<std::string, MoveTable>> tokens) {
  TokenSystem sys;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty state name");
    if (!sys.state_index_.emplace(states[i], i).second)
      throw Error(ErrorCode::DuplicateName, "duplicate state name '" + states[i] + "'");
  }
  if (states.size() < 2)
    throw Error(ErrorCode::TooFewStates, "a token system needs at least two states");
  if (tokens.empty()) throw Error(ErrorCode::NoTokens, "a token system needs at least one token");
  sys.state_names_ = std::move(states);

  const std::size_t n = sys.state_names_.size();
  std::map<std::vector<std::size_t>, std::string> seen;
  for (auto& [name, moves] : tokens) {
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty token name");
    if (sys.state_index_.count(name) != 0 || !sys.token_index_.emplace(name, sys.token_names_.size()).second)
      throw Error(ErrorCode::DuplicateName, "duplicate name '" + name + "'");

    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    std::vector<bool> assigned(n, false);
    for (const auto& [from, to] : moves) {
      auto f = sys.state_index_.find(from);
      auto t = sys.state_index_.find(to);
      if (f == sys.state_index_.end())
        throw Error(ErrorCode::UnknownState, "token '" + name + "': unknown state '" + from + "'");
      if (t == sys.state_index_.end())
        throw Error(ErrorCode::UnknownState, "token '" + name + "': unknown state '" + to + "'");
      if (assigned[f->second] && image[f->second] != t->second)
        throw Error(ErrorCode::InvalidArgument,
                    "token '" + name + "' maps state '" + from + "' twice");
      assigned[f->second] = true;
      image[f->second] = t->second;
    }
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) identity = identity && image[i] == i;
    if (identity)
      throw Error(ErrorCode::IdentityToken, "token '" + name + "' is the identity transformation");
    auto [it, fresh] = seen.emplace(image, name);
    if (!fresh)
      throw Error(ErrorCode::DuplicateToken,
                  "tokens '" + it->second + "' and '" + name + "' are the same transformation");
    sys.token_names_.push_back(name);
    sys.images_.push_back(std::move(image));
  }
  sys.infer_reverses();
  return sys;
}

void TokenSystem::infer_reverses() {
  const std::size_t k = num_tokens();
  reverses_.assign(k, std::nullopt);
  for (std::size_t t = 0; t < k; ++t) reverses_[t] = reverse_of(*this, TokenId{t});

  pair_class_.assign(k, k);
  class_rep_.clear();
  for (std::size_t t = 0; t < k; ++t) {
    if (pair_class_[t] != k) continue;
    pair_class_[t] = class_rep_.size();
    if (reverses_[t]) pair_class_[reverses_[t]->value] = class_rep_.size();
    class_rep_.push_back(TokenId{t});
  }
  num_pair_classes_ = class_rep_.size();
}

std::optional<StateId> TokenSystem::find_state(std::string_view name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) return std::nullopt;
  return StateId{it->second};
}

std::optional<TokenId> TokenSystem::find_token(std::string_view name) const {
  auto it = token_index_.find(name);
  if (it == token_index_.end()) return std::nullopt;
  return TokenId{it->second};
}

StateId TokenSystem::state(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw Error(ErrorCode::UnknownState, "unknown state '" + std::string(name) + "'");
}

TokenId TokenSystem::token(std::string_view name) const {
  if (auto t = find_token(name)) return *t;
  throw Error(ErrorCode::UnknownToken, "unknown token '" + std::string(name) + "'");
}

Message TokenSystem::message(const std::vector<std::string>& names) const {
  Message m;
  for (const auto& n : names) m.push_back(token(n));
  return m;
}

std::vector<StateId> TokenSystem::states() const {
  std::vector<StateId> out;
  for (std::size_t i = 0; i < num_states(); ++i) out.push_back(StateId{i});
  return out;
}

std::vector<TokenId> TokenSystem::tokens() const {
  std::vector<TokenId> out;
  for (std::size_t i = 0; i < num_tokens(); ++i) out.push_back(TokenId{i});
  return out;
}

bool TokenSystem::operator==(const TokenSystem& other) const {
  return state_names_ == other.state_names_ && token_names_ == other.token_names_ &&
         images_ == other.images_;
}

namespace {

void check_resolves(const TokenSystem& sys, StateId s, const Message& m) {
  if (s.value >= sys.num_states())
    throw Error(ErrorCode::UnknownState, "state index out of range");
  for (TokenId t : m)
    if (t.value >= sys.num_tokens())
      throw Error(ErrorCode::UnknownToken, "token index out of range");
}

void check_resolves(const TokenSystem& sys, const Message& m) {
  for (TokenId t : m)
    if (t.value >= sys.num_tokens())
      throw Error(ErrorCode::UnknownToken, "token index out of range");
}

}  // namespace

StateId apply(const TokenSystem& sys, StateId s, const Message& m) {
  check_resolves(sys, s, m);
  for (TokenId t : m) s = sys.step(s, t);
  return s;
}

std::vector<StateId> produced_sequence(const TokenSystem& sys, StateId s, const Message& m) {
  check_resolves(sys, s, m);
  std::vector<StateId> seq{s};
  for (TokenId t : m) seq.push_back(sys.step(seq.back(), t));
  return seq;
}

std::optional<TokenId> reverse_of(const TokenSystem& sys, TokenId t) {
  if (t.value >= sys.num_tokens()) throw Error(ErrorCode::UnknownToken, "token index out of range");
  const auto states = sys.states();
  for (TokenId r : sys.tokens()) {
    bool ok = true;
    for (StateId s : states) {
      for (StateId v : states) {
        if (s == v) continue;
        if ((sys.step(s, t) == v) != (sys.step(v, r) == s)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return r;
  }
  return std::nullopt;
}

bool adjacent_to(const TokenSystem& sys, StateId s, StateId v) {
  if (s == v) return false;
  for (TokenId t : sys.tokens())
    if (sys.step(s, t) == v) return true;
  return false;
}

bool is_adjacent(const TokenSystem& sys, StateId s, StateId v) {
  return adjacent_to(sys, s, v) && adjacent_to(sys, v, s);
}

bool is_ineffective(const TokenSystem& sys, StateId s, const Message& m) {
  return apply(sys, s, m) == s;
}

bool is_stepwise_effective(const TokenSystem& sys, StateId s, const Message& m) {
  check_resolves(sys, s, m);
  for (TokenId t : m) {
    StateId next = sys.step(s, t);
    if (next == s) return false;
    s = next;
  }
  return true;
}

bool is_closed(const TokenSystem& sys, StateId s, const Message& m) {
  return is_stepwise_effective(sys, s, m) && is_ineffective(sys, s, m);
}

bool is_vacuous(const TokenSystem& sys, const Message& m) {
  check_resolves(sys, m);
  std::vector<std::size_t> count(sys.num_tokens(), 0);
  for (TokenId t : m) ++count[t.value];
  for (TokenId t : sys.tokens()) {
    const std::size_t c = count[t.value];
    if (c == 0) continue;
    auto r = sys.reverse(t);
    if (!r) return false;
    if (*r == t) {
      if (c % 2 != 0) return false;
    } else if (count[r->value] != c) {
      return false;
    }
  }
  return true;
}

bool is_concise(const TokenSystem& sys, StateId s, const Message& m) {
  if (!is_stepwise_effective(sys, s, m)) return false;
  std::vector<bool> used(sys.num_tokens(), false);
  for (TokenId t : m) {
    if (used[t.value]) return false;
    if (auto r = sys.reverse(t); r && used[r->value]) return false;
    used[t.value] = true;
  }
  return true;
}

std::optional<Message> reverse_message(const TokenSystem& sys, const Message& m) {
  check_resolves(sys, m);
  Message out;
  for (auto it = m.tokens().rbegin(); it != m.tokens().rend(); ++it) {
    auto r = sys.reverse(*it);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

Isomorphism Isomorphism::from_names(const TokenSystem& a, const TokenSystem& b,
                                    const std::map<std::string, std::string>& alpha,
                                    const std::map<std::string, std::string>& beta) {
  Isomorphism iso;
  for (const auto& name : a.state_names()) {
    auto it = alpha.find(name);
    if (it == alpha.end())
      throw Error(ErrorCode::NotBijective, "alpha does not map state '" + name + "'");
    iso.states.push_back(b.state(it->second));
  }
  for (const auto& name : a.token_names()) {
    auto it = beta.find(name);
    if (it == beta.end())
      throw Error(ErrorCode::NotBijective, "beta does not map token '" + name + "'");
    iso.tokens.push_back(b.token(it->second));
  }
  return iso;
}

namespace {

template <class Id>
void require_bijection(const std::vector<Id>& map, std::size_t domain, std::size_t codomain,
                       const char* what) {
  if (map.size() != domain || domain != codomain)
    throw Error(ErrorCode::NotBijective, std::string(what) + " is not a bijection (size mismatch)");
  std::vector<bool> hit(codomain, false);
  for (Id x : map) {
    if (x.value >= codomain || hit[x.value])
      throw Error(ErrorCode::NotBijective, std::string(what) + " is not a bijection");
    hit[x.value] = true;
  }
}

}  // namespace

bool check_isomorphism(const TokenSystem& a, const TokenSystem& b, const Isomorphism& iso) {
  require_bijection(iso.states, a.num_states(), b.num_states(), "alpha");
  require_bijection(iso.tokens, a.num_tokens(), b.num_tokens(), "beta");
  // Both sides are functions and alpha is a bijection, so S t = T <=>
  // alpha(S) beta(t) = alpha(T) reduces to alpha(S t) = alpha(S) beta(t).
  for (StateId s : a.states())
    for (TokenId t : a.tokens())
      if (iso.states[a.step(s, t).value] != b.step(iso.states[s.value], iso.tokens[t.value]))
        return false;
  return true;
}

std::string format_message(const TokenSystem& sys, const Message& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ", ";
    out << sys.token_name(m[i]);
  }
  out << ']';
  return out.str();
}

}  // namespace cubical
