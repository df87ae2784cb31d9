#pragma once

// Finite token systems: states, tokens (total non-identity transformations of
// the state set), messages, and the basic predicates on them.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubical {

enum class ErrorCode {
  DuplicateName,
  DuplicateToken,
  IdentityToken,
  TooFewStates,
  NoTokens,
  UnknownState,
  UnknownToken,
  NotBijective,
  BudgetExceeded,
  NoReverse,
  NotCubical,
  Disconnected,
  NotCubeEdge,
  DegenerateGround,
  NotAWalk,
  NotStepwiseEffective,
  InternalInconsistency,
  ZeroTokenProbability,
  NotADistribution,
  SyntaxError,
  DistributionError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <class Tag>
struct Index {
  std::size_t value = 0;

  constexpr auto operator<=>(const Index&) const = default;
};

using StateId = Index<struct StateTag>;
using TokenId = Index<struct TokenTag>;

/// A finite string of tokens. The empty message acts as the identity.
class Message {
 public:
  Message() = default;
  explicit Message(std::vector<TokenId> tokens) : tokens_(std::move(tokens)) {}
  Message(std::initializer_list<TokenId> tokens) : tokens_(tokens) {}

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  TokenId operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const noexcept { return tokens_.begin(); }
  auto end() const noexcept { return tokens_.end(); }
  const std::vector<TokenId>& tokens() const noexcept { return tokens_; }

  void push_back(TokenId t) { tokens_.push_back(t); }
  void pop_back() { tokens_.pop_back(); }

  /// Concatenation mn.
  friend Message operator+(const Message& m, const Message& n);
  bool operator==(const Message&) const = default;

 private:
  std::vector<TokenId> tokens_;
};

/// Moves of one token given by name: source state -> target state. States not
/// listed are fixed points.
using MoveTable = std::vector<std::pair<std::string, std::string>>;

/// A token system (S, T). Immutable after construction; states and tokens
/// keep their declaration order, which is the order of every enumeration.
/// Reverses are inferred from the transformations, never declared.
class TokenSystem {
 public:
  /// Validates and builds a system. Throws Error with DuplicateName,
  /// DuplicateToken, IdentityToken, TooFewStates, NoTokens or UnknownState.
  static TokenSystem build(std::vector<std::string> states,
                           std::vector<std::pair<std::string, MoveTable>> tokens);

  std::size_t num_states() const noexcept { return state_names_.size(); }
  std::size_t num_tokens() const noexcept { return token_names_.size(); }

  const std::string& state_name(StateId s) const { return state_names_.at(s.value); }
  const std::string& token_name(TokenId t) const { return token_names_.at(t.value); }
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const std::vector<std::string>& token_names() const noexcept { return token_names_; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<TokenId> find_token(std::string_view name) const;
  /// Throws UnknownState / UnknownToken.
  StateId state(std::string_view name) const;
  TokenId token(std::string_view name) const;
  /// Resolves a message given by token names. Throws UnknownToken.
  Message message(const std::vector<std::string>& names) const;

  std::vector<StateId> states() const;
  std::vector<TokenId> tokens() const;

  /// S tau.
  StateId step(StateId s, TokenId t) const {
    return StateId{images_[t.value][s.value]};
  }
  bool is_effective(StateId s, TokenId t) const { return step(s, t) != s; }

  /// The unique reverse of t, when one exists.
  std::optional<TokenId> reverse(TokenId t) const { return reverses_.at(t.value); }

  /// Index of the reverse-pair class {t, reverse(t)}; a token without a reverse
  /// forms a class on its own, as does a self-reverse token.
  std::size_t pair_class(TokenId t) const { return pair_class_.at(t.value); }
  std::size_t num_pair_classes() const noexcept { return num_pair_classes_; }
  /// The member of t's class that comes first in declaration order.
  TokenId class_representative(std::size_t cls) const { return class_rep_.at(cls); }

  bool operator==(const TokenSystem& other) const;

 private:
  TokenSystem() = default;
  void infer_reverses();

  std::vector<std::string> state_names_;
  std::vector<std::string> token_names_;
  std::map<std::string, std::size_t, std::less<>> state_index_;
  std::map<std::string, std::size_t, std::less<>> token_index_;
  std::vector<std::vector<std::size_t>> images_;  // [token][state]
  std::vector<std::optional<TokenId>> reverses_;
  std::vector<std::size_t> pair_class_;
  std::vector<TokenId> class_rep_;
  std::size_t num_pair_classes_ = 0;
};

// Message semantics. All of these throw UnknownToken when a token id is out
// of range for the system.

StateId apply(const TokenSystem& sys, StateId s, const Message& m);
std::vector<StateId> produced_sequence(const TokenSystem& sys, StateId s, const Message& m);

/// The reverse of t, searched directly from the defining equivalence
/// (S t = V iff V r = S for all distinct S, V).
std::optional<TokenId> reverse_of(const TokenSystem& sys, TokenId t);

/// V is adjacent to S: S != V and S t = V for some token t.
bool adjacent_to(const TokenSystem& sys, StateId s, StateId v);
/// Mutual adjacency.
bool is_adjacent(const TokenSystem& sys, StateId s, StateId v);

bool is_ineffective(const TokenSystem& sys, StateId s, const Message& m);
bool is_stepwise_effective(const TokenSystem& sys, StateId s, const Message& m);
bool is_closed(const TokenSystem& sys, StateId s, const Message& m);
/// Occurrences pair off into mutual reverses: balanced counts in every
/// reverse pair, even counts of self-reverse tokens, no reverse-less token.
bool is_vacuous(const TokenSystem& sys, const Message& m);
/// Stepwise effective, no token twice, never a token together with its reverse.
bool is_concise(const TokenSystem& sys, StateId s, const Message& m);

/// Reversed order, each token replaced by its reverse; absent when a reverse
/// is missing.
std::optional<Message> reverse_message(const TokenSystem& sys, const Message& m);

/// Candidate isomorphism (alpha, beta) from system A to system B, stored as
/// index maps: states[s of A] is a state of B, tokens[t of A] a token of B.
struct Isomorphism {
  std::vector<StateId> states;
  std::vector<TokenId> tokens;

  /// Builds from name maps. Throws UnknownState / UnknownToken / NotBijective
  /// when a name of A is missing from the map.
  static Isomorphism from_names(const TokenSystem& a, const TokenSystem& b,
                                const std::map<std::string, std::string>& alpha,
                                const std::map<std::string, std::string>& beta);
};

/// Checks S t = T iff alpha(S) beta(t) = alpha(T) for all states and tokens.
/// Throws NotBijective when alpha or beta is not a bijection.
bool check_isomorphism(const TokenSystem& a, const TokenSystem& b, const Isomorphism& iso);

std::string format_message(const TokenSystem& sys, const Message& m);

}  // namespace cubical
