#pragma once

// Token occurrence counts, message contents C(m) and state contents.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubical/core.hpp"

namespace cubical {

using ContentSet = std::set<TokenId>;

std::size_t occurrence_count(const Message& m, TokenId t);

/// Tokens occurring in m strictly more often than their reverse. Throws
/// NoReverse when a token of m has no reverse.
ContentSet message_content(const TokenSystem& sys, const Message& m);

/// Contents of every state of a cubical system, computed once.
///
/// The content of S is the union of C(m_V) over source states V, where m_V is
/// the shortlex-least shortest stepwise-effective message from V to S. On a
/// cubical system every other producing message adds nothing: its content is
/// determined by its endpoints.
class StateContents {
 public:
  /// Throws NotCubical unless C1-C4 hold.
  explicit StateContents(const TokenSystem& sys);

  const ContentSet& of(StateId s) const { return contents_.at(s.value); }
  std::size_t size() const noexcept { return contents_.size(); }

 private:
  std::vector<ContentSet> contents_;
};

/// Throws NotCubical.
ContentSet state_content(const TokenSystem& sys, StateId s);

/// Brute-force union of C(m) over all stepwise-effective messages of length
/// <= max_len producing s from any state. Works on any system whose tokens
/// all have reverses (NoReverse otherwise).
ContentSet state_content_oracle(const TokenSystem& sys, StateId s, std::size_t max_len);

/// (contents(V) \ contents(S), contents(S) \ contents(V)). Throws NotCubical.
std::pair<ContentSet, ContentSet> content_delta(const TokenSystem& sys, StateId s, StateId v);

/// States where t is effective.
std::vector<StateId> effective_domain(const TokenSystem& sys, TokenId t);

/// "{ a, b }" with tokens in declaration order.
std::string format_content(const TokenSystem& sys, const ContentSet& c);

}  // namespace cubical
