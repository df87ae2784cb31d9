#pragma once

// Deciding the cubical axioms C1-C4 and the medium axioms Ma/Mb on finite
// token systems, with replayable counterexamples.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/core.hpp"

namespace cubical {

enum class Axiom { C1, C2, C3, C4, Ma, Mb };

std::string_view to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);

/// How a verdict was reached. Bounded verdicts only cover stepwise-effective
/// messages of length <= bound.
struct Method {
  bool exact = true;
  std::size_t bound = 0;

  static Method exact_method() { return {}; }
  static Method bounded(std::size_t l) { return {false, l}; }
  bool operator==(const Method&) const = default;
};

/// A counterexample. Which fields are set depends on the axiom:
///  C1: token.            C2, Ma: from/to (no suitable message from -> to).
///  C3, Mb: from + message (closed xor vacuous).
///  C4: from + message (two occurrences of a token without its reverse between).
struct Witness {
  std::optional<TokenId> token;
  std::optional<StateId> from;
  std::optional<StateId> to;
  std::optional<Message> message;
};

struct AxiomVerdict {
  Axiom axiom = Axiom::C1;
  bool holds = true;
  std::optional<Witness> witness;
  Method method;
};

enum class Kind { Medium, CubicalNotMedium, NotCubical };

std::string_view to_string(Kind k);

struct Classification {
  Kind kind = Kind::NotCubical;
  std::array<AxiomVerdict, 6> verdicts;  // in Axiom order

  const AxiomVerdict& verdict(Axiom a) const { return verdicts[static_cast<std::size_t>(a)]; }
};

struct CheckOptions {
  /// Message length for the bounded fallback; 0 means 2 * |states|.
  std::size_t bound = 0;
  /// Cap on search nodes for enumeration-based checks.
  std::size_t node_budget = 50'000'000;
};

AxiomVerdict check_c1(const TokenSystem& sys);
AxiomVerdict check_c2(const TokenSystem& sys);
AxiomVerdict check_c3(const TokenSystem& sys, const CheckOptions& opts = {});
AxiomVerdict check_c4(const TokenSystem& sys);
AxiomVerdict check_ma(const TokenSystem& sys, const CheckOptions& opts = {});
AxiomVerdict check_mb(const TokenSystem& sys, const CheckOptions& opts = {});
AxiomVerdict check_axiom(const TokenSystem& sys, Axiom a, const CheckOptions& opts = {});

Classification classify(const TokenSystem& sys, const CheckOptions& opts = {});

/// C1-C4 all hold (exactly).
bool is_cubical(const TokenSystem& sys);
/// Throws NotCubical naming the first failing axiom.
void require_cubical(const TokenSystem& sys);

/// True when the verdict is a failure whose witness is a genuine violation
/// under the core predicates.
bool witness_replays(const TokenSystem& sys, const AxiomVerdict& verdict);

// Bounded enumeration of stepwise-effective messages.

struct MessageFilter {
  bool closed_only = false;
  bool concise_only = false;
  std::optional<StateId> target;

  bool accepts(const TokenSystem& sys, StateId start, const Message& m, StateId end) const;
};

/// Depth-first visit of every stepwise-effective message of length <= max_len
/// from start (including the empty one), in token order. The visitor returns
/// false to stop. Throws BudgetExceeded past node_budget nodes.
void for_each_message(const TokenSystem& sys, StateId start, std::size_t max_len,
                      const std::function<bool(const Message&, StateId)>& visit,
                      std::size_t node_budget = 50'000'000);

/// Filtered messages in shortlex order.
std::vector<Message> enumerate_messages(const TokenSystem& sys, StateId start,
                                        std::size_t max_len, const MessageFilter& filter = {},
                                        std::size_t node_budget = 50'000'000);

/// Enumeration-only verdicts over messages of length <= max_len from every
/// state; independent of the exact cycle-space and reachability checks.
AxiomVerdict check_c3_bounded(const TokenSystem& sys, std::size_t max_len,
                              std::size_t node_budget = 50'000'000);
AxiomVerdict check_c4_bounded(const TokenSystem& sys, std::size_t max_len,
                              std::size_t node_budget = 50'000'000);
AxiomVerdict check_mb_bounded(const TokenSystem& sys, std::size_t max_len,
                              std::size_t node_budget = 50'000'000);

std::string describe(const TokenSystem& sys, const AxiomVerdict& v);

}  // namespace cubical
