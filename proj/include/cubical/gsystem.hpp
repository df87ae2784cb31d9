#pragma once

// Families of finite sets, subgraphs of the cube over a ground set, and the
// G-systems they define (add/remove tokens per ground element).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubical/core.hpp"

namespace cubical {

/// A subset of a ground set of at most 64 named elements, by element index.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<std::size_t> elements) {
    Subset s;
    for (std::size_t e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t e) const noexcept { return (bits_ >> e) & 1u; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  constexpr Subset with(std::size_t e) const { return Subset(bits_ | (std::uint64_t{1} << e)); }
  constexpr Subset without(std::size_t e) const { return Subset(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr Subset toggled(std::size_t e) const { return Subset(bits_ ^ (std::uint64_t{1} << e)); }

  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<std::size_t> elements() const;

 private:
  std::uint64_t bits_ = 0;
};

constexpr std::size_t distance(Subset a, Subset b) { return (a ^ b).size(); }

inline constexpr std::size_t kMaxGround = 64;

/// A family F of distinct subsets of a named ground set X.
struct SetFamily {
  std::vector<std::string> ground;
  std::vector<Subset> members;

  /// Throws DuplicateName (ground or members), InvalidArgument (ground too
  /// large, member outside the ground, fewer than two members).
  void validate() const;
  std::optional<std::size_t> find(Subset s) const;
  Subset all_union() const;
  Subset all_intersection() const;
  /// "{x,y}" in ground order; "{}" for the empty set.
  std::string name_of(Subset s) const;
  std::optional<std::size_t> element(std::string_view name) const;
};

/// A subgraph of the cube H(X) on the family's members.
struct CubeGraph {
  SetFamily family;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // member indices, first < second

  /// All cube edges between members.
  static CubeGraph induced(SetFamily family);

  /// Throws NotCubeEdge, Disconnected and the SetFamily errors.
  void validate() const;
  bool is_connected() const;
  bool has_edge(std::size_t a, std::size_t b) const;
};

/// Token system of a connected cube subgraph: for each x in (union \ intersection),
/// "g:x" adds x across a graph edge and "g~:x" removes it.
class GSystem {
 public:
  /// Throws Disconnected, NotCubeEdge, DegenerateGround; InternalInconsistency
  /// if some add/remove token turns out to be the identity.
  static GSystem build(CubeGraph graph);

  const CubeGraph& graph() const noexcept { return graph_; }
  const TokenSystem& system() const noexcept { return system_; }
  const SetFamily& family() const noexcept { return graph_.family; }

  StateId state_of(std::size_t member) const { return StateId{member}; }
  Subset set_of(StateId s) const { return graph_.family.members.at(s.value); }
  std::optional<StateId> state_of(Subset s) const;

  /// Ground elements that carry tokens, in ground order.
  const std::vector<std::size_t>& active_elements() const noexcept { return active_; }
  TokenId add_token(std::size_t element) const;
  TokenId remove_token(std::size_t element) const;
  /// (element, adds) for a token of this system.
  std::pair<std::size_t, bool> token_action(TokenId t) const;

 private:
  GSystem(CubeGraph graph, TokenSystem system, std::vector<std::size_t> active)
      : graph_(std::move(graph)), system_(std::move(system)), active_(std::move(active)) {}

  CubeGraph graph_;
  TokenSystem system_;
  std::vector<std::size_t> active_;
};

std::string add_token_name(const std::string& element);
std::string remove_token_name(const std::string& element);

/// Message whose produced sequence is the walk. Throws NotAWalk.
Message walk_to_message(const GSystem& g, const std::vector<Subset>& walk);
/// Walk produced by a stepwise-effective message. Throws NotStepwiseEffective.
std::vector<Subset> message_to_walk(const GSystem& g, Subset start, const Message& m);

/// Random connected cube subgraph: members grown from a random set by adding
/// random cube neighbours (the growth edges form a spanning tree), then every
/// other cube edge between members kept with probability edge_p.
CubeGraph random_cube_graph(std::size_t ground_size, std::size_t max_members, double edge_p,
                            std::mt19937_64& rng);

}  // namespace cubical
