#pragma once

// Embedding a cubical system into a cube: each state becomes the set of
// reverse-pair labels crossed an odd number of times on the way from a base
// state, and the system is isomorphic to the G-system of the image.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/core.hpp"
#include "cubical/gsystem.hpp"

namespace cubical {

/// The graph of a system: states, mutually adjacent pairs, and the
/// reverse-pair class of the token moving along each edge.
struct SystemGraph {
  struct Edge {
    StateId a;
    StateId b;
    std::size_t label;  // reverse-pair class
  };
  std::vector<Edge> edges;  // a < b, sorted
  std::vector<std::string> label_names;  // by class: "j:<representative>"
};

/// Throws NotCubical.
SystemGraph system_graph(const TokenSystem& sys);

/// "j:" + the lexicographically smaller member of the class.
std::string label_name(const TokenSystem& sys, std::size_t pair_class);

struct Embedding {
  StateId base;
  /// Ground of the image cube: one label per reverse-pair class, in class order.
  std::vector<std::string> labels;
  /// alpha[s]: set of labels (indices into `labels`) for state s.
  std::vector<Subset> alpha;
  /// beta[t] = (label, adds): t maps to the add token of that label when
  /// `adds`, otherwise to its remove token.
  std::vector<std::pair<std::size_t, bool>> beta;
  /// G-system on the image family with the image edges.
  GSystem gsystem;

  /// (alpha, beta) as an Isomorphism into gsystem.system().
  Isomorphism isomorphism() const;
};

/// Throws NotCubical; InternalInconsistency on an alpha collision or a beta
/// conflict. The base defaults to the lexicographically first state name.
Embedding embed(const TokenSystem& sys, std::optional<StateId> base = std::nullopt);

/// Replays every embedding invariant from scratch, rebuilding the image
/// G-system from alpha rather than trusting the stored one.
bool verify_embedding(const TokenSystem& sys, const Embedding& e);

struct CubicalGraphResult {
  bool cubical = false;
  std::string reason;  // why not, when not
};

/// Whether the system's graph embeds into a cube via embed().
CubicalGraphResult is_cubical_system_graph(const TokenSystem& sys);

/// Undirected DOT rendering of the system graph, edges labeled by class.
std::string to_dot(const TokenSystem& sys, const SystemGraph& g, const std::string& name = "cubical");

}  // namespace cubical
