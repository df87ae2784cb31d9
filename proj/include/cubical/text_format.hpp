#pragma once

// Text formats: token-system documents (.tks) and cube-subgraph families (.fam).
//
// .tks, line oriented, '#' starts a comment:
//
//   states S T P Q
//   token tau: S>T, P>Q
//   token tau~: T>S, Q>P
//   theta tau=0.5 tau~=0.5
//   xi uniform
//
// .fam:
//
//   ground x y
//   member
//   member x
//   member x y
//   edge {}|{x}
//
// An empty member line is the empty set. Without edge lines the graph is the
// induced subgraph of the cube.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/core.hpp"
#include "cubical/gsystem.hpp"

namespace cubical {

/// An Error carrying the 1-based position of the offending input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SystemDocument {
  TokenSystem system;
  std::optional<std::vector<double>> theta;  // by token
  std::optional<std::vector<double>> xi;     // by state
  bool xi_uniform = false;                   // written back as "xi uniform"
};

/// Throws ParseError (SyntaxError, UnknownState, DistributionError) and the
/// TokenSystem::build errors for the assembled system.
SystemDocument parse_tks(std::string_view text);

/// Canonical form: moves in state order, numbers in shortest round-trip form.
/// Throws SyntaxError when a name is not a valid identifier.
std::string format_tks(const SystemDocument& doc);

bool is_identifier(std::string_view s);

struct FamilyDocument {
  CubeGraph graph;
  bool explicit_edges = false;
};

/// Validates the graph (CubeGraph::validate) after parsing.
FamilyDocument parse_fam(std::string_view text);
std::string format_fam(const FamilyDocument& doc);

}  // namespace cubical
