#pragma once

// Set families built from relations and graphs (partial orders, comparability
// graphs, ac-orders, lattice windows), and the down/upgradability and
// well-gradedness predicates on families.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/gsystem.hpp"

namespace cubical {

/// A binary relation on {0..n-1}, n <= 8.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n, std::uint64_t bits = 0);
  static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(std::size_t x, std::size_t y) const { return (bits_ >> (x * n_ + y)) & 1u; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Element names a, b, c, ...
std::string element_name(std::size_t i);

bool is_downgradable(const SetFamily& f, Subset s);
bool is_upgradable(const SetFamily& f, Subset s);
/// Every member that has a proper subset in the family is downgradable.
bool is_downgradable_family(const SetFamily& f);
/// Every member that has a proper superset in the family is upgradable.
bool is_upgradable_family(const SetFamily& f);
bool is_well_graded(const SetFamily& f);
/// The induced subgraph of the cube on the family is connected.
bool is_connected_family(const SetFamily& f);

/// Two members at distance 2 with no member at distance 1 from both.
std::optional<std::pair<std::size_t, std::size_t>> wellgradedness_gap_witness(const SetFamily& f);

/// Enumeration budget: n <= 4 by default, n = 5 only with allow_large.
/// Anything else throws BudgetExceeded.
struct EnumerationBudget {
  bool allow_large = false;
};

/// All strict (irreflexive, transitive) partial orders, sorted by bit pattern.
std::vector<Relation> enumerate_partial_orders(std::size_t n, EnumerationBudget budget = {});

bool is_ac_order(const Relation& r);
std::vector<Relation> enumerate_ac_orders(std::size_t n, EnumerationBudget budget = {});

/// Ground of ordered pairs (x, y), x != y, named "ab"; relations as members.
SetFamily relation_family(std::size_t n, const std::vector<Relation>& relations);
SetFamily partial_order_family(std::size_t n, EnumerationBudget budget = {});
SetFamily ac_order_family(std::size_t n, EnumerationBudget budget = {});

/// Edge sets of comparability graphs on n vertices over the ground of
/// unordered pairs ("ab"), members ordered by (size, bits).
SetFamily comparability_family(std::size_t n, EnumerationBudget budget = {});

/// G-system of the induced cube subgraph. Throws Disconnected.
GSystem induced_gsystem(const SetFamily& f);

/// Unary encoding of a grid point: {(i, l) : 1 <= l <= point[i]}, element
/// (i, l) at index i * extent + (l - 1).
Subset lattice_encoding(const std::vector<std::size_t>& point, std::size_t extent);

/// G-system of the grid {0..extent}^dims under the unary encoding.
GSystem lattice_window(std::size_t dims, std::size_t extent);

}  // namespace cubical
