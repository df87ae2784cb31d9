#include "cubical/families.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace cubical {

Relation::Relation(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n > 8) throw Error(ErrorCode::InvalidArgument, "relations are limited to 8 elements");
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorCode::InvalidArgument, "pair outside the ground set");
    r.bits_ |= std::uint64_t{1} << (x * n + y);
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

std::string element_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

namespace {

std::unordered_set<std::uint64_t> member_bits(const SetFamily& f) {
  std::unordered_set<std::uint64_t> out;
  for (Subset m : f.members) out.insert(m.bits());
  return out;
}

void check_budget(std::size_t n, EnumerationBudget budget) {
  if (n == 0 || n > 5 || (n == 5 && !budget.allow_large))
    throw Error(ErrorCode::BudgetExceeded,
                "enumeration supports n <= 4 (n = 5 with the large budget), got n = " + std::to_string(n));
}

/// Every asymmetric relation, by choosing for each unordered pair {x, y}
/// nothing, (x, y) or (y, x).
template <class Visit>
void for_each_orientation(std::size_t n, Visit visit) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<int> choice(pairs.size(), 0);
  while (true) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [x, y] = pairs[i];
      if (choice[i] == 1) bits |= std::uint64_t{1} << (x * n + y);
      if (choice[i] == 2) bits |= std::uint64_t{1} << (y * n + x);
    }
    visit(Relation(n, bits));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == 3) choice[i++] = 0;
    if (i == choice.size()) break;
  }
}

bool is_transitive(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (r.contains(y, z) && !r.contains(x, z)) return false;
    }
  return true;
}

}  // namespace

bool is_downgradable(const SetFamily& f, Subset s) {
  const auto bits = member_bits(f);
  for (std::size_t x : s.elements())
    if (bits.count(s.without(x).bits())) return true;
  return false;
}

bool is_upgradable(const SetFamily& f, Subset s) {
  const auto bits = member_bits(f);
  for (std::size_t x = 0; x < f.ground.size(); ++x)
    if (!s.contains(x) && bits.count(s.with(x).bits())) return true;
  return false;
}

bool is_downgradable_family(const SetFamily& f) {
  const auto bits = member_bits(f);
  for (Subset s : f.members) {
    const bool minimal = std::none_of(f.members.begin(), f.members.end(),
                                      [&](Subset t) { return t != s && t.is_subset_of(s); });
    if (minimal) continue;
    bool down = false;
    for (std::size_t x : s.elements()) down = down || bits.count(s.without(x).bits());
    if (!down) return false;
  }
  return true;
}

bool is_upgradable_family(const SetFamily& f) {
  const auto bits = member_bits(f);
  for (Subset s : f.members) {
    const bool maximal = std::none_of(f.members.begin(), f.members.end(),
                                      [&](Subset t) { return t != s && s.is_subset_of(t); });
    if (maximal) continue;
    bool up = false;
    for (std::size_t x = 0; x < f.ground.size(); ++x) up = up || (!s.contains(x) && bits.count(s.with(x).bits()));
    if (!up) return false;
  }
  return true;
}

bool is_well_graded(const SetFamily& f) {
  const auto bits = member_bits(f);
  for (Subset s : f.members)
    for (Subset t : f.members) {
      if (s == t) continue;
      // Some one-step move from s toward t stays in the family.
      bool step = false;
      for (std::size_t x : (s ^ t).elements()) step = step || bits.count(s.toggled(x).bits());
      if (!step) return false;
    }
  return true;
}

bool is_connected_family(const SetFamily& f) {
  if (f.members.empty()) return false;
  const auto bits = member_bits(f);
  std::unordered_set<std::uint64_t> seen{f.members.front().bits()};
  std::deque<Subset> queue{f.members.front()};
  while (!queue.empty()) {
    Subset u = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < f.ground.size(); ++x) {
      Subset v = u.toggled(x);
      if (bits.count(v.bits()) && seen.insert(v.bits()).second) queue.push_back(v);
    }
  }
  return seen.size() == bits.size();
}

std::optional<std::pair<std::size_t, std::size_t>> wellgradedness_gap_witness(const SetFamily& f) {
  const auto bits = member_bits(f);
  for (std::size_t a = 0; a < f.members.size(); ++a)
    for (std::size_t b = a + 1; b < f.members.size(); ++b) {
      const Subset s = f.members[a], t = f.members[b];
      if (distance(s, t) != 2) continue;
      const auto diff = (s ^ t).elements();
      if (!bits.count(s.toggled(diff[0]).bits()) && !bits.count(s.toggled(diff[1]).bits()))
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

std::vector<Relation> enumerate_partial_orders(std::size_t n, EnumerationBudget budget) {
  check_budget(n, budget);
  std::vector<Relation> out;
  for_each_orientation(n, [&](const Relation& r) {
    if (is_transitive(r)) out.push_back(r);
  });
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) { return a.bits() < b.bits(); });
  return out;
}

bool is_ac_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r.contains(x, y) && r.contains(y, x)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!r.contains(y, z)) continue;
        for (std::size_t w = 0; w < n; ++w)
          if (!r.contains(x, w) && !r.contains(w, z)) return false;
      }
    }
  return true;
}

std::vector<Relation> enumerate_ac_orders(std::size_t n, EnumerationBudget budget) {
  check_budget(n, budget);
  std::vector<Relation> out;
  for_each_orientation(n, [&](const Relation& r) {
    if (is_ac_order(r)) out.push_back(r);
  });
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) { return a.bits() < b.bits(); });
  return out;
}

SetFamily relation_family(std::size_t n, const std::vector<Relation>& relations) {
  SetFamily f;
  std::vector<std::size_t> index(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      index[x * n + y] = f.ground.size();
      f.ground.push_back(element_name(x) + element_name(y));
    }
  for (const Relation& r : relations) {
    Subset s;
    for (auto [x, y] : r.pairs()) s = s.with(index[x * n + y]);
    f.members.push_back(s);
  }
  return f;
}

SetFamily partial_order_family(std::size_t n, EnumerationBudget budget) {
  return relation_family(n, enumerate_partial_orders(n, budget));
}

SetFamily ac_order_family(std::size_t n, EnumerationBudget budget) {
  return relation_family(n, enumerate_ac_orders(n, budget));
}

SetFamily comparability_family(std::size_t n, EnumerationBudget budget) {
  SetFamily f;
  std::vector<std::size_t> index(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      index[x * n + y] = index[y * n + x] = f.ground.size();
      f.ground.push_back(element_name(x) + element_name(y));
    }
  std::set<std::pair<std::size_t, std::uint64_t>> graphs;
  for (const Relation& r : enumerate_partial_orders(n, budget)) {
    Subset edges;
    for (auto [x, y] : r.pairs()) edges = edges.with(index[x * n + y]);
    graphs.emplace(edges.size(), edges.bits());
  }
  for (auto [size, bits] : graphs) f.members.emplace_back(bits);
  return f;
}

GSystem induced_gsystem(const SetFamily& f) { return GSystem::build(CubeGraph::induced(f)); }

Subset lattice_encoding(const std::vector<std::size_t>& point, std::size_t extent) {
  Subset s;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] > extent) throw Error(ErrorCode::InvalidArgument, "grid point outside the window");
    for (std::size_t l = 1; l <= point[i]; ++l) s = s.with(i * extent + (l - 1));
  }
  return s;
}

GSystem lattice_window(std::size_t dims, std::size_t extent) {
  if (dims == 0 || extent == 0) throw Error(ErrorCode::InvalidArgument, "lattice window needs dims, extent >= 1");
  if (dims * extent > kMaxGround) throw Error(ErrorCode::InvalidArgument, "lattice window too large");
  CubeGraph g;
  for (std::size_t i = 0; i < dims; ++i)
    for (std::size_t l = 1; l <= extent; ++l) g.family.ground.push_back(std::to_string(i) + "." + std::to_string(l));

  // Points in lexicographic order; point index = mixed-radix number.
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::size_t> p(dims, 0);
  while (true) {
    points.push_back(p);
    std::size_t i = dims;
    while (i > 0 && p[i - 1] == extent) p[--i] = 0;
    if (i == 0) break;
    ++p[i - 1];
  }
  for (const auto& q : points) g.family.members.push_back(lattice_encoding(q, extent));
  std::size_t stride = 1;
  std::vector<std::size_t> strides(dims);
  for (std::size_t i = dims; i-- > 0;) {
    strides[i] = stride;
    stride *= extent + 1;
  }
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t i = 0; i < dims; ++i)
      if (points[a][i] < extent) g.edges.emplace_back(a, a + strides[i]);
  return GSystem::build(std::move(g));
}

}  // namespace cubical
