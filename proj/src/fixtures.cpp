#include "cubical/fixtures.hpp"

namespace cubical::fixtures {

TokenSystem cub4() {
  return TokenSystem::build({"S", "T", "P", "Q"}, {{"tau", {{"S", "T"}, {"P", "Q"}}},
                                                   {"tau~", {{"T", "S"}, {"Q", "P"}}},
                                                   {"mu", {{"T", "Q"}}},
                                                   {"mu~", {{"Q", "T"}}}});
}

std::vector<double> cub4_theta() { return {0.1, 0.2, 0.3, 0.4}; }

TokenSystem figure_2_1() { return TokenSystem::build({"S", "T"}, {{"tau", {{"S", "T"}}}}); }

TokenSystem swap() { return TokenSystem::build({"A", "B"}, {{"sigma", {{"A", "B"}, {"B", "A"}}}}); }

TokenSystem single_edge() {
  return TokenSystem::build({"A", "B"}, {{"tau", {{"A", "B"}}}, {"tau~", {{"B", "A"}}}});
}

TokenSystem triangle() {
  return TokenSystem::build({"A", "B", "C"}, {{"a", {{"A", "B"}}},
                                              {"a~", {{"B", "A"}}},
                                              {"b", {{"B", "C"}}},
                                              {"b~", {{"C", "B"}}},
                                              {"c", {{"C", "A"}}},
                                              {"c~", {{"A", "C"}}}});
}

TokenSystem double_cub4() {
  return TokenSystem::build({"S", "T", "P", "Q", "S2", "T2", "P2", "Q2"},
                            {{"tau", {{"S", "T"}, {"P", "Q"}, {"S2", "T2"}, {"P2", "Q2"}}},
                             {"tau~", {{"T", "S"}, {"Q", "P"}, {"T2", "S2"}, {"Q2", "P2"}}},
                             {"mu", {{"T", "Q"}, {"T2", "Q2"}}},
                             {"mu~", {{"Q", "T"}, {"Q2", "T2"}}}});
}

GSystem square() {
  SetFamily f{{"x", "y"}, {Subset(), Subset::of({0}), Subset::of({0, 1}), Subset::of({1})}};
  return GSystem::build(CubeGraph::induced(std::move(f)));
}

GSystem cube3() {
  SetFamily f{{"x", "y", "z"}, {}};
  for (std::uint64_t b = 0; b < 8; ++b) f.members.emplace_back(b);
  return GSystem::build(CubeGraph::induced(std::move(f)));
}

TokenSystem c2_witness() { return double_cub4(); }

TokenSystem c3_witness() {
  // Edge i joins i and i+1 (mod 8); crossing it forwards uses labels[i].
  const char* labels[] = {"tau", "sigma", "tau~", "sigma~", "tau", "sigma", "tau~", "sigma~"};
  auto reverse = [](const std::string& t) { return t.back() == '~' ? t.substr(0, t.size() - 1) : t + "~"; };
  std::vector<std::string> states;
  for (int i = 0; i < 8; ++i) states.push_back("s" + std::to_string(i));
  std::vector<std::pair<std::string, MoveTable>> tokens{{"tau", {}}, {"tau~", {}}, {"sigma", {}}, {"sigma~", {}}};
  auto moves = [&](const std::string& name) -> MoveTable& {
    for (auto& [n, m] : tokens)
      if (n == name) return m;
    throw Error(ErrorCode::InternalInconsistency, "unknown fixture token");
  };
  for (int i = 0; i < 8; ++i) {
    const std::string& a = states[i];
    const std::string& b = states[(i + 1) % 8];
    moves(labels[i]).emplace_back(a, b);
    moves(reverse(labels[i])).emplace_back(b, a);
  }
  return TokenSystem::build(std::move(states), std::move(tokens));
}

TokenSystem c4_witness() {
  return TokenSystem::build({"A", "B", "C"}, {{"tau", {{"A", "B"}, {"B", "C"}}}, {"tau~", {{"B", "A"}, {"C", "B"}}}});
}

TokenSystem c1_candidate() { return swap(); }

std::vector<Named> all() {
  return {{"cub4", cub4()},
          {"figure-2.1", figure_2_1()},
          {"swap", swap()},
          {"single-edge", single_edge()},
          {"triangle", triangle()},
          {"double-cub4", double_cub4()},
          {"square", square().system()},
          {"cube3", cube3().system()},
          {"c3-witness", c3_witness()},
          {"c4-witness", c4_witness()}};
}

}  // namespace cubical::fixtures
