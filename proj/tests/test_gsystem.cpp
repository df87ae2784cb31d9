#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubical/axioms.hpp"
#include "cubical/fixtures.hpp"
#include "cubical/gsystem.hpp"
#include "oracles.hpp"

using namespace cubical;

namespace {

CubeGraph example_4_1() {
  CubeGraph g;
  g.family = SetFamily{{"x", "y"}, {Subset(), Subset::of({0}), Subset::of({0, 1}), Subset::of({1})}};
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  return g;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("Subset basics") {
  const Subset a = Subset::of({0, 2});
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(a.elements() == std::vector<std::size_t>{0, 2});
  CHECK(distance(a, Subset::of({2, 3})) == 2);
  CHECK(Subset::of({2}).is_subset_of(a));
}

TEST_CASE("Example 4.1 G-system is isomorphic to CUB4") {
  const GSystem g = GSystem::build(example_4_1());
  const TokenSystem& sys = g.system();
  CHECK(sys.token_names() == std::vector<std::string>{"g:x", "g~:x", "g:y", "g~:y"});
  const TokenSystem cub4 = fixtures::cub4();
  const std::map<std::string, std::string> alpha{{"S", "{}"}, {"T", "{x}"}, {"Q", "{x,y}"}, {"P", "{y}"}};
  const std::map<std::string, std::string> beta{{"tau", "g:x"}, {"tau~", "g~:x"}, {"mu", "g:y"}, {"mu~", "g~:y"}};
  CHECK(check_isomorphism(cub4, sys, Isomorphism::from_names(cub4, sys, alpha, beta)));
  CHECK(sys.step(*g.state_of(Subset()), sys.token("g:y")) == *g.state_of(Subset()));
}

TEST_CASE("small G-systems") {
  CubeGraph edge;
  edge.family = SetFamily{{"x"}, {Subset(), Subset::of({0})}};
  edge.edges = {{0, 1}};
  const GSystem e = GSystem::build(edge);
  CHECK(e.system().num_states() == 2);
  CHECK(e.system().token_names() == std::vector<std::string>{"g:x", "g~:x"});
  CHECK(classify(e.system()).kind == Kind::Medium);
  CHECK(classify(fixtures::square().system()).kind == Kind::Medium);
}

TEST_CASE("build errors") {
  CubeGraph g = example_4_1();
  g.edges = {{0, 1}, {2, 3}};
  CHECK(code_of([&] { GSystem::build(g); }) == ErrorCode::Disconnected);
  g.edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  CHECK(code_of([&] { GSystem::build(g); }) == ErrorCode::NotCubeEdge);
  CubeGraph same;
  same.family = SetFamily{{"x", "y"}, {Subset::of({0}), Subset::of({0, 1})}};
  same.family.members = {Subset::of({0}), Subset::of({0})};
  CHECK(code_of([&] { GSystem::build(CubeGraph::induced(same.family)); }) == ErrorCode::DuplicateName);
}

TEST_CASE("walks and messages") {
  const GSystem g = GSystem::build(example_4_1());
  const TokenSystem& sys = g.system();
  const Subset empty, x = Subset::of({0}), xy = Subset::of({0, 1});
  CHECK(walk_to_message(g, {empty, x, xy}) == sys.message({"g:x", "g:y"}));
  CHECK(walk_to_message(g, {empty}) == Message{});
  CHECK(walk_to_message(g, {empty, x, empty}) == sys.message({"g:x", "g~:x"}));
  CHECK(message_to_walk(g, empty, sys.message({"g:x", "g:y"})) == std::vector<Subset>{empty, x, xy});
  CHECK(message_to_walk(g, empty, Message{}) == std::vector<Subset>{empty});
  CHECK(message_to_walk(g, empty, sys.message({"g:x", "g~:x"})) == std::vector<Subset>{empty, x, empty});
  CHECK(code_of([&] { walk_to_message(g, {empty, xy}); }) == ErrorCode::NotAWalk);
  CHECK(code_of([&] { walk_to_message(g, {empty, Subset::of({1})}); }) == ErrorCode::NotAWalk);
  CHECK(code_of([&] { message_to_walk(g, empty, sys.message({"g:y"})); }) == ErrorCode::NotStepwiseEffective);
}

TEST_CASE("random G-systems are cubical with mutual-reverse tokens") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const GSystem g = GSystem::build(random_cube_graph(6, 40, 0.5, rng));
    const TokenSystem& sys = g.system();
    CHECK(g.family().members.size() <= 40);
    CHECK(is_cubical(sys));
    for (std::size_t x : g.active_elements()) {
      CHECK(reverse_of(sys, g.add_token(x)) == g.remove_token(x));
      CHECK(oracle::reverse(sys, g.remove_token(x)) == g.add_token(x));
    }
    // Walk <-> message round trips.
    const Subset start = g.set_of(StateId{0});
    oracle::walk_messages(sys, StateId{0}, 3, [&](const std::vector<TokenId>& raw, StateId) {
      const Message m(raw);
      const auto walk = message_to_walk(g, start, m);
      CHECK(walk_to_message(g, walk) == m);
      for (std::size_t k = 1; k < walk.size(); ++k)
        CHECK(g.graph().has_edge(*g.family().find(walk[k - 1]), *g.family().find(walk[k])));
    });
  }
}

TEST_CASE("random_cube_graph is deterministic per seed") {
  std::mt19937_64 a(5), b(5);
  const CubeGraph x = random_cube_graph(5, 20, 0.5, a);
  const CubeGraph y = random_cube_graph(5, 20, 0.5, b);
  CHECK(x.family.members == y.family.members);
  CHECK(x.edges == y.edges);
  CHECK(x.is_connected());
}
