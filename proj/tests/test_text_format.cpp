#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubical/families.hpp"
#include "cubical/fixtures.hpp"
#include "cubical/text_format.hpp"

using namespace cubical;

namespace {

const char* kCub4 =
    "states S T P Q\n"
    "token tau: S>T, P>Q\n"
    "token tau~: T>S, Q>P\n"
    "token mu: T>Q\n"
    "token mu~: Q>T\n"
    "theta tau=0.1 tau~=0.2 mu=0.3 mu~=0.4\n"
    "xi uniform\n";

ParseError parse_error(const std::string& text) {
  try {
    parse_tks(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError(ErrorCode::InternalInconsistency, 0, 0, "");
}

}  // namespace

TEST_CASE("CUB4 document") {
  const SystemDocument doc = parse_tks(kCub4);
  CHECK(doc.system == fixtures::cub4());
  CHECK(doc.theta == fixtures::cub4_theta());
  CHECK(doc.xi_uniform);
  CHECK(doc.xi == std::vector<double>(4, 0.25));
  CHECK(format_tks(doc) == kCub4);
}

TEST_CASE("comments, blank lines and move order") {
  const std::string text =
      "# a comment\n"
      "\n"
      "states A B C   # trailing\n"
      "token t: B>C, A>B\n"
      "token t~: C>B,B>A\n";
  const SystemDocument doc = parse_tks(text);
  CHECK_FALSE(doc.theta.has_value());
  CHECK_FALSE(doc.xi.has_value());
  const std::string canonical = format_tks(doc);
  CHECK(canonical == "states A B C\ntoken t: A>B, B>C\ntoken t~: B>A, C>B\n");
  // format . parse is idempotent and parse . format is the identity.
  CHECK(format_tks(parse_tks(canonical)) == canonical);
  CHECK(parse_tks(canonical).system == doc.system);
}

TEST_CASE("explicit xi") {
  const SystemDocument doc = parse_tks("states A B\ntoken t: A>B\ntoken t~: B>A\nxi A=0.25 B=0.75\n");
  CHECK(doc.xi == std::vector<double>{0.25, 0.75});
  CHECK_FALSE(doc.xi_uniform);
  CHECK(format_tks(doc) == "states A B\ntoken t: A>B\ntoken t~: B>A\nxi A=0.25 B=0.75\n");
}

TEST_CASE("errors carry positions") {
  auto e = parse_error("token t: A>B\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.line() == 1);
  e = parse_error("# only a comment\n");
  CHECK(e.code() == ErrorCode::SyntaxError);

  e = parse_error("states A B\ntoken t: A>C\n");
  CHECK(e.code() == ErrorCode::UnknownState);
  CHECK(e.line() == 2);
  CHECK(e.column() == 12);

  e = parse_error("states A B\ntoken t: A>B\ntoken t~: B>A\ntheta t=0.5 t~=0.4\n");
  CHECK(e.code() == ErrorCode::DistributionError);
  CHECK(e.line() == 4);

  e = parse_error("states A B\ntoken t: A>B\ntheta t=0.5 x=0.5\n");
  CHECK(e.code() == ErrorCode::DistributionError);
  CHECK(e.column() == 13);

  e = parse_error("states A B\ntoken t A>B\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.column() == 9);

  e = parse_error("states A B\nfrobnicate\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(std::string(e.what()).rfind("line 2, column 1:", 0) == 0);

  CHECK_THROWS_AS(parse_tks("states A B\ntoken t:\n"), Error);
}

TEST_CASE("G-system names are not identifiers") {
  SystemDocument doc{fixtures::square().system(), std::nullopt, std::nullopt, false};
  CHECK_THROWS_AS(format_tks(doc), Error);
  CHECK(is_identifier("tau~"));
  CHECK_FALSE(is_identifier("g:x"));
}

TEST_CASE("family documents") {
  const std::string text =
      "ground x y\n"
      "member\n"
      "member x\n"
      "member x y\n"
      "member y\n"
      "edge {}|{x}\n"
      "edge {x}|{x,y}\n"
      "edge {y}|{x,y}\n";
  const FamilyDocument doc = parse_fam(text);
  CHECK(doc.explicit_edges);
  CHECK(doc.graph.edges.size() == 3);
  CHECK(format_fam(doc) == text);

  const FamilyDocument induced = parse_fam("ground x y\nmember\nmember x\nmember x y\nmember y\n");
  CHECK_FALSE(induced.explicit_edges);
  CHECK(induced.graph.edges.size() == 4);
  CHECK(format_fam(induced) == "ground x y\nmember\nmember x\nmember x y\nmember y\n");

  CHECK_THROWS_AS(parse_fam("ground x\nmember\nmember z\n"), ParseError);
  CHECK_THROWS_AS(parse_fam("ground x y\nmember\nmember x y\n"), Error);
  CHECK_THROWS_AS(parse_fam("ground x y\nmember\nmember x\nmember x y\nedge {}|{x,y}\n"), Error);
}

TEST_CASE("generated families round trip") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    FamilyDocument doc{random_cube_graph(5, 20, 0.5, rng), true};
    const std::string text = format_fam(doc);
    CHECK(format_fam(parse_fam(text)) == text);
  }
  FamilyDocument lattice{lattice_window(2, 2).graph(), false};
  const std::string text = format_fam(lattice);
  CHECK(parse_fam(text).graph.family.members == lattice.graph.family.members);
}
