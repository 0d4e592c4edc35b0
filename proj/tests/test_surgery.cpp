#include "doctest.h"
#include "openkh/errors.hpp"
#include "openkh/surgery.hpp"

using namespace openkh;

TEST_CASE("config round trip") {
  for (Surface s : {Surface{1, 1}, Surface{1, 2}, Surface{2, 1}, Surface{3, 2}}) {
    auto sys = humphries(s);
    CHECK(parse_curve_system(serialize_curve_system(sys)) == sys);
  }
  CHECK(humphries({2, 1}).has_curve(0));
  CHECK_FALSE(humphries({1, 1}).has_curve(0));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_curve_system("[surface]\ngenus = x\n"), ConfigError);
  CHECK_THROWS_AS(parse_curve_system("[surface]\ngenus = 1\nboundary = 1\n[base]\n0 1\n0 0\n"), ConfigError);
  // below and above disagree
  const char* text =
      "[surface]\ngenus = 1\nboundary = 1\n[base]\n0 0\n0 0\n"
      "[curve a1]\nbase_linking = 1 0\nbelow:a2 = 1\n"
      "[curve a2]\nbase_linking = 0 1\nabove:a1 = 2\n";
  CHECK_THROWS_AS(parse_curve_system(text), ConfigError);
}

TEST_CASE("worked example resolution") {
  Surface s{1, 1};
  auto sys = humphries(s);
  auto w = parse_twist_word("a2 a1^-1", s);
  // vertex (0,0): a2 absent, a1^-1 present
  CHECK(resolution_components(w, 0) == std::vector<int>{1});
  auto f = build_resolution_matrix(w, sys, 0);
  CHECK(f.keys.size() == 3);
  CHECK(h1_f2(f).l == 1);
  CHECK(h1_f2(build_resolution_matrix(w, sys, 2)).l == 2);
  CHECK(h1_order(w, sys).value == 1);
}

TEST_CASE("identity monodromy") {
  for (Surface s : {Surface{1, 1}, Surface{2, 1}, Surface{2, 2}}) {
    auto w = parse_twist_word("", s);
    auto sys = humphries(s);
    CHECK(h1_f2(build_resolution_matrix(w, sys, 0)).l == s.chain_length());
    CHECK(h1_order(w, sys).infinite);
  }
}

TEST_CASE("torsion is reported, not hidden") {
  FramedLinkMatrix f;
  f.keys = {0};
  f.labels = {"b1"};
  f.matrix = IntMatrix(1, 1);
  f.matrix(0, 0) = 2;
  CHECK_THROWS_AS(h1_f2(f), TorsionEncountered);
  f.matrix(0, 0) = 3;  // odd torsion is invisible mod 2 but still caught
  CHECK_THROWS_AS(h1_f2(f), TorsionEncountered);
  f.matrix(0, 0) = 1;
  CHECK(h1_f2(f).l == 0);
}

TEST_CASE("|H1| anchors") {
  Surface s{2, 1};
  auto sys = humphries(s);
  CHECK(h1_order(parse_twist_word("a1 a2 a3 a4 a3^-5 a4^2 a0", s), sys).value == 9);
  CHECK(h1_order(parse_twist_word("a1 a2 a3 a4 a3^-5 a4 a0", s), sys).value == 1);
  // both height conventions give the same numbers
  auto low = humphries(s, false);
  CHECK(h1_order(parse_twist_word("a1 a2 a3 a4 a3^-5 a4^2 a0", s), low).value == 9);
}
