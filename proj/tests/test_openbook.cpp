#include "doctest.h"
#include "openkh/errors.hpp"
#include "openkh/openbook.hpp"

using namespace openkh;

TEST_CASE("twist words parse and print") {
  Surface s{2, 1};
  auto w = parse_twist_word("a1 a2 a3 a4 a3^-5 a4^2 a0", s);
  CHECK(w.n() == 12);
  CHECK(w.n_minus() == 5);
  CHECK(w.uses_alpha0());
  CHECK(w.letters.front() == TwistLetter{1, 1});
  CHECK(w.letters.back() == TwistLetter{0, 1});
  CHECK(w.to_string() == "a1 a2 a3 a4 a3^-5 a4^2 a0");
  CHECK(parse_twist_word(w.to_string(), s) == w);
  CHECK(parse_twist_word("", s).n() == 0);
  CHECK(parse_twist_word("a1^0", s).n() == 0);
}

TEST_CASE("bad twist tokens") {
  Surface s{1, 1};
  CHECK_THROWS_AS(parse_twist_word("a2 b1", s), MalformedToken);
  CHECK_THROWS_AS(parse_twist_word("a1^", s), MalformedToken);
  CHECK_THROWS_AS(parse_twist_word("a0", s), UnknownCurve);
  CHECK_THROWS_AS(parse_twist_word("a3", s), UnknownCurve);
  CHECK(parse_twist_word("a3", Surface{1, 2}).n() == 1);
  CHECK_THROWS_AS(parse_surface("1"), ParseError);
  CHECK(parse_surface("2,1") == Surface{2, 1});
}

TEST_CASE("braid words") {
  auto b = parse_braid_word("s1^-5 s2 s1^3 s2", 3);
  CHECK(b.n() == 10);
  CHECK(b.writhe() == 0);
  CHECK(b.n_minus() == 5);
  CHECK(b.components() == 1);
  CHECK(parse_braid_word("s1^-4 s2 s1^3 s2", 3).components() == 2);
  CHECK(parse_braid_word("", 3).components() == 3);
  CHECK_THROWS_AS(parse_braid_word("s3", 3), ParseError);
}

TEST_CASE("braids and open books") {
  auto b = parse_braid_word("s2 s1^-1", 3);
  auto w = braid_to_openbook(b);
  CHECK(w.surface == Surface{1, 1});
  CHECK(w.to_string() == "a2 a1^-1");
  CHECK(openbook_to_braid(w) == b);
  CHECK(braid_to_openbook(parse_braid_word("s1", 4)).surface == Surface{1, 2});
  CHECK_THROWS_AS(openbook_to_braid(parse_twist_word("a0 a1", Surface{2, 1})), NotBraidLike);
}

TEST_CASE("stabilization climbs the surface ladder") {
  auto w = parse_twist_word("a1 a2^-1", Surface{1, 1});
  auto p = positive_stabilize(w);
  CHECK(p.surface == Surface{1, 2});
  CHECK(p.letters.back() == TwistLetter{3, 1});
  auto pp = positive_stabilize(p);
  CHECK(pp.surface == Surface{2, 1});
  CHECK(pp.letters.back() == TwistLetter{4, 1});
  CHECK(negative_stabilize(w).letters.back() == TwistLetter{3, -1});
  CHECK(concat(w, w).n() == 4);
}
