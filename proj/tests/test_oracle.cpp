#include "doctest.h"
#include "openkh/errors.hpp"
#include "openkh/oracle.hpp"

using namespace openkh;

namespace {
BraidWord br(const char* text, int strands) { return parse_braid_word(text, strands); }
}  // namespace

TEST_CASE("resolutions") {
  auto b = br("s1^3", 2);
  CHECK(resolve_state(b, 0).circles == 2);      // oriented resolution
  CHECK(resolve_state(b, 0b111).circles == 3);  // all horizontal
  CHECK(resolve_state(b, 0b001).circles == 1);
  CHECK(resolve_state(b, 0).circle_of_segment[0] == 0);
  CHECK(resolve_state(br("", 3), 0).circles == 3);
}

TEST_CASE("unknot and unlinks") {
  auto u = reduced_kh(br("s1", 2));
  CHECK(u.ranks == std::map<std::pair<int, int>, uint64_t>{{{0, 0}, 1}});
  CHECK(reduced_kh(br("s1^-1", 2)).ranks == u.ranks);
  CHECK(reduced_kh(br("s1^-1 s2", 3)).ranks == u.ranks);
  CHECK(reduced_kh(br("", 2)).polynomial() == "t^0 q^-1 + t^0 q^1");
}

TEST_CASE("trefoils") {
  auto right = reduced_kh(br("s1^3", 2));
  CHECK(right.polynomial() == "t^0 q^2 + t^2 q^6 + t^3 q^8");
  auto left = reduced_kh(br("s1^-3", 2));
  CHECK(left.polynomial() == "t^-3 q^-8 + t^-2 q^-6 + t^0 q^-2");
  CHECK(turner_s(br("s1^3", 2)).s == 2);
  CHECK(turner_s(br("s1^-3", 2)).s == -2);
  CHECK(turner_s(br("s1^3", 2)).rank == 1);
  CHECK(plamenevskaya(br("s1^3", 2)).survives);
  CHECK(plamenevskaya(br("s1^3", 2)).q == self_linking(br("s1^3", 2)) + 1);
  CHECK_FALSE(plamenevskaya(br("s1^-3", 2)).survives);
  CHECK(jones_determinant(right) == 3);
  CHECK(link_determinant(br("s1^3", 2)) == 3);
}

TEST_CASE("figure eight") {
  auto b = br("s1 s2^-1 s1 s2^-1", 3);
  auto kh = reduced_kh(b);
  CHECK(kh.total() == 5);
  CHECK(jones_determinant(kh) == 5);
  CHECK(link_determinant(b) == 5);
  CHECK(turner_s(b).s == 0);
}

TEST_CASE("mirror of 10_132") {
  auto b = br("s3^-1 s2^2 s3^-2 s2^-1 s3 s1 s2^-1 s1^-2", 4);
  auto kh = reduced_kh(b);
  CHECK(kh.polynomial() ==
        "t^-7 q^-14 + t^-6 q^-12 + t^-5 q^-10 + 2t^-4 q^-8 + t^-3 q^-8 + t^-3 q^-6 + t^-2 q^-6 + t^-2 q^-4 + "
        "t^-1 q^-2 + t^0 q^-2");
  CHECK(kh.at(0, -6) == 0);
  CHECK(self_linking(b) == -7);
  auto p = plamenevskaya(b);
  CHECK(p.q == -6);
  CHECK_FALSE(p.survives);
}

TEST_CASE("s needs a knot") {
  CHECK_THROWS_AS(turner_s(br("s1^2", 2)), NotAKnot);
  CHECK(turner_s(br("s1^2", 2), false).rank == 2);
}

TEST_CASE("two determinant routes agree") {
  // H1 of the branched cover (surgery code) vs the Jones polynomial at -1
  const char* braids[] = {"s1^-5 s2 s1^3 s2", "s1^-4 s2 s1^3 s2^2", "s1^-3 s2 s1^2 s2^2 s3 s2^-1 s3",
                          "s1^-3 s2 s1^2 s2", "s1 s2 s3 s1 s2"};
  int strands[] = {3, 3, 4, 3, 4};
  for (int i = 0; i < 5; ++i) {
    auto b = br(braids[i], strands[i]);
    CHECK(link_determinant(b) == jones_determinant(reduced_kh(b)));
  }
}

TEST_CASE("serial and parallel oracle agree") {
  auto b = br("s1^-3 s2^3 s1^2 s2^-2", 3);
  CHECK(reduced_kh(b, Exec::serial) == reduced_kh(b, Exec::parallel));
  CHECK(turner_s(b, true, Exec::serial).s == turner_s(b, true, Exec::parallel).s);
}

TEST_CASE("cross check on the worked example") {
  auto w = braid_to_openbook(br("s2 s1^-1", 3));
  auto r = cross_check(w, humphries(w.surface));
  CHECK(r.agree());
  CHECK(r.engine.total() == 1);
}
