#include "doctest.h"
#include "openkh/homology.hpp"

using namespace openkh;

TEST_CASE("graded ranks") {
  GradedRanks g;
  g.ranks = {{-6, 1}, {-5, 2}, {-1, 2}};
  CHECK(g.total() == 5);
  CHECK(g.euler() == 1 - 2 - 2);
  CHECK(g.poincare() == "t^-6 + 2t^-5 + 2t^-1");
  CHECK(GradedRanks{}.poincare() == "0");
}

TEST_CASE("worked example homology") {
  Surface s{1, 1};
  auto w = parse_twist_word("a2 a1^-1", s);
  auto r = compute(w, humphries(s));
  CHECK(r.kh.poincare() == "t^0");
  CHECK(r.e1.total() == 2 + 1 + 4 + 2);
  CHECK_FALSE(r.psi.survives);
  CHECK(r.psi.is_cycle);
  CHECK(r.e1.euler() == r.kh.euler());
}

TEST_CASE("identity monodromy on S_{2,1}") {
  auto r = compute(parse_twist_word("", Surface{2, 1}), humphries({2, 1}));
  CHECK(r.kh.total() == 16);
  CHECK(r.psi.survives);
  CHECK(r.verdict.kind == VerdictKind::Inconclusive);
}

TEST_CASE("verdict rules") {
  GradedRanks kh;
  kh.ranks = {{-1, 2}, {0, 1}};
  PsiReport alive{true, true, 0}, dead{true, false, 0};
  auto t = decide(kh, H1Order{false, 3}, alive);
  CHECK(t.kind == VerdictKind::TightCertified);
  CHECK(verdict_consistent(t));
  auto n = decide(kh, H1Order{false, 5}, dead);
  CHECK(n.kind == VerdictKind::NotStronglyFillableCertified);
  auto i = decide(kh, H1Order{true, 0}, alive);
  CHECK(i.kind == VerdictKind::Inconclusive);
  CHECK(i.evidence.back() == "|H1| infinite: collapse test unusable");
  kh.ranks[2] = 1;
  CHECK(decide(kh, H1Order{false, 5}, dead).kind == VerdictKind::Inconclusive);
  t.kind = VerdictKind::Inconclusive;
  CHECK_FALSE(verdict_consistent(t));
  CHECK(verdict_from_string(to_string(VerdictKind::NotStronglyFillableCertified)) ==
        VerdictKind::NotStronglyFillableCertified);
}

TEST_CASE("staged cancellation: eight generator model") {
  // p q x y r s z w
  enum { p, q, x, y, r, s, z, w };
  FilteredComplex c;
  c.level = {0, 0, 0, 1, 2, 2, 1, 3};
  c.d.resize(8);
  c.d[p] = {q, y};
  c.d[x] = {y};
  c.d[r] = {s};
  c.d[z] = {s, w};
  auto pages = staged_cancellation(c, {{y}}, 2);
  REQUIRE(pages.size() == 3);
  auto count = [](const Page& pg) {
    uint64_t t = 0;
    for (auto& [l, k] : pg.counts) t += k;
    return t;
  };
  CHECK(count(pages[0]) == 4);
  CHECK(pages[0].alive == std::vector<uint32_t>{x, y, z, w});
  CHECK(count(pages[1]) == 2);
  CHECK(count(pages[2]) == 0);
  CHECK(pages[0].marked[0] == std::vector<uint32_t>{y});
  CHECK(pages[1].marked[0].empty());
}

TEST_CASE("staged cancellation: three generators") {
  FilteredComplex c;
  c.level = {0, 1, 2};
  c.d = {{1, 2}, {}, {}};
  auto pages = staged_cancellation(c, {{1}}, 1);
  CHECK(pages[0].alive.size() == 3);
  CHECK(pages[1].alive == std::vector<uint32_t>{2});
  // y is not a boundary in the full complex, yet its image lands on z
  CHECK(pages[1].marked[0] == std::vector<uint32_t>{2});
}

TEST_CASE("zero differential is untouched") {
  FilteredComplex c;
  c.level = {0, 1, 1};
  c.d.resize(3);
  auto pages = staged_cancellation(c, {}, 2);
  for (auto& pg : pages) CHECK(pg.alive.size() == 3);
}

TEST_CASE("first stage of the cube recovers E2") {
  Surface s{1, 2};
  for (const char* text : {"a1 a2^-1 a3", "a2 a1^-1 a3^-1 a2", "a1^2 a3^-2"}) {
    auto w = parse_twist_word(text, s);
    auto c = build_e1(w, humphries(s));
    std::vector<uint32_t> psi;
    auto f = cube_as_filtered(c, &psi);
    auto pages = staged_cancellation(f, {psi}, 1);
    GradedRanks staged;
    for (auto& [l, k] : pages[1].counts) staged.ranks[l] = k;
    CHECK(staged == e2_graded_ranks(c));
    CHECK(pages[0].counts == e1_dims(c).ranks);
  }
}
