#include "doctest.h"
#include "json.hpp"
#include "openkh/errors.hpp"
#include "openkh/report.hpp"

using namespace openkh;

TEST_CASE("result document round trip") {
  Surface s{2, 1};
  auto w = parse_twist_word("a1 a2 a3 a4 a3^-5 a4^2 a0", s);
  auto doc = make_result(w, compute(w, humphries(s)), 0.125);
  auto text = to_json(doc);
  auto back = result_from_json(text);
  CHECK(back == doc);
  CHECK(to_json(back) == text);

  auto j = nlohmann::json::parse(text);
  for (const char* key : {"word", "surface", "n", "n_minus", "ranks_by_grading", "total_rank", "psi_is_cycle",
                          "psi_survives", "h1_order", "verdict", "evidence", "timing"})
    CHECK(j.contains(key));
  CHECK(j["h1_order"] == 9);
  CHECK(j["verdict"] == "TightCertified");
  CHECK(j["total_rank"] == 9);
}

TEST_CASE("infinite |H1| serializes as a string") {
  Surface s{1, 1};
  auto w = parse_twist_word("", s);
  auto doc = make_result(w, compute(w, humphries(s)), 0);
  auto j = nlohmann::json::parse(to_json(doc));
  CHECK(j["h1_order"] == "infinite");
  CHECK(result_from_json(to_json(doc)) == doc);
}

TEST_CASE("huge |H1| survives the trip") {
  ResultDocument d;
  d.h1.value = BigInt(1) << 100;
  CHECK(result_from_json(to_json(d)).h1.value == d.h1.value);
}

TEST_CASE("bad documents") {
  CHECK_THROWS_AS(result_from_json("{"), ParseError);
  CHECK_THROWS_AS(result_from_json("{\"word\": 3}"), ParseError);
}

TEST_CASE("oracle document round trip") {
  auto b = parse_braid_word("s1^-5 s2 s1^3 s2", 3);
  OracleDocument d;
  d.braid = b.to_string();
  d.strands = 3;
  d.sl = self_linking(b);
  d.kh = reduced_kh(b);
  d.psi = plamenevskaya(b);
  d.s = turner_s(b).s;
  d.det = link_determinant(b);
  d.crosscheck = true;
  CHECK(oracle_from_json(to_json(d)) == d);
  CHECK(to_text(d).find("det 11") != std::string::npos);
}
