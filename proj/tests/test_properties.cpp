// quick versions of the property suites; the acceptance binary runs the full counts
#include "doctest.h"
#include "openkh/gf2.hpp"
#include "openkh/homology.hpp"
#include "openkh/oracle.hpp"
#include "words.hpp"

using namespace openkh;
using namespace openkh::testing;

TEST_CASE("d^2 = 0, psi cycle, Euler characteristic") {
  std::mt19937 rng(101);
  for (int t = 0; t < 30; ++t) {
    auto w = t % 3 == 0 ? alpha0_word(rng, 7) : chain_word(rng, pick_surface(rng), 7);
    CAPTURE(w.to_string());
    auto sys = humphries(w.surface);
    auto c = build_e1(w, sys);
    CHECK(verify_d_squared(c));
    CHECK(psi_is_cycle(c));
    CHECK(e1_dims(c).euler() == e2_graded_ranks(c).euler());
  }
}

TEST_CASE("serial reference matches the parallel kernels") {
  std::mt19937 rng(202);
  for (int t = 0; t < 10; ++t) {
    auto w = t % 2 ? alpha0_word(rng, 9) : chain_word(rng, pick_surface(rng), 9);
    auto sys = humphries(w.surface);
    auto a = build_e1(w, sys, {Exec::serial});
    auto b = build_e1(w, sys, {Exec::parallel});
    CHECK(e2_graded_ranks(a, Exec::serial) == e2_graded_ranks(b, Exec::parallel));
    for (int d = a.min_grading(); d < a.max_grading(); ++d) {
      auto rows = differential_block(a, d);
      CHECK(sparse_rank(rows, a.dim_at(d + 1)) == sparse_rank_reference(rows, a.dim_at(d + 1)));
    }
  }
}

TEST_CASE("stabilization") {
  std::mt19937 rng(303);
  for (int t = 0; t < 8; ++t) {
    auto w = chain_word(rng, pick_surface(rng), 6);
    CAPTURE(w.to_string());
    auto base = compute(w, humphries(w.surface));
    auto p = positive_stabilize(w), n = negative_stabilize(w);
    auto rp = compute(p, humphries(p.surface));
    auto rn = compute(n, humphries(n.surface));
    CHECK(rp.kh == base.kh);
    CHECK(rn.kh == base.kh);
    CHECK(rp.psi.survives == base.psi.survives);
    CHECK_FALSE(rn.psi.survives);
  }
}

TEST_CASE("engine agrees with the braid oracle") {
  std::mt19937 rng(404);
  for (int t = 0; t < 15; ++t) {
    auto w = chain_word(rng, pick_surface(rng), 7);
    CAPTURE(w.to_string());
    CHECK(cross_check(w, humphries(w.surface)).agree());
  }
}
