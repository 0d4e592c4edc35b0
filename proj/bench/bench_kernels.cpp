// serial reference vs OpenMP kernels on the same inputs
#include <benchmark/benchmark.h>

#include <random>

#include "openkh/gf2.hpp"
#include "openkh/homology.hpp"
#include "openkh/oracle.hpp"

using namespace openkh;

namespace {

const char* kPhi1 = "a1 a2 a3 a1 a2 a3 a1 a2 a3 a1 a2 a3 a4^-1 a3^-1 a2^-1";

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_build_e1(benchmark::State& st) {
  Surface s{2, 1};
  auto w = parse_twist_word(kPhi1, s);
  auto sys = humphries(s);
  for (auto _ : st) benchmark::DoNotOptimize(build_e1(w, sys, {exec_of(st)}));
}

void BM_e2_ranks(benchmark::State& st) {
  Surface s{2, 1};
  auto w = parse_twist_word(kPhi1, s);
  auto c = build_e1(w, humphries(s));
  for (auto _ : st) benchmark::DoNotOptimize(e2_graded_ranks(c, exec_of(st)));
}

void BM_oracle_kh(benchmark::State& st) {
  auto b = parse_braid_word("s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 s4^-1 s3^-1 s2^-1", 5);
  for (auto _ : st) benchmark::DoNotOptimize(reduced_kh(b, exec_of(st)));
}

// the largest differential block of phi1, Markowitz vs plain echelon
void BM_rank(benchmark::State& st) {
  Surface s{2, 1};
  auto c = build_e1(parse_twist_word(kPhi1, s), humphries(s));
  int best = 0;
  for (int d = c.min_grading(); d < c.max_grading(); ++d)
    if (c.dim_at(d) > c.dim_at(best)) best = d;
  if (best == c.max_grading()) --best;
  auto rows = differential_block(c, best);
  for (auto _ : st)
    benchmark::DoNotOptimize(st.range(0) ? sparse_rank(rows, c.dim_at(best + 1))
                                         : sparse_rank_reference(rows, c.dim_at(best + 1)));
}

}  // namespace

BENCHMARK(BM_build_e1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_e2_ranks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_kh)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
