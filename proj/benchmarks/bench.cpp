#include <benchmark/benchmark.h>

#include <random>

#include "tsr/chop.hpp"
#include "tsr/constructions.hpp"
#include "tsr/tsring.hpp"

namespace {

void bm_session_build(benchmark::State& state) {
  for (auto _ : state) {
    tsr::Session S(tsr::parse_group_spec("D8"), 2, 0);
    benchmark::DoNotOptimize(S.size());
  }
}
BENCHMARK(bm_session_build);

void bm_matrix_N(benchmark::State& state) {
  tsr::Session S(tsr::parse_group_spec("D8"), 2, 0);
  for (auto _ : state) {
    tsr::SpeciesTable t = tsr::matrix_N(S);
    benchmark::DoNotOptimize(t.N.rows());
  }
}
BENCHMARK(bm_matrix_N);

void bm_matrix_Ninv(benchmark::State& state) {
  tsr::Session S(tsr::parse_group_spec("D8"), 2, 0);
  for (auto _ : state) {
    tsr::CycloMatrix M = tsr::matrix_Ninv(S);
    benchmark::DoNotOptimize(M.rows());
  }
}
BENCHMARK(bm_matrix_Ninv);

void bm_idempotent(benchmark::State& state) {
  tsr::Session S(tsr::parse_group_spec("D8"), 2, 0);
  for (auto _ : state) {
    tsr::IdempotentExpansion e = tsr::idempotent(S, S.species()[0]);
    benchmark::DoNotOptimize(e.coeffs.size());
  }
}
BENCHMARK(bm_idempotent);

void bm_chop_regular(benchmark::State& state) {
  tsr::Group G = tsr::parse_group_spec("S3");
  tsr::FFieldPtr F = tsr::FField::build(2, 3);
  tsr::GModule M = tsr::GModule::regular(G, F);
  for (auto _ : state) {
    auto factors = tsr::chop(M, 7);
    benchmark::DoNotOptimize(factors.size());
  }
}
BENCHMARK(bm_chop_regular);

void bm_cyclo_inverse(benchmark::State& state) {
  const int n = 8;
  const int m = 4;
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> num(-5, 5);
  tsr::CycloMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tsr::Cyclo v(tsr::Rat(num(rng)), m);
      v += tsr::Cyclo::zeta_power(m, 1) * tsr::Cyclo(tsr::Rat(num(rng)));
      A.at(i, j) = v;
      if (i == j) A.at(i, j) += tsr::Cyclo(tsr::Rat(100), m);
    }
  for (auto _ : state) {
    tsr::CycloMatrix B = A.inverse();
    benchmark::DoNotOptimize(B.rows());
  }
}
BENCHMARK(bm_cyclo_inverse);

}  // namespace

BENCHMARK_MAIN();
