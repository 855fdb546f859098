// Microbenchmarks for the hot paths: term generation (both sources), the
// transform triangle, and a full certificate.  Run manually; not part of the
// test suite.

#include "apery/congruence.hpp"
#include "apery/sequences.hpp"
#include "apery/transforms.hpp"

#include <benchmark/benchmark.h>

namespace {

const apery::SequenceSpec& gamma_spec() {
  return apery::spec_for(apery::SequenceId::Gamma);
}

void BM_FormulaTable(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state) {
    apery::TermTable t = apery::formula_table(gamma_spec(), n_max);
    benchmark::DoNotOptimize(t.terms.back());
  }
}
BENCHMARK(BM_FormulaTable)->Arg(64)->Arg(256);

void BM_RecurrenceTable(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state) {
    apery::TermTable t =
        apery::generate(gamma_spec(), apery::TermSource::Recurrence, n_max);
    benchmark::DoNotOptimize(t.terms.back());
  }
}
BENCHMARK(BM_RecurrenceTable)->Arg(256)->Arg(2048);

void BM_BinomialTransform(benchmark::State& state) {
  const long n_max = state.range(0);
  apery::TermTable t =
      apery::generate(gamma_spec(), apery::TermSource::Recurrence, n_max);
  for (auto _ : state) {
    apery::TransformTable v = apery::binomial_transform(t, 5, n_max);
    benchmark::DoNotOptimize(v.values.back());
  }
}
BENCHMARK(BM_BinomialTransform)->Arg(256)->Arg(1024);

void BM_Certificate(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state) {
    apery::CongruenceCertificate cert = apery::theorem2_check(
        gamma_spec(), n_max, -25, 25, apery::TermSource::Canonical);
    benchmark::DoNotOptimize(cert.M);
  }
}
BENCHMARK(BM_Certificate)->Arg(100)->Arg(200);

void BM_BinomialCacheRow(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    apery::BinomialCache cache;
    benchmark::DoNotOptimize(cache.get(n, n / 2));
  }
}
BENCHMARK(BM_BinomialCacheRow)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
