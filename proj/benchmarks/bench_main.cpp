#include <mukai/catalog.hpp>
#include <mukai/verify.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_BuildProductOfElliptic(benchmark::State& state) {
  const auto e = mukai::curve(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mukai::product(e, e));
  }
}
BENCHMARK(BM_BuildProductOfElliptic);

void BM_GramInverseExE(benchmark::State& state) {
  const auto e = mukai::curve(1);
  for (auto _ : state) {
    // rebuild so the per-ring cache cannot serve the answer
    const auto exe = mukai::product(e, e);
    benchmark::DoNotOptimize(exe->ring->gram_inverse());
  }
}
BENCHMARK(BM_GramInverseExE);

void BM_IdentityKernelP3(benchmark::State& state) {
  const auto p3 = mukai::projective_space(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mukai::identity_kernel(p3));
  }
}
BENCHMARK(BM_IdentityKernelP3);

void BM_ComposeMixedChain(benchmark::State& state) {
  const auto p1 = mukai::projective_space(1);
  const auto e = mukai::curve(1);
  const auto first = mukai::kernel_catalog(p1, e, mukai::kDefaultSeed);
  const auto second = mukai::kernel_catalog(e, p1, mukai::kDefaultSeed);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = first[i % first.size()];
    const auto& g = second[(i / first.size()) % second.size()];
    benchmark::DoNotOptimize(mukai::compose(f, g));
    ++i;
  }
}
BENCHMARK(BM_ComposeMixedChain);

void BM_MukaiGramExE(benchmark::State& state) {
  const auto e = mukai::curve(1);
  const auto exe = mukai::product(e, e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mukai::mukai_gram(exe));
  }
}
BENCHMARK(BM_MukaiGramExE);

void BM_VerifyQuiverSuite(benchmark::State& state) {
  mukai::VerifyOptions opts;
  opts.suite = "quiver";
  for (auto _ : state) {
    benchmark::DoNotOptimize(mukai::run_verification(opts));
  }
}
BENCHMARK(BM_VerifyQuiverSuite);

}  // namespace

BENCHMARK_MAIN();
