#include <benchmark/benchmark.h>

#include <random>

#include "sitwist/catalog.hpp"
#include "sitwist/homology.hpp"
#include "sitwist/lamination.hpp"
#include "sitwist/twist.hpp"

using namespace sitwist;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load(SITWIST_BENCH_CATALOG);
  return c;
}

BraidWord random_word(int n, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  std::vector<int> letters(length);
  for (int& l : letters) l = sign(rng) ? gen(rng) : -gen(rng);
  return BraidWord(n, letters);
}

void BM_ApplyBraid(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const BraidWord w = random_word(7, length, 1);
  const LoopCoordinates c = round_curve(7, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(apply_braid(c, w));
  state.SetItemsProcessed(state.iterations() * length);
}
BENCHMARK(BM_ApplyBraid)->RangeMultiplier(4)->Range(64, 4096);

void BM_EqualsRelation(benchmark::State& state, const char* name) {
  const Catalog& c = catalog();
  const RelationEntry& e = c.relation(name);
  const BraidWord lhs = c.lhs(e), rhs = c.rhs(e);
  for (auto _ : state) benchmark::DoNotOptimize(equals(lhs, rhs));
}
BENCHMARK_CAPTURE(BM_EqualsRelation, ssip, "REL-SSIP-B7");
BENCHMARK_CAPTURE(BM_EqualsRelation, szsip, "REL-SZSIP-B7");
BENCHMARK_CAPTURE(BM_EqualsRelation, aux1b, "REL-AUX1B-PB5");

void BM_BurauSymbolic(benchmark::State& state) {
  const BraidWord w = random_word(7, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(burau_reduced(w));
}
BENCHMARK(BM_BurauSymbolic)->Arg(32)->Arg(128)->Arg(512);

void BM_VerifyAll(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(catalog(), parallel));
}
BENCHMARK(BM_VerifyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
