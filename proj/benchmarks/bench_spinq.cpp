// Microbenchmarks for the hot paths: Laurent multiplication, exact
// division, localization sums, surgery chains, and text round-trips.

#include "spinq/character.hpp"
#include "spinq/checks.hpp"
#include "spinq/families.hpp"
#include "spinq/localization.hpp"
#include "spinq/surgery.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace spinq;

VirtualCharacter dense_character(std::int64_t terms, std::uint64_t seed) {
  checks::Rng rng(seed);
  VirtualCharacter x;
  for (std::int64_t i = 0; i < terms; ++i)
    x += VirtualCharacter::monomial(2 * i, rng.nonzero(-1000, 1000));
  return x;
}

void BM_CharacterProduct(benchmark::State& state) {
  const VirtualCharacter a = dense_character(state.range(0), 1);
  const VirtualCharacter b = dense_character(state.range(0), 2);
  for (auto _ : state) {
    VirtualCharacter p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_CharacterProduct)->Arg(16)->Arg(64)->Arg(256);

void BM_ExactQuotient(benchmark::State& state) {
  const VirtualCharacter q = dense_character(state.range(0), 3);
  const VirtualCharacter d = dense_character(state.range(0), 4);
  const VirtualCharacter num = q * d;
  for (auto _ : state) {
    VirtualCharacter r = exact_quotient(num, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ExactQuotient)->Arg(16)->Arg(64)->Arg(256);

void BM_QuantizeSphere(benchmark::State& state) {
  // A long geometric series: mu_N - mu_S = 2 * l * range.
  const std::int64_t half_gap = state.range(0);
  const EvenManifoldData sphere = make_sphere(3, 3 * (2 * half_gap + 1), -3 * (2 * half_gap + 1));
  for (auto _ : state) {
    VirtualCharacter q = quantize_even_isolated(sphere);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_QuantizeSphere)->Arg(8)->Arg(64)->Arg(512);

void BM_ConnectedSumChain(benchmark::State& state) {
  const std::int64_t links = state.range(0);
  for (auto _ : state) {
    OddManifoldData acc{"chain0", {{"glue0", 1, 1, +1}}, {}};
    acc.alpha.integrals["glue0"] = 1;
    std::string designated = "glue0";
    for (std::int64_t i = 1; i <= links; ++i) {
      const std::string next_id = "glue" + std::to_string(i);
      OddManifoldData next{"chain" + std::to_string(i), {{next_id, 1, 1, +1}}, {}};
      next.alpha.integrals[next_id] = 1;
      acc = connected_sum(acc, next, {designated, next_id, 1});
      designated += "#" + next_id;
    }
    VirtualCharacter q = quantize_odd3(acc);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_ConnectedSumChain)->Arg(4)->Arg(16);

void BM_TextRoundTrip(benchmark::State& state) {
  const std::string text = canonical_string(dense_character(state.range(0), 5));
  for (auto _ : state) {
    std::string out = canonical_string(parse_character(text));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_TextRoundTrip)->Arg(16)->Arg(256);

void BM_CheckSuiteRing(benchmark::State& state) {
  for (auto _ : state) {
    checks::CheckReport r = checks::run_check("ring", 7, 10);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CheckSuiteRing);

} // namespace

BENCHMARK_MAIN();
