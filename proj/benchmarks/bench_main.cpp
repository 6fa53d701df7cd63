#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "tstab/io.hpp"
#include "tstab/p1_stabilities.hpp"
#include "tstab/sampling.hpp"
#include "tstab/t_structure.hpp"

using namespace tstab;

namespace {

std::vector<DerivedObject> corpus(std::size_t summands) {
  std::mt19937_64 rng(1);
  SampleSpec spec;
  spec.max_summands = summands;
  std::vector<DerivedObject> out;
  for (int i = 0; i < 64; ++i) out.push_back(random_object(rng, spec));
  return out;
}

void BM_HnStandard(benchmark::State& state) {
  const auto xs = corpus(static_cast<std::size_t>(state.range(0)));
  const StandardStability fam(PointOrder({"x", "y", "z"}));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hn(xs[i++ % xs.size()], fam));
}
BENCHMARK(BM_HnStandard)->Arg(2)->Arg(6)->Arg(16);

void BM_HnExceptional(benchmark::State& state) {
  const auto xs = corpus(static_cast<std::size_t>(state.range(0)));
  const ExceptionalStability fam(0, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hn(xs[i++ % xs.size()], fam));
}
BENCHMARK(BM_HnExceptional)->Arg(2)->Arg(6)->Arg(16);

void BM_VerifyHn(benchmark::State& state) {
  const auto xs = corpus(6);
  const ExceptionalStability fam(0, std::nullopt);
  std::vector<Filtration<DerivedObject>> fs;
  for (const auto& x : xs) fs.push_back(hn(x, fam));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto k = i++ % xs.size();
    benchmark::DoNotOptimize(verify_hn(xs[k], fs[k], fam));
  }
}
BENCHMARK(BM_VerifyHn);

void BM_Truncate(benchmark::State& state) {
  const auto xs = corpus(6);
  const ExceptionalStability fam(0, 2);
  const auto cut = parse_cutspec("exc:a=1,b=-2");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(truncate(xs[i++ % xs.size()], cut, fam));
}
BENCHMARK(BM_Truncate);

void BM_Classify(benchmark::State& state) {
  const StandardStability std_fam(PointOrder({"x", "y", "z"}));
  const ExceptionalStability exc_fam(0, 2);
  const auto a = parse_cutspec("std:m=1,K=2,P=all");
  const auto b = parse_cutspec("exc:a=5,b=1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_bounded_cut(a, std_fam));
    benchmark::DoNotOptimize(classify_bounded_cut(b, exc_fam));
  }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
