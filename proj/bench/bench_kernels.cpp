#include <benchmark/benchmark.h>

#include "lgn/lgn_ops.hpp"
#include "lgn/random_gen.hpp"

using namespace lgn;

namespace {

struct Operands {
  std::shared_ptr<const LgnAlgebra> alg;
  Poly x, y;
};

const Operands& operands(int terms) {
  static std::map<int, Operands> cache;
  auto it = cache.find(terms);
  if (it != cache.end()) return it->second;
  auto alg = LgnAlgebra::get({2, 0});
  Rng rng(99);
  Poly x = alg->normal_form(random_element(*alg, rng, terms, 4));
  Poly y = alg->normal_form(random_element(*alg, rng, terms, 4));
  return cache.emplace(terms, Operands{alg, x, y}).first->second;
}

void BM_mul_serial(benchmark::State& st) {
  auto& o = operands(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(o.alg->mul(o.x, o.y));
}

void BM_mul_parallel(benchmark::State& st) {
  auto& o = operands(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(o.alg->mul_parallel(o.x, o.y));
}

void BM_coaction_serial(benchmark::State& st) {
  auto& o = operands(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(coaction(*o.alg, o.x));
}

void BM_coaction_parallel(benchmark::State& st) {
  auto& o = operands(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(coaction_parallel(*o.alg, o.x));
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_mul_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_coaction_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_coaction_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
