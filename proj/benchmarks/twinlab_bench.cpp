#include <benchmark/benchmark.h>

#include <vector>

#include "twinlab/bases.hpp"
#include "twinlab/expression.hpp"
#include "twinlab/milnor.hpp"
#include "twinlab/pt4.hpp"
#include "twinlab/reflection.hpp"
#include "twinlab/sampling.hpp"
#include "twinlab/stallings.hpp"
#include "twinlab/strand_ops.hpp"

namespace {

using namespace twinlab;

std::vector<TwinWord> words(int strands, int length, std::size_t count, bool pure) {
  WordSampler sampler(7);
  std::vector<TwinWord> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(pure ? sampler.random_pure_word(strands, length) : sampler.random_word(strands, length));
  }
  return out;
}

void BM_NormalForm(benchmark::State& state) {
  const auto input = words(6, static_cast<int>(state.range(0)), 64, false);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(input[k++ % input.size()]));
}
BENCHMARK(BM_NormalForm)->Arg(16)->Arg(64)->Arg(256);

void BM_ReflectionEqual(benchmark::State& state) {
  const auto input = words(6, static_cast<int>(state.range(0)), 64, false);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reflection_equal(input[k % input.size()], input[(k + 1) % input.size()]));
    ++k;
  }
}
BENCHMARK(BM_ReflectionEqual)->Arg(16)->Arg(32);

void BM_RewritePt4(benchmark::State& state) {
  const auto input = words(4, static_cast<int>(state.range(0)), 64, true);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_pt4(input[k++ % input.size()]));
}
BENCHMARK(BM_RewritePt4)->Arg(24)->Arg(96);

void BM_FoldK4(benchmark::State& state) {
  std::vector<FreeWord> gens;
  for (const auto& id : pt5_identities()) gens.push_back(parse_free_expression(id.image, a_basis().alphabet));
  for (auto _ : state) benchmark::DoNotOptimize(rank(fold(a_basis().alphabet, gens)));
}
BENCHMARK(BM_FoldK4);

void BM_Theta(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_generators(degree));
}
BENCHMARK(BM_Theta)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
