#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "newsstyle/special_functions.hpp"
#include "newsstyle/stats.hpp"

using namespace newsstyle;

namespace {

std::vector<double> normal_sample(std::mt19937_64& eng, std::size_t n, double shift) {
  std::normal_distribution<double> d(shift, 1.0);
  std::vector<double> out(n);
  for (auto& x : out) x = d(eng);
  return out;
}

void BM_IncompleteBeta(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reg_incomplete_beta(x, 12.5, 40.0));
    x = x < 0.98 ? x + 0.01 : 0.01;
  }
}
BENCHMARK(BM_IncompleteBeta);

void BM_CompareFeature(benchmark::State& state) {
  std::mt19937_64 eng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<GroupSample> groups{{Label::real, normal_sample(eng, n, 0.0)},
                                        {Label::fake, normal_sample(eng, n, 0.3)},
                                        {Label::satire, normal_sample(eng, n, 0.6)}};
  for (auto _ : state) benchmark::DoNotOptimize(compare_feature("x", groups));
}
BENCHMARK(BM_CompareFeature)->Arg(75)->Arg(1000);

void BM_KruskalWallis(benchmark::State& state) {
  std::mt19937_64 eng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<std::vector<double>> groups{normal_sample(eng, n, 0.0),
                                                normal_sample(eng, n, 0.1),
                                                normal_sample(eng, n, 0.2)};
  for (auto _ : state) benchmark::DoNotOptimize(kruskal_wallis(groups));
}
BENCHMARK(BM_KruskalWallis)->Arg(75)->Arg(10000);

}  // namespace
