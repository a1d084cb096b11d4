#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "newsstyle/learn.hpp"

using namespace newsstyle;

namespace {

struct Problem {
  RawMatrix X;
  std::vector<Label> y;
  std::vector<std::string> features;
};

Problem make_problem(std::size_t n, std::size_t d) {
  std::mt19937_64 eng(7);
  std::normal_distribution<double> noise(0, 1);
  Problem p;
  for (std::size_t j = 0; j < d; ++j) p.features.push_back("f" + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i) {
    const bool pos = i % 2 == 0;
    std::vector<std::optional<double>> row;
    for (std::size_t j = 0; j < d; ++j) row.push_back(noise(eng) + (pos ? 0.5 : -0.5));
    p.X.push_back(std::move(row));
    p.y.push_back(pos ? Label::fake : Label::real);
  }
  return p;
}

void BM_TrainSvm(benchmark::State& state) {
  const auto p = make_problem(static_cast<std::size_t>(state.range(0)), 4);
  const auto X = Standardizer::fit(p.X).transform(p.X);
  std::vector<int> y;
  for (const auto l : p.y) y.push_back(l == Label::fake ? 1 : -1);
  for (auto _ : state) benchmark::DoNotOptimize(train_svm(X, y));
}
BENCHMARK(BM_TrainSvm)->Arg(150)->Arg(2000);

void BM_CrossValidate(benchmark::State& state) {
  const auto p = make_problem(150, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cross_validate(p.X, p.y, Label::fake, Label::real, p.features, 5));
}
BENCHMARK(BM_CrossValidate);

}  // namespace
