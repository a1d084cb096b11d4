#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "newsstyle/features.hpp"
#include "newsstyle/textseg.hpp"

using namespace newsstyle;

namespace {

const Resources& resources() {
  static const Resources res = Resources::load(NEWSSTYLE_BENCH_RESOURCE_DIR);
  return res;
}

// Roughly news-shaped prose of `sentences` sentences.
std::string article(std::size_t sentences) {
  static const char* const kSentences[] = {
      "The senator said on Tuesday that the bill would not pass without changes. ",
      "\"We're going to fight this,\" she told reporters outside the U.S. Capitol. ",
      "Critics argued the plan, announced in May, would cost $4.5 billion over ten years. ",
      "BREAKING: Officials confirm the NYPD opened an investigation! ",
      "Mr. Smith declined to comment, citing an ongoing review by the department. ",
  };
  std::string out;
  for (std::size_t i = 0; i < sentences; ++i) out += kSentences[i % 5];
  return out;
}

void BM_Tokenize(benchmark::State& state) {
  const auto text = article(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize)->Arg(10)->Arg(100);

void BM_SplitSentences(benchmark::State& state) {
  const auto text = article(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(split_sentences(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_SplitSentences)->Arg(10)->Arg(100);

void BM_Tag(benchmark::State& state) {
  const auto& res = resources();
  const auto sentences = split_sentences(article(static_cast<std::size_t>(state.range(0))));
  std::size_t tokens = 0;
  for (const auto& s : sentences) tokens += s.tokens.size();
  for (auto _ : state)
    for (const auto& s : sentences) benchmark::DoNotOptimize(tag(s, res.tagger));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * tokens));
}
BENCHMARK(BM_Tag)->Arg(10)->Arg(100);

void BM_ExtractAll(benchmark::State& state) {
  const auto& res = resources();
  Document doc;
  doc.id = "bench";
  doc.title = "BREAKING BOMBSHELL: NYPD Blows Whistle on New Hillary Emails";
  doc.body = article(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_all(doc, Part::body, res));
}
BENCHMARK(BM_ExtractAll)->Arg(10)->Arg(50);

}  // namespace
