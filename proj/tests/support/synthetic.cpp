#include "synthetic.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <string_view>

#include "newsstyle/corpus.hpp"
#include "newsstyle/rng.hpp"

namespace nstest {

namespace fs = std::filesystem;
using newsstyle::uniform_index;

namespace {

template <std::size_t N>
std::string_view pick(std::mt19937_64& eng, const std::array<std::string_view, N>& pool) {
  return pool[uniform_index(eng, N)];
}

std::size_t between(std::mt19937_64& eng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform_index(eng, hi - lo + 1));
}

constexpr std::array<std::string_view, 12> kNouns = {
    "government", "policy",   "budget", "committee", "report",  "economy",
    "agency",     "analysis", "region", "program",   "council", "investment"};
constexpr std::array<std::string_view, 8> kAdjectives = {
    "federal", "annual", "regional", "independent", "public", "new", "local", "economic"};
constexpr std::array<std::string_view, 8> kVerbs = {
    "said", "announced", "reviewed", "approved", "estimated", "reported", "proposed",
    "expected"};
constexpr std::array<std::string_view, 8> kNames = {
    "Obama", "Hillary", "Trump", "Clinton", "Washington", "Soros", "Comey", "Podesta"};
constexpr std::array<std::string_view, 6> kShouts = {
    "BREAKING", "SHOCKING", "EXPOSED", "TRUTH", "FBI", "CNN"};
constexpr std::array<std::string_view, 8> kPersonal = {
    "I", "we", "you", "my", "our", "your", "they", "me"};
constexpr std::array<std::string_view, 8> kFunny = {
    "hamster", "toaster", "unicorn", "pancake", "kazoo", "llama", "waffle", "trampoline"};

std::string capitalize(std::string_view w) {
  std::string s(w);
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string real_sentence(std::mt19937_64& eng) {
  std::string s = "The " + std::string(pick(eng, kAdjectives)) + " " +
                  std::string(pick(eng, kNouns)) + " " + std::string(pick(eng, kVerbs)) +
                  " that the " + std::string(pick(eng, kNouns)) + " of the " +
                  std::string(pick(eng, kAdjectives)) + " " + std::string(pick(eng, kNouns));
  const std::size_t extra = between(eng, 1, 4);
  for (std::size_t i = 0; i < extra; ++i)
    s += " and the " + std::string(pick(eng, kNouns)) + " in the " +
         std::string(pick(eng, kNouns));
  if (uniform_index(eng, 3) == 0)
    s += ", \"" + capitalize(pick(eng, kNouns)) + " matters\", officials said";
  return s + ".";
}

std::string fake_sentence(std::mt19937_64& eng) {
  std::string s = std::string(pick(eng, kShouts)) + " " + std::string(pick(eng, kNames)) +
                  " and " + std::string(pick(eng, kNames)) + " " +
                  std::string(pick(eng, kVerbs)) + " " + std::string(pick(eng, kNames));
  if (uniform_index(eng, 2) == 0) s += " " + std::string(pick(eng, kShouts));
  return s + (uniform_index(eng, 2) == 0 ? "!" : ".");
}

std::string satire_sentence(std::mt19937_64& eng) {
  std::string s = capitalize(pick(eng, kPersonal)) + " " + std::string(pick(eng, kVerbs)) +
                  " " + std::string(pick(eng, kPersonal)) + " " +
                  std::string(pick(eng, kFunny)) + " is " + std::string(pick(eng, kAdjectives));
  const std::size_t extra = between(eng, 0, 2);
  for (std::size_t i = 0; i < extra; ++i)
    s += " like " + std::string(pick(eng, kPersonal)) + " " + std::string(pick(eng, kFunny));
  return s + ".";
}

std::string make_article(std::mt19937_64& eng, newsstyle::Label label) {
  using newsstyle::Label;
  std::string title;
  std::string body;
  switch (label) {
    case Label::real: {
      title = capitalize(pick(eng, kAdjectives)) + " " + capitalize(pick(eng, kNouns)) +
              " and the " + capitalize(pick(eng, kNouns)) + " " + capitalize(pick(eng, kVerbs));
      const std::size_t n = between(eng, 6, 12);
      for (std::size_t i = 0; i < n; ++i) body += (i ? " " : "") + real_sentence(eng);
      break;
    }
    case Label::fake: {
      title = std::string(pick(eng, kShouts)) + ": " + std::string(pick(eng, kNames)) + " " +
              capitalize(pick(eng, kVerbs)) + " " + std::string(pick(eng, kNames)) + " " +
              std::string(pick(eng, kShouts));
      const std::size_t n = between(eng, 3, 7);
      for (std::size_t i = 0; i < n; ++i) body += (i ? " " : "") + fake_sentence(eng);
      break;
    }
    case Label::satire: {
      title = capitalize(pick(eng, kPersonal)) + " " + capitalize(pick(eng, kFunny)) + " " +
              capitalize(pick(eng, kVerbs)) + " " + capitalize(pick(eng, kFunny));
      const std::size_t n = between(eng, 4, 9);
      for (std::size_t i = 0; i < n; ++i) body += (i ? " " : "") + satire_sentence(eng);
      break;
    }
  }
  return title + "\n\n" + body + "\n";
}

}  // namespace

void write_synthetic_corpus(const fs::path& root, const SyntheticCorpusOptions& options) {
  std::mt19937_64 eng(options.seed);
  for (auto label : newsstyle::allowed_labels(options.dataset_id)) {
    const fs::path dir = root / newsstyle::to_string(label);
    fs::create_directories(dir);
    for (std::size_t i = 0; i < options.per_label; ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "%s_%03zu.txt", newsstyle::to_string(label), i);
      std::ofstream(dir / name, std::ios::binary) << make_article(eng, label);
    }
  }
}

std::string random_text(std::mt19937_64& eng, std::size_t pieces) {
  static constexpr std::array<std::string_view, 40> kPieces = {
      "Dogs",  "bark",    "don't", "we'll", "I'm",   "it's",  "U.S.",  "Mr.",
      "3.14",  "1,000",   "42",    "-7",    ".",     ",",     "!",     "?",
      "\"",    "'",       "(",     ")",     "\xe2\x80\x9c",   "\xe2\x80\x9d",
      "\xe2\x80\x99s",    "caf\xc3\xa9",    "na\xc3\xafve",   "\xe2\x80\x94",
      "$",     "%",       "@",     "#tag",  "NYPD",  "e-mail", "x",    "...",
      "rock'n'roll",      "O'Brien",        "can't", "\xf0\x9f\x98\x80",
      "\xce\xb1\xce\xb2", "A"};
  static constexpr std::array<std::string_view, 6> kSpaces = {" ", " ", "  ", "\n",
                                                             "\t", ""};
  std::string out;
  for (std::size_t i = 0; i < pieces; ++i) {
    out += pick(eng, kPieces);
    out += pick(eng, kSpaces);
  }
  return out;
}

std::string random_words(std::mt19937_64& eng, std::size_t n) {
  static constexpr std::array<std::string_view, 16> kWords = {
      "the", "cat", "sat", "on",  "mat",   "a",     "dog",  "ran",
      "is",  "of",  "big", "red", "house", "river", "tree", "walked"};
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += pick(eng, kWords);
  }
  return out;
}

std::vector<double> random_sample(std::mt19937_64& eng, std::size_t n, double shift,
                                  bool ties) {
  std::normal_distribution<double> normal(shift, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) {
    v = normal(eng);
    if (ties) v = std::round(v * 2.0) / 2.0;
  }
  return out;
}

}  // namespace nstest
