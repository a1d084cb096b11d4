#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "newsstyle/textseg.hpp"

namespace newsstyle {

// Word-category dictionary in the LIWC style. Entries are lowercase words or
// stems with a trailing `*`. A word resolves to a single entry (an exact
// entry if one exists, otherwise the longest matching stem) and counts once
// toward every category that lists that entry.
class CategoryLexicon {
 public:
  std::string name;
  std::string version;

  // Format: optional `@name <text>` / `@version <text>` lines, then blocks
  // opened by `%<category>` with one entry per line. `#` starts a comment.
  static CategoryLexicon load(const std::filesystem::path& file);
  static CategoryLexicon parse(std::string_view text, const std::string& source = {});

  // Throws Error on a duplicate category.
  void add_category(const std::string& category);
  // Throws Error when the entry is empty or `*` appears anywhere but the end.
  void add_entry(const std::string& category, std::string_view entry);

  const std::vector<std::string>& categories() const noexcept { return categories_; }
  bool has_category(std::string_view category) const;
  std::size_t entry_count(std::string_view category) const;

  // Category indices for a lowercased word; empty when nothing matches.
  const std::vector<std::size_t>& lookup(std::string_view lower_word) const;

 private:
  std::size_t index_of(std::string_view category) const;

  std::vector<std::string> categories_;
  std::vector<std::size_t> entry_counts_;
  std::unordered_map<std::string, std::vector<std::size_t>> exact_;
  std::unordered_map<std::string, std::vector<std::size_t>> stems_;
  std::size_t longest_stem_ = 0;  // bytes
};

// Counts per category over word tokens. Every category is present in the
// result, including those with zero matches.
std::map<std::string, std::size_t> match_categories(std::span<const Token> tokens,
                                                     const CategoryLexicon& lex);

// Word frequencies per million tokens, case-insensitive.
class FrequencyTable {
 public:
  std::string corpus_name;

  // TSV `word<TAB>freq_per_million`; optional `@corpus <name>` line; `#`
  // comments. Entries differing only in case are summed.
  static FrequencyTable load(const std::filesystem::path& file);
  static FrequencyTable parse(std::string_view text, const std::string& source = {});

  void add(std::string_view word, double per_million);
  // 0 for unknown words.
  double frequency(std::string_view word) const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::unordered_map<std::string, double> table_;
};

// Mean frequency over word tokens; nullopt when there are none.
std::optional<double> fluency_doc(std::span<const Token> tokens, const FrequencyTable& ft);
// Mean frequency of the three rarest distinct lowercased word types (ties
// broken by the word itself); nullopt when there are no word tokens.
std::optional<double> fluency_least3(std::span<const Token> tokens,
                                     const FrequencyTable& ft);

class SentimentLexicon {
 public:
  // TSV `term<TAB>strength` with strength in [-5,-2] or [2,5]; terms may be
  // stems ending in `*`. A `%boosters` block holds `word<TAB>shift` lines with
  // shift in {-2,-1,1,2}; a `%negators` block holds one word per line;
  // `%terms` returns to term lines. `#` comments.
  static SentimentLexicon load(const std::filesystem::path& file);
  static SentimentLexicon parse(std::string_view text, const std::string& source = {});

  void add_term(std::string_view term, int strength);
  void add_booster(std::string_view word, int shift);
  void add_negator(std::string_view word);

  // Exact term first, then the longest matching stem.
  std::optional<int> strength(std::string_view lower_word) const;
  std::optional<int> booster(std::string_view lower_word) const;
  bool is_negator(std::string_view lower_word) const;
  std::size_t term_count() const noexcept { return exact_.size() + stems_.size(); }

 private:
  std::unordered_map<std::string, int> exact_;
  std::unordered_map<std::string, int> stems_;
  std::size_t longest_stem_ = 0;
  std::unordered_map<std::string, int> boosters_;
  std::unordered_set<std::string> negators_;
};

struct SentimentScore {
  double negative = -1.0;  // in [-5, -1]
  double positive = 1.0;   // in [1, 5]
};

// Per-sentence scores under booster and negation rules, averaged over
// sentences. Empty input yields the neutral defaults.
SentimentScore sentiment_strength(std::span<const Sentence> sentences,
                                  const SentimentLexicon& sl);
SentimentScore sentence_sentiment(std::span<const Token> tokens,
                                  const SentimentLexicon& sl);

class StopList {
 public:
  StopList() = default;
  explicit StopList(std::unordered_set<std::string> words);

  // One word per line or comma-separated; `#` comments; stored lowercased.
  static StopList load(const std::filesystem::path& file);
  static StopList parse(std::string_view text);

  bool contains(std::string_view lower_word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Lowercased, quote-normalized form used for every dictionary lookup.
std::string lookup_key(const Token& token);

}  // namespace newsstyle
