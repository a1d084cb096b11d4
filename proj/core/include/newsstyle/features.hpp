#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsstyle/corpus.hpp"
#include "newsstyle/lexicon.hpp"
#include "newsstyle/postag.hpp"
#include "newsstyle/textseg.hpp"

namespace newsstyle {

enum class Part { title, body };

const char* to_string(Part part);
std::optional<Part> parse_part(std::string_view text);

// The fixed catalog in report order: complexity, stylistic, psychological.
const std::vector<std::string>& feature_catalog();
const std::vector<std::string>& complexity_features();
const std::vector<std::string>& stylistic_features();
const std::vector<std::string>& psychological_features();
// Catalog features that are dictionary-category counts. Each has a
// per-100-words companion named `<feature>_pct`.
const std::vector<std::string>& category_features();
bool is_catalog_feature(std::string_view name);
// Catalog plus the `_pct` companions.
bool is_known_feature(std::string_view name);

// nullopt marks a feature whose preconditions failed.
using FeatureMap = std::map<std::string, std::optional<double>>;

struct FeatureVector {
  std::string doc_id;
  Label label = Label::real;
  Part part = Part::body;
  FeatureMap values;

  std::optional<double> get(const std::string& name) const;
  std::size_t undefined_count() const;
};

// Everything downstream of segmentation for one document part.
struct PartAnalysis {
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  std::vector<TaggedSentence> tagged;
  std::vector<ChunkTree> trees;
};

struct Resources {
  AbbreviationList abbreviations;
  TaggerModel tagger;
  CategoryLexicon categories;
  FrequencyTable frequency;
  SentimentLexicon sentiment;
  StopList stopwords;

  // Reads abbreviations.txt, tagger.model, categories.dic, frequency.tsv,
  // sentiment.tsv and stopwords.txt from `dir`.
  static Resources load(const std::filesystem::path& dir);
};

// Segments, tags and chunks `text`. A title is always a single sentence.
PartAnalysis analyze_part(std::string_view text, Part part, const Resources& res);
// Builds an analysis from externally tagged sentences, chunked internally.
PartAnalysis analysis_from_tagged(std::vector<TaggedSentence> tagged);

FeatureMap extract_complexity(const PartAnalysis& a, const FrequencyTable& ft);
FeatureMap extract_stylistic(const PartAnalysis& a, const StopList& stoplist,
                             const CategoryLexicon& lex);
FeatureMap extract_psychological(const PartAnalysis& a, const CategoryLexicon& lex,
                                 const SentimentLexicon& sl);

// Union of the three extractors over exactly the catalog. An empty part
// yields a vector of undefined values.
FeatureVector extract_all(const Document& doc, Part part, const Resources& res);
FeatureVector extract_all(const Document& doc, Part part, const PartAnalysis& a,
                          const Resources& res);

// Adds `<feature>_pct` = 100 * count / WC for every category feature.
void add_percentages(FeatureVector& v);

// Dense matrix; rows follow corpus order.
struct FeatureRow {
  std::string doc_id;
  Label label = Label::real;
  Part part = Part::body;
  std::vector<std::optional<double>> values;

  bool operator==(const FeatureRow&) const = default;
};

struct FeatureMatrix {
  std::vector<std::string> features;
  std::vector<FeatureRow> rows;

  // Index of `name` in `features`; throws Error when absent.
  std::size_t column(std::string_view name) const;
  std::vector<std::optional<double>> column_values(std::string_view name) const;
  bool operator==(const FeatureMatrix&) const = default;
};

// Columns are `features` in the given order; each vector must define all
// of them.
FeatureMatrix make_matrix(std::span<const FeatureVector> vectors,
                          const std::vector<std::string>& features);

// CSV with header `doc_id,label,part,<features>`; undefined cells are `NA`;
// reals use shortest round-trip formatting.
void write_matrix(const FeatureMatrix& m, std::ostream& out);
void write_matrix(const FeatureMatrix& m, const std::filesystem::path& file);
FeatureMatrix read_matrix(std::istream& in, const std::string& source = {});
FeatureMatrix read_matrix(const std::filesystem::path& file);

// Shortest decimal form that parses back to the same double.
std::string format_real(double v);

}  // namespace newsstyle
