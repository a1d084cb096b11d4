#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace newsstyle::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kInputError = 1, kDegenerate = 2 };

struct IngestConfig {
  std::filesystem::path corpus;
  int dataset_id = 0;
  std::filesystem::path out;
};

struct ExtractConfig {
  std::filesystem::path corpus;
  int dataset_id = 0;
  std::string part = "body";
  std::filesystem::path resources;
  std::filesystem::path out;
  // Optional `<id>.<part>.tags` (token<TAB>tag) and `<id>.<part>.trees`
  // (bracketed) overrides for the internal tagger and chunker.
  std::optional<std::filesystem::path> tags_dir;
  std::optional<std::filesystem::path> trees_dir;
  bool with_pct = false;
  unsigned jobs = 1;
};

struct AnalyzeConfig {
  std::filesystem::path matrix;
  std::vector<std::string> groups;  // empty: every label present
  int dataset_id = 0;
  double alpha = 0.05;
  double bold_threshold = 0.005;
  bool bonferroni = false;
  bool strict = false;
  std::filesystem::path out;
  unsigned jobs = 1;
};

struct ClassifyConfig {
  std::filesystem::path matrix;
  int dataset_id = 0;
  std::string pair = "fake:real";
  std::optional<std::string> preset;
  std::optional<std::size_t> top_k;
  std::size_t folds = 5;
  double C = 1.0;
  double tol = 1e-4;
  int max_epochs = 1000;
  std::uint64_t seed = 1;
  double alpha = 0.05;
  // Permutes the labels before cross-validation; accuracy should fall to
  // the majority baseline.
  bool shuffle_labels = false;
  bool strict = false;
  std::filesystem::path out;
  unsigned jobs = 1;
};

struct ReportConfig {
  std::vector<std::filesystem::path> matrices;
  std::vector<std::filesystem::path> analyses;
  std::vector<std::filesystem::path> cv_reports;
  std::vector<std::string> ci_features = {"all_caps", "NNP", "per_stop"};
  double level = 0.95;
  std::filesystem::path out;
};

struct ImportConfig {
  std::filesystem::path src;
  std::filesystem::path out;
};

struct TrainTaggerConfig {
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> closed_class;
  int epochs = 5;
  std::uint64_t seed = 1;
  // Every n-th sentence is held out for an accuracy estimate; 0 disables.
  int heldout_every = 0;
  std::filesystem::path out;
};

int cmd_ingest(const IngestConfig& c);
int cmd_extract(const ExtractConfig& c);
int cmd_analyze(const AnalyzeConfig& c);
int cmd_classify(const ClassifyConfig& c);
int cmd_report(const ReportConfig& c);
int cmd_import(const ImportConfig& c);
int cmd_train_tagger(const TrainTaggerConfig& c);

// Directory searched when --resources is not given: $NEWSSTYLE_RESOURCES,
// then the directory the build or install placed the resources in.
std::filesystem::path default_resource_dir();

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& file);
std::string sha256_hex(std::string_view data);

}  // namespace newsstyle::cli
