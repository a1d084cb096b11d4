#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace newsstyle {

enum class Label { real, fake, satire };

inline constexpr std::array<Label, 3> kAllLabels = {Label::real, Label::fake,
                                                    Label::satire};

// Lowercase directory/CSV form: "real", "fake", "satire".
const char* to_string(Label label);
// Capitalized form used in ordering reports: "Real", "Fake", "Satire".
const char* display_name(Label label);
std::optional<Label> parse_label(std::string_view text);

// Labels a data set may contain: 1 -> {real, fake}, 2 -> all three,
// 3 -> {real, satire}.
std::vector<Label> allowed_labels(int dataset_id);

struct Document {
  std::string id;
  int dataset_id = 0;
  std::string source;
  Label label = Label::real;
  std::string title;
  std::string body;
};

struct Manifest {
  int dataset_id = 0;
  std::array<std::size_t, 3> counts{};

  std::size_t count(Label label) const {
    return counts[static_cast<std::size_t>(label)];
  }
  std::size_t total() const { return counts[0] + counts[1] + counts[2]; }
  bool operator==(const Manifest&) const = default;
};

// Immutable after load; documents are ordered by id.
struct Corpus {
  std::vector<Document> documents;
  Manifest manifest;
};

struct LoadIssue {
  std::filesystem::path file;
  std::string message;
};

struct LoadResult {
  Corpus corpus;
  std::vector<LoadIssue> issues;
};

// Reads `<root>/<label>/<id>.txt` files (title on the first line, blank line,
// body) plus optional `<id>.meta` sidecars with `source=<name>` lines.
// Throws StructuralError when the root is missing or a required label
// directory is absent; per-file problems are collected in `issues`.
LoadResult load_corpus(const std::filesystem::path& root, int dataset_id);

// Parses one article file's contents.
struct ParsedArticle {
  std::string title;
  std::string body;
};
ParsedArticle parse_article(std::string_view contents);

Manifest count_labels(int dataset_id, std::span<const Document> documents);

struct ValidationReport {
  std::vector<std::string> duplicate_ids;
  std::vector<std::string> empty_bodies;
  std::vector<std::string> illegal_labels;
  std::vector<std::string> zero_sentence_bodies;
  bool manifest_mismatch = false;

  bool clean() const {
    return duplicate_ids.empty() && empty_bodies.empty() &&
           illegal_labels.empty() && zero_sentence_bodies.empty() &&
           !manifest_mismatch;
  }
};

ValidationReport validate_corpus(const Corpus& corpus);

struct DocumentGroup {
  Label label;
  std::vector<const Document*> documents;
};

// One group per requested label, in request order. Throws Error naming the
// label when the corpus has no document carrying it.
std::vector<DocumentGroup> split_groups(const Corpus& corpus,
                                        std::span<const Label> labels);

// Converts a release laid out as `<Label>/<name>.txt` bodies with titles in
// `<Label>_titles/<name>.txt` into the directory-per-label layout under
// `dst_root`. Returns the number of articles written.
std::size_t import_title_body_layout(const std::filesystem::path& src_root,
                                     const std::filesystem::path& dst_root);

}  // namespace newsstyle
