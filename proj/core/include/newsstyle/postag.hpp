#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "newsstyle/textseg.hpp"

namespace newsstyle {

// Penn Treebank tags accepted in training data and pre-tagged input.
const std::vector<std::string>& penn_tagset();
bool is_penn_tag(std::string_view tag);

struct TaggedToken {
  Token token;
  std::string tag;

  bool operator==(const TaggedToken&) const = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool operator==(const TaggedSentence&) const = default;
};

// Averaged-perceptron weights. Each feature maps to a sparse list of
// (tag index, weight) pairs sorted by tag index.
struct TaggerModel {
  static constexpr int kFormatVersion = 1;

  std::vector<std::string> tagset;  // sorted
  std::unordered_map<std::string, std::vector<std::pair<std::uint16_t, double>>>
      weights;
  // Words whose tag is forced regardless of context (closed-class list plus
  // frequent unambiguous training words). Keys are as written in the list;
  // lookups try the exact form first and then the lowercased form.
  std::unordered_map<std::string, std::string> lexical_backoff;
  std::string version;

  int tag_index(std::string_view tag) const;  // -1 when absent
  bool knows_word(std::string_view word) const;

  // Text format: header line, tagset, backoff table, feature weights.
  // Weights use shortest round-trip formatting so reloading is bit-exact.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& file) const;
  static TaggerModel load(std::istream& in, const std::string& source = {});
  static TaggerModel load(const std::filesystem::path& file);

  // Throws Error when a weight or backoff entry references an unknown tag.
  void check_invariants() const;
};

struct TrainOptions {
  int epochs = 5;
  std::uint64_t seed = 1;
  std::string version = "newsstyle-ap";
  // Closed-class words forced to a tag during training and tagging.
  std::unordered_map<std::string, std::string> closed_class;
  // Words seen at least this often with a single dominant tag (share at
  // least `backoff_purity`) are added to the backoff table. 0 disables.
  int backoff_min_count = 20;
  double backoff_purity = 0.97;
};

// Greedy averaged perceptron. Deterministic for a fixed seed.
TaggerModel train_tagger(std::span<const TaggedSentence> annotated,
                         const TrainOptions& options);

// Tags one sentence left to right.
TaggedSentence tag(const Sentence& sentence, const TaggerModel& model);
TaggedSentence tag(std::span<const Token> tokens, const TaggerModel& model);

// Reads `token<TAB>tag` lines with blank lines between sentences.
std::vector<TaggedSentence> load_pretagged(const std::filesystem::path& file);
std::vector<TaggedSentence> parse_pretagged(std::string_view text,
                                            const std::string& source = {});

// `word<TAB>TAG` lines; `#` comments.
std::unordered_map<std::string, std::string> load_closed_class(
    const std::filesystem::path& file);

// Token-level accuracy of `model` on gold sentences.
double tagging_accuracy(std::span<const TaggedSentence> gold,
                        const TaggerModel& model);

// ---------------------------------------------------------------------------
// Shallow phrase structure

// Generic ordered tree. Leaves carry token text as their label; for chunk
// trees `token` is the index of the token in the sentence.
struct TreeNode {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::string label;
  std::vector<TreeNode> children;
  std::size_t token = npos;

  bool is_leaf() const noexcept { return children.empty(); }
  bool operator==(const TreeNode&) const = default;
};

using ChunkTree = TreeNode;

// Pattern grammar, longest match at each position:
//   NP := (DT|PRP$)? JJ* (NN|NNP|PRP|CD)+
//   VP := RB* (VB|VBD|VBG|VBN|VBP|VBZ)+ (NP|PP)?
//   PP := IN NP
// Plural and comparative variants share their base class (NNS with NN,
// NNPS with NNP, JJR/JJS with JJ, RBR/RBS with RB). Unmatched tokens hang
// directly under the root as leaves.
ChunkTree chunk(const TaggedSentence& sentence);

struct TreeMetrics {
  int depth = 0;
  int np_depth = 0;
  int vp_depth = 0;
  int vp_count = 0;

  bool operator==(const TreeMetrics&) const = default;
};

// Heights are counted in edges. Labels match "NP"/"VP" exactly or with a
// function suffix ("NP-SBJ").
TreeMetrics tree_metrics(const TreeNode& tree);

// Bracketed trees: "(S (NP (DT the) (NN dog)) (VP (VBD ran)))".
TreeNode parse_bracketed(std::string_view text, const std::string& source = {},
                         std::size_t line = 0);
// One tree per non-empty line.
std::vector<TreeNode> read_bracketed_trees(const std::filesystem::path& file);
std::string to_bracketed(const TreeNode& tree);

}  // namespace newsstyle
