#include <gtest/gtest.h>

#include <fstream>
#include <string>
#include <vector>

#include "newsstyle/error.hpp"
#include "newsstyle/postag.hpp"
#include "newsstyle/textseg.hpp"
#include "test_env.hpp"

using namespace newsstyle;

namespace {

TaggedSentence make(const std::vector<std::pair<std::string, std::string>>& pairs) {
  TaggedSentence s;
  std::size_t offset = 0;
  for (const auto& [word, t] : pairs) {
    s.tokens.push_back({token_from_text(word, offset), t});
    offset += word.size() + 1;
  }
  return s;
}

std::size_t count_leaves(const TreeNode& n) {
  if (n.is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& c : n.children) total += count_leaves(c);
  return total;
}

std::size_t count_label(const TreeNode& n, const std::string& label) {
  std::size_t total = n.label == label ? 1 : 0;
  for (const auto& c : n.children) total += count_label(c, label);
  return total;
}

void collect_leaf_tokens(const TreeNode& n, std::vector<std::size_t>& out) {
  if (n.is_leaf()) {
    out.push_back(n.token);
    return;
  }
  for (const auto& c : n.children) collect_leaf_tokens(c, out);
}

}  // namespace

TEST(Chunk, NounVerbPunct) {
  const auto tree = chunk(make({{"Dogs", "NN"}, {"bark", "VB"}, {".", "."}}));
  EXPECT_EQ(to_bracketed(tree), "(S (NP Dogs) (VP bark) .)");
  ASSERT_EQ(tree.children.size(), 3u);
  EXPECT_EQ(tree.children[0].label, "NP");
  EXPECT_EQ(tree.children[1].label, "VP");
  EXPECT_TRUE(tree.children[2].is_leaf());
  EXPECT_EQ(tree_metrics(tree), (TreeMetrics{2, 1, 1, 1}));
}

TEST(Chunk, AllPunctuationIsFlat) {
  const auto tree = chunk(make({{"!", "."}, {",", ","}, {"?", "."}}));
  ASSERT_EQ(tree.children.size(), 3u);
  for (const auto& c : tree.children) EXPECT_TRUE(c.is_leaf());
  EXPECT_EQ(tree_metrics(tree), (TreeMetrics{1, 0, 0, 0}));
}

TEST(Chunk, AdjectiveNounPhrase) {
  const auto tree = chunk(make({{"the", "DT"}, {"big", "JJ"}, {"dog", "NN"}, {"ran", "VBD"}}));
  ASSERT_EQ(tree.children.size(), 2u);
  EXPECT_EQ(tree.children[0].label, "NP");
  EXPECT_EQ(tree.children[0].children.size(), 3u);
  EXPECT_EQ(tree.children[1].label, "VP");
  EXPECT_EQ(tree.children[1].children.size(), 1u);
}

TEST(Chunk, VerbPhraseContainingNounPhrase) {
  const auto tree = chunk(make({{"He", "PRP"}, {"saw", "VBD"}, {"the", "DT"}, {"cat", "NN"}}));
  EXPECT_EQ(to_bracketed(tree), "(S (NP He) (VP saw (NP the cat)))");
  const auto m = tree_metrics(tree);
  EXPECT_EQ(m.vp_depth, 2);
  EXPECT_EQ(m.vp_count, 1);
}

TEST(Chunk, PrepositionalAttachment) {
  const auto tree =
      chunk(make({{"went", "VBD"}, {"to", "IN"}, {"the", "DT"}, {"park", "NN"}}));
  EXPECT_EQ(to_bracketed(tree), "(S (VP went (PP to (NP the park))))");
  EXPECT_EQ(tree_metrics(tree).depth, 4);
}

TEST(Chunk, PluralAndComparativeVariants) {
  const auto tree = chunk(make({{"bigger", "JJR"}, {"boats", "NNS"}, {"sank", "VBD"}}));
  EXPECT_EQ(to_bracketed(tree), "(S (NP bigger boats) (VP sank))");
}

TEST(Chunk, EmptySentence) {
  const auto tree = chunk(TaggedSentence{});
  EXPECT_TRUE(tree.children.empty());
  EXPECT_EQ(count_leaves(tree), 1u);
}

TEST(Chunk, LeavesCoverTokensInOrder) {
  const auto& res = nstest::resources();
  const std::vector<std::string> texts = {
      "The quick brown fox jumps over the lazy dog near the river bank .",
      "Officials said on Tuesday that the plan , announced in May , had failed .",
      "WOW ! They really did it again , didn't they ?",
      "Prices rose 3.5 percent in the quarter ending June 30 ."};
  for (const auto& text : texts) {
    const auto tagged = tag(tokenize(text), res.tagger);
    const auto tree = chunk(tagged);
    std::vector<std::size_t> leaves;
    collect_leaf_tokens(tree, leaves);
    ASSERT_EQ(leaves.size(), tagged.size()) << text;
    for (std::size_t i = 0; i < leaves.size(); ++i) EXPECT_EQ(leaves[i], i) << text;
    const auto m = tree_metrics(tree);
    EXPECT_GE(m.depth, 1);
    EXPECT_EQ(static_cast<std::size_t>(m.vp_count), count_label(tree, "VP"));
  }
}

TEST(TreeMetrics, FunctionSuffixedLabels) {
  const auto tree = parse_bracketed(
      "(S (NP-SBJ (DT the) (NN dog)) (VP (VBD ran) (PP (IN to) (NP (NN town)))))");
  EXPECT_EQ(tree_metrics(tree), (TreeMetrics{5, 2, 4, 1}));
}

TEST(ParseBracketed, RoundTrip) {
  const std::string text = "(S (NP (DT the) (NN dog)) (VP (VBD ran)))";
  const auto tree = parse_bracketed(text);
  EXPECT_EQ(to_bracketed(tree), text);
  EXPECT_EQ(count_leaves(tree), 3u);
}

TEST(ParseBracketed, Malformed) {
  EXPECT_THROW(parse_bracketed("(S (NP dog)"), ParseError);
  EXPECT_THROW(parse_bracketed("(S (NP dog)))"), ParseError);
  EXPECT_THROW(parse_bracketed(""), ParseError);
}

TEST(ReadBracketedTrees, OnePerLine) {
  const auto dir = nstest::fresh_temp_dir("trees");
  std::ofstream(dir / "t.trees") << "(S (NP (NN a)))\n\n(S (VP (VB go)))\n";
  const auto trees = read_bracketed_trees(dir / "t.trees");
  ASSERT_EQ(trees.size(), 2u);
  EXPECT_EQ(tree_metrics(trees[1]).vp_count, 1);
}
