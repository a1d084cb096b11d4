#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "newsstyle/features.hpp"
#include "newsstyle/textseg.hpp"
#include "test_env.hpp"

using namespace newsstyle;

namespace {

const char* const kFakeTitle =
    "BREAKING BOMBSHELL: NYPD Blows Whistle on New Hillary Emails: Money Laundering, Sex "
    "Crimes with Children, Child Exploitation, Pay to Play, Perjury";
const char* const kRealTitle =
    "Preexisting Conditions and Republican Plans to Replace Obamacare";

Document document(std::string title, std::string body) {
  Document d;
  d.id = "doc1";
  d.dataset_id = 2;
  d.label = Label::fake;
  d.title = std::move(title);
  d.body = std::move(body);
  return d;
}

TaggedSentence tagged(const std::vector<std::pair<std::string, std::string>>& pairs) {
  TaggedSentence s;
  std::size_t offset = 0;
  for (const auto& [word, t] : pairs) {
    s.tokens.push_back({token_from_text(word, offset), t});
    offset += word.size() + 1;
  }
  return s;
}

double value(const FeatureMap& m, const std::string& name) {
  const auto it = m.find(name);
  EXPECT_NE(it, m.end()) << name;
  if (it == m.end() || !it->second) {
    ADD_FAILURE() << name << " undefined";
    return NAN;
  }
  return *it->second;
}

}  // namespace

TEST(Catalog, SixtyThreeUniqueNames) {
  const auto& cat = feature_catalog();
  EXPECT_EQ(cat.size(), 63u);
  EXPECT_EQ(std::set<std::string>(cat.begin(), cat.end()).size(), cat.size());
  EXPECT_EQ(complexity_features().size() + stylistic_features().size() +
                psychological_features().size(),
            cat.size());
}

TEST(Catalog, KnownFeatures) {
  EXPECT_TRUE(is_catalog_feature("#vps"));
  EXPECT_TRUE(is_catalog_feature("PRP$"));
  EXPECT_FALSE(is_catalog_feature("negate_pct"));
  EXPECT_TRUE(is_known_feature("negate_pct"));
  EXPECT_FALSE(is_known_feature("WC_pct"));
  for (const auto& c : category_features()) EXPECT_TRUE(is_catalog_feature(c)) << c;
}

TEST(Part, ParseAndPrint) {
  EXPECT_EQ(parse_part("title"), Part::title);
  EXPECT_EQ(parse_part("body"), Part::body);
  EXPECT_FALSE(parse_part("lede").has_value());
  EXPECT_STREQ(to_string(Part::title), "title");
}

TEST(ExtractComplexity, ReadabilityByHand) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("The cat sat. The dog ran.", Part::body, res);
  const auto m = extract_complexity(a, res.frequency);
  // 6 words, 2 sentences, 6 syllables, no complex words.
  EXPECT_NEAR(value(m, "FK"), 0.39 * 3 + 11.8 * 1 - 15.59, 1e-12);
  EXPECT_NEAR(value(m, "FK"), -2.62, 1e-12);
  EXPECT_NEAR(value(m, "GI"), 1.2, 1e-12);
  EXPECT_NEAR(value(m, "SMOG"), 3.1291, 1e-12);
  EXPECT_NEAR(value(m, "avg_wlen"), 3.0, 1e-12);
}

TEST(ExtractComplexity, TypeTokenRatio) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("the cat and the dog", Part::body, res);
  EXPECT_DOUBLE_EQ(value(extract_complexity(a, res.frequency), "TTR"), 0.8);
}

TEST(ExtractComplexity, ComplexWordsUseTags) {
  const auto a = analysis_from_tagged({tagged({{"Beautiful", "JJ"}, {"Washington", "NNP"}})});
  FrequencyTable ft;
  const auto m = extract_complexity(a, ft);
  // One complex word of two; "Washington" is excluded as a proper noun.
  EXPECT_NEAR(value(m, "GI"), 0.4 * (2.0 + 50.0), 1e-12);
  // Both words have three syllables.
  EXPECT_NEAR(value(m, "SMOG"), 1.0430 * std::sqrt(60.0) + 3.1291, 1e-12);
}

TEST(ExtractComplexity, ZeroSentencesUndefined) {
  const auto m = extract_complexity(PartAnalysis{}, nstest::resources().frequency);
  for (const auto& name : complexity_features()) {
    ASSERT_TRUE(m.count(name)) << name;
    EXPECT_FALSE(m.at(name).has_value()) << name;
  }
}

TEST(ExtractComplexity, TreeDepthMedians) {
  const auto a = analysis_from_tagged({tagged({{"Dogs", "NN"}, {"bark", "VB"}, {".", "."}}),
                                       tagged({{"He", "PRP"}, {"saw", "VBD"}, {"the", "DT"},
                                               {"cat", "NN"}})});
  const auto m = extract_complexity(a, FrequencyTable{});
  EXPECT_DOUBLE_EQ(value(m, "med_depth"), 2.5);
  EXPECT_DOUBLE_EQ(value(m, "med_np_depth"), 1.0);
  EXPECT_DOUBLE_EQ(value(m, "med_vp_depth"), 1.5);
}

TEST(ExtractStylistic, StopWordPercentage) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("the cat sat on the mat", Part::body, res);
  const auto stop = StopList::parse("the\non\n");
  EXPECT_DOUBLE_EQ(value(extract_stylistic(a, stop, res.categories), "per_stop"), 50.0);
}

TEST(ExtractStylistic, TagCountsAndPhrases) {
  const auto a = analysis_from_tagged(
      {tagged({{"He", "PRP"}, {"saw", "VBD"}, {"the", "DT"}, {"cat", "NN"}, {"!", "."}})});
  const auto m = extract_stylistic(a, StopList{}, CategoryLexicon{});
  EXPECT_DOUBLE_EQ(value(m, "PRP"), 1);
  EXPECT_DOUBLE_EQ(value(m, "VBD"), 1);
  EXPECT_DOUBLE_EQ(value(m, "DT"), 1);
  EXPECT_DOUBLE_EQ(value(m, "NN"), 1);
  EXPECT_DOUBLE_EQ(value(m, "NNP"), 0);
  EXPECT_DOUBLE_EQ(value(m, "#vps"), 1);
  EXPECT_DOUBLE_EQ(value(m, "exclaim"), 1);
  EXPECT_DOUBLE_EQ(value(m, "allPunc"), 1);
  EXPECT_DOUBLE_EQ(value(m, "WC"), 4);
  EXPECT_DOUBLE_EQ(value(m, "WPS"), 4);
}

TEST(ExtractStylistic, NoWordsUndefinedRatios) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("!!! ???", Part::body, res);
  const auto m = extract_stylistic(a, res.stopwords, res.categories);
  EXPECT_DOUBLE_EQ(value(m, "WC"), 0);
  EXPECT_FALSE(m.at("WPS").has_value());
  EXPECT_FALSE(m.at("per_stop").has_value());
}

TEST(ExtractStylistic, Quotes) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("He said \"no\" and “yes”.", Part::body, res);
  EXPECT_DOUBLE_EQ(value(extract_stylistic(a, res.stopwords, res.categories), "quotes"), 4);
}

TEST(ExtractPsychological, EmptyLexiconGivesZeros) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("I certainly will never go there.", Part::body, res);
  const auto m = extract_psychological(a, CategoryLexicon{}, res.sentiment);
  for (const auto& c : psychological_features()) {
    if (c == "str_neg" || c == "str_pos") continue;
    EXPECT_DOUBLE_EQ(value(m, c), 0.0) << c;
  }
}

TEST(ExtractPsychological, CertainCount) {
  const auto& res = nstest::resources();
  const auto lex = CategoryLexicon::parse("%certain\ncertain*\nalways\n");
  const auto a = analyze_part("It is certainly true. We always win.", Part::body, res);
  EXPECT_DOUBLE_EQ(value(extract_psychological(a, lex, res.sentiment), "certain"), 2);
}

TEST(ExtractPsychological, SentimentDefaults) {
  const auto& res = nstest::resources();
  const auto a = analyze_part("The table is in the room.", Part::body, res);
  const auto m = extract_psychological(a, res.categories, SentimentLexicon{});
  EXPECT_DOUBLE_EQ(value(m, "str_neg"), -1.0);
  EXPECT_DOUBLE_EQ(value(m, "str_pos"), 1.0);
}

TEST(ExtractPsychological, ZeroSentencesUndefinedSentiment) {
  const auto m = extract_psychological(PartAnalysis{}, CategoryLexicon{}, SentimentLexicon{});
  EXPECT_FALSE(m.at("str_neg").has_value());
  EXPECT_FALSE(m.at("str_pos").has_value());
}

TEST(ExtractAll, FakeTitleCounts) {
  const auto v = extract_all(document(kFakeTitle, "Body."), Part::title, nstest::resources());
  EXPECT_EQ(v.get("all_caps"), 3.0);
  EXPECT_EQ(v.get("WC"), 21.0);
  EXPECT_EQ(v.get("WPS"), 21.0);
}

TEST(ExtractAll, RealTitleCounts) {
  const auto v = extract_all(document(kRealTitle, "Body."), Part::title, nstest::resources());
  EXPECT_EQ(v.get("WC"), 8.0);
  EXPECT_EQ(v.get("exclaim"), 0.0);
}

TEST(ExtractAll, TitleIsOneSentence) {
  const auto a = analyze_part("Who won? Nobody knows. Really!", Part::title, nstest::resources());
  EXPECT_EQ(a.sentences.size(), 1u);
}

TEST(ExtractAll, ExactlyTheCatalog) {
  const auto v = extract_all(document("T", "Some body text here. Another one!"), Part::body,
                             nstest::resources());
  ASSERT_EQ(v.values.size(), feature_catalog().size());
  for (const auto& name : feature_catalog()) EXPECT_TRUE(v.values.count(name)) << name;
}

TEST(ExtractAll, EmptyTitleAllUndefined) {
  const auto v = extract_all(document("", "A body."), Part::title, nstest::resources());
  EXPECT_EQ(v.undefined_count(), feature_catalog().size());
}

TEST(ExtractAll, BodyFullyDefined) {
  const auto v = extract_all(
      document("T", "The senator said the bill would pass. Critics disagreed sharply."),
      Part::body, nstest::resources());
  EXPECT_EQ(v.undefined_count(), 0u);
}

TEST(ExtractAll, Deterministic) {
  const auto d = document(kFakeTitle, "Officials said on Tuesday that the plan failed. "
                                      "\"It is a disaster,\" one said!");
  const auto& res = nstest::resources();
  EXPECT_EQ(extract_all(d, Part::body, res).values, extract_all(d, Part::body, res).values);
  EXPECT_EQ(extract_all(d, Part::title, res).values, extract_all(d, Part::title, res).values);
}

TEST(ExtractAll, SentenceOrderDoesNotChangeTagCounts) {
  const auto& res = nstest::resources();
  const auto a = extract_all(document("T", "The dog ran home. She saw him."), Part::body, res);
  const auto b = extract_all(document("T", "She saw him. The dog ran home."), Part::body, res);
  for (const char* tag : {"NN", "NNP", "PRP", "DT", "VBD", "WC", "#vps"})
    EXPECT_EQ(a.get(tag), b.get(tag)) << tag;
}

TEST(AddPercentages, PerHundredWords) {
  FeatureVector v;
  for (const auto& name : feature_catalog()) v.values[name] = 0.0;
  v.values["WC"] = 40.0;
  v.values["negate"] = 2.0;
  add_percentages(v);
  EXPECT_EQ(v.get("negate_pct"), 5.0);
  EXPECT_EQ(v.values.size(), feature_catalog().size() + category_features().size());
}

TEST(AddPercentages, UndefinedWithoutWords) {
  FeatureVector v;
  for (const auto& name : feature_catalog()) v.values[name] = 0.0;
  v.values["WC"] = 0.0;
  add_percentages(v);
  EXPECT_FALSE(v.get("negate_pct").has_value());
}
