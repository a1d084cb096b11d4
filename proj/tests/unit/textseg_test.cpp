#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "newsstyle/error.hpp"
#include "newsstyle/textseg.hpp"

using namespace newsstyle;

namespace {

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace

TEST(Tokenize, SimpleSentence) {
  const auto tokens = tokenize("Dogs bark.");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].text, "Dogs");
  EXPECT_EQ(tokens[0].kind, TokenKind::word);
  EXPECT_EQ(tokens[1].text, "bark");
  EXPECT_EQ(tokens[1].kind, TokenKind::word);
  EXPECT_EQ(tokens[2].text, ".");
  EXPECT_EQ(tokens[2].kind, TokenKind::punctuation);
}

TEST(Tokenize, EmptyText) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("  \n\t ").empty());
}

TEST(Tokenize, NegativeClitic) {
  EXPECT_EQ(texts(tokenize("don't")), (std::vector<std::string>{"do", "n't"}));
}

TEST(Tokenize, CliticTable) {
  EXPECT_EQ(texts(tokenize("we'll I'm it's they're I've she'd")),
            (std::vector<std::string>{"we", "'ll", "I", "'m", "it", "'s", "they", "'re",
                                      "I", "'ve", "she", "'d"}));
}

TEST(Tokenize, CurlyApostropheNormalized) {
  const auto tokens = tokenize("don’t");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[1].text, "n’t");
  EXPECT_EQ(tokens[1].norm, "n't");
}

TEST(Tokenize, AllCapsFlag) {
  const auto tokens = tokenize("NYPD Blows");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_TRUE(tokens[0].is_all_caps);
  EXPECT_FALSE(tokens[1].is_all_caps);
}

TEST(Tokenize, SingleCapitalIsNotAllCaps) {
  const auto tokens = tokenize("I A");
  for (const auto& t : tokens) EXPECT_FALSE(t.is_all_caps) << t.text;
}

TEST(Tokenize, NumbersAndSymbols) {
  const auto tokens = tokenize("3.14 1,000 $5");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].kind, TokenKind::number);
  EXPECT_EQ(tokens[1].text, "1,000");
  EXPECT_EQ(tokens[1].kind, TokenKind::number);
  EXPECT_EQ(tokens[2].kind, TokenKind::symbol);
  EXPECT_EQ(tokens[3].kind, TokenKind::number);
}

TEST(Tokenize, SpansAreByteOffsets) {
  const std::string text = "Café “ok”.";
  for (const auto& t : tokenize(text))
    EXPECT_EQ(text.substr(t.start, t.end - t.start), t.text);
}

TEST(Tokenize, DottedAcronymStaysWhole) {
  const auto tokens = tokenize("The U.S. Army");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].text, "U.S.");
}

TEST(SplitSentences, TwoSentences) {
  EXPECT_EQ(split_sentences("The cat sat. The dog ran.").size(), 2u);
}

TEST(SplitSentences, AbbreviationDoesNotEndSentence) {
  EXPECT_EQ(split_sentences("Mr. Smith left.").size(), 1u);
  EXPECT_EQ(split_sentences("Dr. Who met Sen. Ann Lee.").size(), 1u);
}

TEST(SplitSentences, NoTerminator) {
  const auto s = split_sentences("no terminator here");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].tokens.size(), 3u);
}

TEST(SplitSentences, LowercaseContinuationIsNotABoundary) {
  EXPECT_EQ(split_sentences("It cost 5 p.m. sharp. then more").size(), 1u);
}

TEST(SplitSentences, QuestionExclamationRun) {
  const auto s = split_sentences("What?! Yes.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].tokens.back().text, "!");
}

TEST(SplitSentences, OpeningQuoteStartsSentence) {
  EXPECT_EQ(split_sentences("He left. \"Why?\" she asked.").size(), 2u);
}

TEST(SplitSentences, EveryTokenInExactlyOneSentence) {
  const std::string text = "A b. C d! E f? \"G h.\" i j";
  const auto tokens = tokenize(text);
  std::vector<Token> flat;
  for (const auto& s : split_sentences(text))
    flat.insert(flat.end(), s.tokens.begin(), s.tokens.end());
  EXPECT_EQ(flat, tokens);
}

TEST(SplitSentences, IndicesAreSequential) {
  const auto s = split_sentences("One. Two. Three.");
  ASSERT_EQ(s.size(), 3u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].index, i);
}

TEST(AbbreviationList, ParseCommentsAndCase) {
  const auto list = AbbreviationList::parse("# titles\nMr.\n  Gov  # no period\n\n");
  EXPECT_EQ(list.size(), 2u);
  EXPECT_TRUE(list.contains("mr."));
  EXPECT_TRUE(list.contains("GOV."));
  EXPECT_FALSE(list.contains("mrs."));
}

TEST(AbbreviationList, WhitespaceInsideEntryIsError) {
  try {
    AbbreviationList::parse("Mr.\ne. g.\n", "abbr.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(AbbreviationList, CustomListControlsSplitting) {
  const auto none = AbbreviationList::parse("");
  EXPECT_EQ(split_sentences("Mr. Smith left.", none).size(), 2u);
}

TEST(CountSyllables, Examples) {
  EXPECT_EQ(count_syllables("cat"), 1);
  EXPECT_EQ(count_syllables("make"), 1);
  EXPECT_EQ(count_syllables("beautiful"), 3);
}

TEST(CountSyllables, MinimumOne) {
  EXPECT_EQ(count_syllables("rhythm"), 1);
  EXPECT_EQ(count_syllables("the"), 1);
  EXPECT_EQ(count_syllables("x"), 1);
}

TEST(CountSyllables, SilentERequiresPrecedingConsonant) {
  EXPECT_EQ(count_syllables("agree"), 2);
}

TEST(IsComplexWord, Examples) {
  EXPECT_TRUE(is_complex_word("beautiful", "JJ"));
  EXPECT_FALSE(is_complex_word("Washington", "NNP"));
  EXPECT_FALSE(is_complex_word("cat", "NN"));
}

TEST(IsComplexWord, HyphenatedExcluded) {
  EXPECT_FALSE(is_complex_word("well-established", "JJ"));
}

TEST(TokenFromText, Classifies) {
  const auto t = token_from_text("NYPD", 7);
  EXPECT_EQ(t.start, 7u);
  EXPECT_EQ(t.end, 11u);
  EXPECT_TRUE(t.is_all_caps);
  EXPECT_EQ(token_from_text("35").kind, TokenKind::number);
}
