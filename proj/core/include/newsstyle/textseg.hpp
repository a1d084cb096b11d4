#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace newsstyle {

enum class TokenKind { word, number, punctuation, symbol };

const char* to_string(TokenKind kind);

// A slice of the source text. `start`/`end` are byte offsets into the
// original UTF-8 input, so `text == input.substr(start, end - start)`.
struct Token {
  std::string text;
  // `text` with curly quotes and apostrophes mapped to ASCII.
  std::string norm;
  TokenKind kind = TokenKind::word;
  std::size_t start = 0;
  std::size_t end = 0;
  bool is_all_caps = false;

  bool is_word() const noexcept { return kind == TokenKind::word; }
  bool is_punct() const noexcept { return kind == TokenKind::punctuation; }
  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;

  bool operator==(const Sentence&) const = default;
};

// Abbreviations that do not end a sentence ("Mr.", "U.S.", "Jan.").
// Entries are stored lowercased with their trailing period.
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(std::unordered_set<std::string> entries);

  // One entry per line, `#` starts a comment.
  static AbbreviationList load(const std::filesystem::path& file);
  static AbbreviationList parse(std::string_view text,
                                const std::string& source = {});
  // The list shipped in resources/abbreviations.txt, compiled in.
  static const AbbreviationList& builtin();

  bool contains(std::string_view token_with_period) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Splits `text` into word, number, punctuation and symbol tokens.
// Clitics are split treebank-style: "don't" -> "do" + "n't".
std::vector<Token> tokenize(std::string_view text);

// Sentence boundaries fall after `.`, `!` or `?` (plus any closing quotes or
// brackets) when followed by whitespace and a capital letter, or by the end
// of the text, unless the preceding word is a listed abbreviation.
std::vector<Sentence> split_sentences(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::builtin());

// Same as above on an existing token sequence taken from `text`.
std::vector<Sentence> split_sentences(
    std::string_view text, std::vector<Token> tokens,
    const AbbreviationList& abbreviations = AbbreviationList::builtin());

// Builds a token for text that was segmented elsewhere (pre-tagged input,
// training corpora). The span is [offset, offset + text.size()).
Token token_from_text(std::string_view text, std::size_t offset = 0);

// Vowel-group syllable heuristic, minimum 1.
int count_syllables(std::string_view word);

// Gunning Fog "complex word": three or more syllables, not a proper noun,
// no hyphen.
bool is_complex_word(std::string_view word, std::string_view tag);

}  // namespace newsstyle
