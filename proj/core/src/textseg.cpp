#include "newsstyle/textseg.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "newsstyle/error.hpp"
#include "utf8.hpp"

namespace newsstyle {

extern const char* const kBuiltinAbbreviations;

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word: return "word";
    case TokenKind::number: return "number";
    case TokenKind::punctuation: return "punct";
    case TokenKind::symbol: return "symbol";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Abbreviations

AbbreviationList::AbbreviationList(std::unordered_set<std::string> entries)
    : entries_(std::move(entries)) {}

AbbreviationList AbbreviationList::parse(std::string_view text,
                                         const std::string& source) {
  std::unordered_set<std::string> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (line.empty()) continue;
    if (line.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(source, line_no, "abbreviation contains whitespace");
    std::string entry = utf8::to_lower(utf8::normalize(line));
    if (entry.back() != '.') entry.push_back('.');
    entries.insert(std::move(entry));
  }
  return AbbreviationList(std::move(entries));
}

AbbreviationList AbbreviationList::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open abbreviation list " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), file.string());
}

const AbbreviationList& AbbreviationList::builtin() {
  static const AbbreviationList list =
      parse(kBuiltinAbbreviations, "<builtin abbreviations>");
  return list;
}

bool AbbreviationList::contains(std::string_view token_with_period) const {
  return entries_.count(utf8::to_lower(utf8::normalize(token_with_period))) > 0;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

struct Cp {
  char32_t cp;
  std::size_t pos;
  std::size_t len;
};

std::vector<Cp> decode_all(std::string_view text) {
  std::vector<Cp> cps;
  cps.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto d = utf8::decode(text, i);
    cps.push_back({d.cp, i, d.len});
    i += d.len;
  }
  return cps;
}

bool is_alnum(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2010 || cp == 0x2011; }

// Length in code points of an alphabetic segment ending just before `j`.
std::size_t segment_length(const std::vector<Cp>& cps, std::size_t begin,
                           std::size_t j) {
  std::size_t n = 0;
  while (j > begin && utf8::is_letter(cps[j - 1].cp)) {
    --j;
    ++n;
  }
  return n;
}

// Acronyms like "U.S." are kept whole: every segment is a single letter.
bool is_acronym_run(const std::vector<Cp>& cps, std::size_t begin,
                    std::size_t end) {
  for (std::size_t k = begin; k < end; ++k) {
    const bool expect_letter = (k - begin) % 2 == 0;
    if (expect_letter && !utf8::is_letter(cps[k].cp)) return false;
    if (!expect_letter && cps[k].cp != '.') return false;
  }
  return (end - begin) % 2 == 1;
}

std::size_t scan_alnum_run(const std::vector<Cp>& cps, std::size_t i) {
  const std::size_t n = cps.size();
  std::size_t j = i + 1;
  while (j < n) {
    const char32_t c = cps[j].cp;
    if (is_alnum(c)) {
      ++j;
      continue;
    }
    const bool has_next = j + 1 < n;
    const char32_t prev = cps[j - 1].cp;
    const char32_t next = has_next ? cps[j + 1].cp : 0;
    if (has_next && utf8::is_apostrophe(c) && is_alnum(prev) &&
        utf8::is_letter(next)) {
      ++j;
      continue;
    }
    if (has_next && is_hyphen(c) && is_alnum(prev) && is_alnum(next) &&
        (utf8::is_letter(prev) || utf8::is_letter(next))) {
      ++j;
      continue;
    }
    if (has_next && (c == '.' || c == ',') && utf8::is_digit(prev) &&
        utf8::is_digit(next)) {
      ++j;
      continue;
    }
    if (has_next && c == '.' && utf8::is_letter(next) &&
        segment_length(cps, i, j) == 1 && is_acronym_run(cps, i, j)) {
      ++j;
      continue;
    }
    break;
  }
  // Final period of an acronym with at least one internal period.
  if (j < n && cps[j].cp == '.' && j - i >= 3 && is_acronym_run(cps, i, j)) ++j;
  return j;
}

// Returns the code point index (relative to the run) where a clitic starts,
// or 0 when the run has none.
std::size_t clitic_split(const std::vector<Cp>& cps, std::size_t begin,
                         std::size_t end) {
  const std::size_t len = end - begin;
  auto lower_at = [&](std::size_t k) {
    return utf8::to_lower(utf8::normalize(cps[begin + k].cp));
  };
  auto ends_with = [&](std::u32string_view suffix) {
    if (len < suffix.size()) return false;
    for (std::size_t k = 0; k < suffix.size(); ++k)
      if (lower_at(len - suffix.size() + k) != suffix[k]) return false;
    return true;
  };
  if (len > 3 && ends_with(U"n't") && utf8::is_letter(cps[end - 4].cp))
    return len - 3;
  static constexpr std::array<std::u32string_view, 6> kClitics = {
      U"'s", U"'re", U"'ve", U"'ll", U"'d", U"'m"};
  for (const auto clitic : kClitics) {
    if (len > clitic.size() && ends_with(clitic)) return len - clitic.size();
  }
  return 0;
}

bool compute_all_caps(std::string_view text) {
  std::size_t length = 0;
  bool has_upper = false;
  for (std::size_t i = 0; i < text.size();) {
    const auto d = utf8::decode(text, i);
    i += d.len;
    ++length;
    if (utf8::is_lower(d.cp)) return false;
    if (utf8::is_upper(d.cp)) has_upper = true;
  }
  return length >= 2 && has_upper;
}

Token make_token(std::string_view text, const std::vector<Cp>& cps,
                 std::size_t begin, std::size_t end, TokenKind kind) {
  Token tok;
  tok.start = cps[begin].pos;
  tok.end = cps[end - 1].pos + cps[end - 1].len;
  tok.text = std::string(text.substr(tok.start, tok.end - tok.start));
  tok.norm = utf8::normalize(tok.text);
  tok.kind = kind;
  tok.is_all_caps = kind == TokenKind::word && compute_all_caps(tok.text);
  return tok;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const auto cps = decode_all(text);
  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = cps[i].cp;
    if (utf8::is_space(c)) {
      ++i;
      continue;
    }
    if (is_alnum(c)) {
      const std::size_t j = scan_alnum_run(cps, i);
      bool has_letter = false;
      for (std::size_t k = i; k < j; ++k)
        has_letter = has_letter || utf8::is_letter(cps[k].cp);
      if (!has_letter) {
        tokens.push_back(make_token(text, cps, i, j, TokenKind::number));
      } else if (const auto split = clitic_split(cps, i, j); split > 0) {
        bool head_letter = false;
        for (std::size_t k = i; k < i + split; ++k)
          head_letter = head_letter || utf8::is_letter(cps[k].cp);
        tokens.push_back(make_token(
            text, cps, i, i + split,
            head_letter ? TokenKind::word : TokenKind::number));
        tokens.push_back(make_token(text, cps, i + split, j, TokenKind::word));
      } else {
        tokens.push_back(make_token(text, cps, i, j, TokenKind::word));
      }
      i = j;
      continue;
    }
    const auto kind = utf8::is_punctuation(c) ? TokenKind::punctuation
                                              : TokenKind::symbol;
    tokens.push_back(make_token(text, cps, i, i + 1, kind));
    ++i;
  }
  return tokens;
}

Token token_from_text(std::string_view text, std::size_t offset) {
  Token tok;
  tok.text = std::string(text);
  tok.norm = utf8::normalize(text);
  tok.start = offset;
  tok.end = offset + text.size();
  bool has_letter = false, all_numeric = !text.empty();
  bool all_punct = !text.empty();
  for (std::size_t i = 0; i < text.size();) {
    const auto d = utf8::decode(text, i);
    i += d.len;
    has_letter = has_letter || utf8::is_letter(d.cp);
    if (!utf8::is_digit(d.cp) && d.cp != '.' && d.cp != ',') all_numeric = false;
    if (!utf8::is_punctuation(d.cp)) all_punct = false;
  }
  if (has_letter) {
    tok.kind = TokenKind::word;
  } else if (all_numeric && utf8::is_digit(utf8::decode(text, 0).cp)) {
    tok.kind = TokenKind::number;
  } else if (all_punct) {
    tok.kind = TokenKind::punctuation;
  } else {
    tok.kind = TokenKind::symbol;
  }
  tok.is_all_caps = tok.kind == TokenKind::word && compute_all_caps(text);
  return tok;
}

// ---------------------------------------------------------------------------
// Sentences

namespace {

bool is_terminator(const Token& t) {
  return t.is_punct() && (t.norm == "." || t.norm == "!" || t.norm == "?");
}

bool is_closer(const Token& t) {
  return t.is_punct() && (t.norm == "\"" || t.norm == "'" || t.norm == ")" ||
                          t.norm == "]" || t.norm == "}" || t.norm == "»");
}

bool is_opener(const Token& t) {
  return t.is_punct() && (t.norm == "\"" || t.norm == "'" || t.norm == "(" ||
                          t.norm == "[" || t.norm == "«" || t.norm == "`");
}

bool starts_upper(const Token& t) {
  if (t.text.empty()) return false;
  return utf8::is_upper(utf8::decode(t.text, 0).cp);
}

bool has_gap(std::string_view text, const Token& a, const Token& b) {
  for (std::size_t i = a.end; i < b.start;) {
    const auto d = utf8::decode(text, i);
    if (utf8::is_space(d.cp)) return true;
    i += d.len;
  }
  return false;
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view text,
                                      const AbbreviationList& abbreviations) {
  return split_sentences(text, tokenize(text), abbreviations);
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      std::vector<Token> tokens,
                                      const AbbreviationList& abbreviations) {
  std::vector<Sentence> sentences;
  Sentence current;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.index = sentences.size();
    sentences.push_back(std::move(current));
    current = Sentence{};
  };

  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    const Token& tok = tokens[i];
    const bool acronym_end = tok.is_word() && tok.norm.size() > 1 &&
                             tok.norm.back() == '.';
    if (!is_terminator(tok) && !acronym_end) {
      current.tokens.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }

    bool abbreviation = false;
    if (acronym_end) {
      abbreviation = abbreviations.contains(tok.norm);
    } else if (tok.norm == "." && !current.tokens.empty() &&
               current.tokens.back().is_word() &&
               current.tokens.back().end == tok.start) {
      // tokens[i - 1] has already been moved into `current`.
      abbreviation = abbreviations.contains(current.tokens.back().norm + ".");
    }

    // Absorb runs like "?!" and adjacent closing quotes or brackets.
    std::size_t k = i + 1;
    while (k < n && tokens[k].start == tokens[k - 1].end &&
           (is_terminator(tokens[k]) || is_closer(tokens[k])))
      ++k;

    bool boundary = false;
    if (k == n) {
      boundary = true;
    } else if (!abbreviation && has_gap(text, tokens[k - 1], tokens[k])) {
      const Token& next = tokens[k];
      boundary = starts_upper(next) ||
                 (is_opener(next) && k + 1 < n && starts_upper(tokens[k + 1]));
    }

    for (std::size_t m = i; m < k; ++m) current.tokens.push_back(std::move(tokens[m]));
    i = k;
    if (boundary) flush();
  }
  flush();
  return sentences;
}

// ---------------------------------------------------------------------------
// Syllables

int count_syllables(std::string_view word) {
  std::string letters;
  int groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < word.size();) {
    const auto d = utf8::decode(word, i);
    i += d.len;
    const char32_t c = utf8::to_lower(d.cp);
    if (!utf8::is_letter(c)) {
      in_group = false;
      letters.push_back(' ');
      continue;
    }
    const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' ||
                       c == 'u' || c == 'y';
    if (vowel && !in_group) ++groups;
    in_group = vowel;
    letters.push_back(c < 0x80 ? static_cast<char>(c) : '#');
  }
  // Terminal silent "e": a lone final "e" after a consonant, except "-le".
  const std::size_t m = letters.size();
  if (m >= 2 && letters[m - 1] == 'e') {
    const char before = letters[m - 2];
    const bool consonant = before != 'a' && before != 'e' && before != 'i' &&
                           before != 'o' && before != 'u' && before != 'y' &&
                           before != ' ';
    if (consonant && before != 'l') --groups;
  }
  return std::max(groups, 1);
}

bool is_complex_word(std::string_view word, std::string_view tag) {
  if (tag == "NNP" || tag == "NNPS") return false;
  if (word.find('-') != std::string_view::npos) return false;
  if (word.find("‐") != std::string_view::npos) return false;
  return count_syllables(word) >= 3;
}

}  // namespace newsstyle
