#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace newsstyle::utf8 {

struct Decoded {
  char32_t cp;
  std::size_t len;  // bytes consumed, >= 1
};

// Decodes one code point at `pos`. Invalid sequences decode as U+FFFD
// consuming a single byte, so decoding always makes progress.
Decoded decode(std::string_view s, std::size_t pos);

void append(std::string& out, char32_t cp);

std::size_t length(std::string_view s);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
// Letters: ASCII letters and any non-ASCII code point that is not
// classified as whitespace, punctuation or symbol below.
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_punctuation(char32_t cp);
bool is_apostrophe(char32_t cp);
bool is_quote(char32_t cp);

// Maps curly quotes and apostrophes to their straight ASCII forms.
char32_t normalize(char32_t cp);
// Case folding for ASCII and Latin-1 letters; other code points unchanged.
char32_t to_lower(char32_t cp);

// Canonical form: normalized quotes, original case.
std::string normalize(std::string_view s);
std::string to_lower(std::string_view s);

}  // namespace newsstyle::utf8
