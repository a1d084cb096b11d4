#include "newsstyle/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "newsstyle/error.hpp"
#include "utf8.hpp"

namespace newsstyle {

namespace {

std::string read_text(const std::filesystem::path& file, const char* what) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(std::string("cannot open ") + what + " " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Calls `fn(line, line_no)` for every non-blank line with comments removed.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line, line_no);
    if (nl == text.size()) break;
  }
}

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

// Returns the lowercased entry with any trailing `*` removed, and whether it
// was a stem. Throws on misplaced wildcards or empty entries.
std::pair<std::string, bool> split_entry(std::string_view entry) {
  entry = trim(entry);
  const bool stem = !entry.empty() && entry.back() == '*';
  if (stem) entry.remove_suffix(1);
  if (entry.empty()) throw Error("empty dictionary entry");
  if (entry.find('*') != std::string_view::npos)
    throw Error("wildcard allowed only as a trailing '*': " + std::string(entry));
  return {utf8::to_lower(utf8::normalize(entry)), stem};
}

// Longest key in `stems` that is a prefix of `word`.
template <class Map>
auto find_stem(const Map& stems, std::size_t longest, std::string_view word)
    -> decltype(stems.find(std::string())) {
  for (std::size_t len = std::min(longest, word.size()); len > 0; --len) {
    const auto it = stems.find(std::string(word.substr(0, len)));
    if (it != stems.end()) return it;
  }
  return stems.end();
}

void add_unique(std::vector<std::size_t>& v, std::size_t idx) {
  const auto it = std::lower_bound(v.begin(), v.end(), idx);
  if (it == v.end() || *it != idx) v.insert(it, idx);
}

}  // namespace

std::string lookup_key(const Token& token) {
  return utf8::to_lower(token.norm.empty() ? utf8::normalize(token.text) : token.norm);
}

// ---------------------------------------------------------------------------
// CategoryLexicon

CategoryLexicon CategoryLexicon::load(const std::filesystem::path& file) {
  return parse(read_text(file, "category lexicon"), file.string());
}

CategoryLexicon CategoryLexicon::parse(std::string_view text, const std::string& source) {
  CategoryLexicon lex;
  std::string current;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    try {
      if (line.front() == '@') {
        const auto sp = line.find_first_of(" \t");
        const auto key = line.substr(1, sp == std::string_view::npos ? sp : sp - 1);
        const auto value = sp == std::string_view::npos ? std::string_view{}
                                                        : trim(line.substr(sp));
        if (key == "name")
          lex.name = std::string(value);
        else if (key == "version")
          lex.version = std::string(value);
        else
          throw Error("unknown directive @" + std::string(key));
      } else if (line.front() == '%') {
        const auto cat = trim(line.substr(1));
        if (cat.empty() || cat.find_first_of(" \t") != std::string_view::npos)
          throw Error("malformed category header");
        current = std::string(cat);
        lex.add_category(current);
      } else {
        if (current.empty()) throw Error("entry before any %category header");
        if (line.find_first_of(" \t") != std::string_view::npos)
          throw Error("entry contains whitespace: " + std::string(line));
        lex.add_entry(current, line);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  });
  return lex;
}

void CategoryLexicon::add_category(const std::string& category) {
  if (category.empty()) throw Error("empty category name");
  if (has_category(category)) throw Error("duplicate category: " + category);
  categories_.push_back(category);
  entry_counts_.push_back(0);
}

void CategoryLexicon::add_entry(const std::string& category, std::string_view entry) {
  const auto idx = index_of(category);
  if (idx == categories_.size()) throw Error("unknown category: " + category);
  auto [word, stem] = split_entry(entry);
  auto& table = stem ? stems_ : exact_;
  auto& cats = table[word];
  const auto before = cats.size();
  add_unique(cats, idx);
  if (cats.size() != before) ++entry_counts_[idx];
  if (stem) longest_stem_ = std::max(longest_stem_, word.size());
}

bool CategoryLexicon::has_category(std::string_view category) const {
  return index_of(category) != categories_.size();
}

std::size_t CategoryLexicon::entry_count(std::string_view category) const {
  const auto idx = index_of(category);
  return idx == categories_.size() ? 0 : entry_counts_[idx];
}

std::size_t CategoryLexicon::index_of(std::string_view category) const {
  return static_cast<std::size_t>(
      std::find(categories_.begin(), categories_.end(), category) - categories_.begin());
}

const std::vector<std::size_t>& CategoryLexicon::lookup(std::string_view lower_word) const {
  static const std::vector<std::size_t> none;
  if (const auto it = exact_.find(std::string(lower_word)); it != exact_.end())
    return it->second;
  const auto it = find_stem(stems_, longest_stem_, lower_word);
  return it == stems_.end() ? none : it->second;
}

std::map<std::string, std::size_t> match_categories(std::span<const Token> tokens,
                                                     const CategoryLexicon& lex) {
  std::vector<std::size_t> counts(lex.categories().size(), 0);
  for (const auto& t : tokens) {
    if (!t.is_word()) continue;
    for (const auto idx : lex.lookup(lookup_key(t))) ++counts[idx];
  }
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < counts.size(); ++i) out[lex.categories()[i]] = counts[i];
  return out;
}

// ---------------------------------------------------------------------------
// FrequencyTable

FrequencyTable FrequencyTable::load(const std::filesystem::path& file) {
  return parse(read_text(file, "frequency table"), file.string());
}

FrequencyTable FrequencyTable::parse(std::string_view text, const std::string& source) {
  FrequencyTable ft;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line.front() == '@') {
      if (line.substr(0, 7) != "@corpus")
        throw ParseError(source, line_no, "unknown directive");
      ft.corpus_name = std::string(trim(line.substr(7)));
      return;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0)
      throw ParseError(source, line_no, "expected word<TAB>frequency");
    const auto num = trim(line.substr(tab + 1));
    double v = 0;
    const auto res = std::from_chars(num.data(), num.data() + num.size(), v);
    if (res.ec != std::errc{} || res.ptr != num.data() + num.size() || !(v >= 0))
      throw ParseError(source, line_no, "frequency must be a non-negative number");
    ft.add(trim(line.substr(0, tab)), v);
  });
  return ft;
}

void FrequencyTable::add(std::string_view word, double per_million) {
  if (!(per_million >= 0)) throw Error("negative frequency for " + std::string(word));
  table_[utf8::to_lower(utf8::normalize(word))] += per_million;
}

double FrequencyTable::frequency(std::string_view word) const {
  const auto it = table_.find(utf8::to_lower(utf8::normalize(word)));
  return it == table_.end() ? 0.0 : it->second;
}

std::optional<double> fluency_doc(std::span<const Token> tokens, const FrequencyTable& ft) {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& t : tokens) {
    if (!t.is_word()) continue;
    sum += ft.frequency(lookup_key(t));
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> fluency_least3(std::span<const Token> tokens,
                                     const FrequencyTable& ft) {
  std::vector<std::string> types;
  for (const auto& t : tokens)
    if (t.is_word()) types.push_back(lookup_key(t));
  if (types.empty()) return std::nullopt;
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());

  std::vector<std::pair<double, const std::string*>> ranked;
  ranked.reserve(types.size());
  for (const auto& w : types) ranked.emplace_back(ft.frequency(w), &w);
  const auto k = std::min<std::size_t>(3, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                    ranked.end(), [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return *a.second < *b.second;
                    });
  double sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += ranked[i].first;
  return sum / static_cast<double>(k);
}

// ---------------------------------------------------------------------------
// SentimentLexicon

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& file) {
  return parse(read_text(file, "sentiment lexicon"), file.string());
}

SentimentLexicon SentimentLexicon::parse(std::string_view text, const std::string& source) {
  SentimentLexicon sl;
  enum class Block { terms, boosters, negators } block = Block::terms;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    try {
      if (line.front() == '%') {
        const auto name = trim(line.substr(1));
        if (name == "terms")
          block = Block::terms;
        else if (name == "boosters")
          block = Block::boosters;
        else if (name == "negators")
          block = Block::negators;
        else
          throw Error("unknown block %" + std::string(name));
        return;
      }
      if (block == Block::negators) {
        sl.add_negator(line);
        return;
      }
      const auto tab = line.find('\t');
      if (tab == std::string_view::npos || tab == 0)
        throw Error("expected term<TAB>integer");
      int value = 0;
      if (!parse_int(trim(line.substr(tab + 1)), value))
        throw Error("not an integer: " + std::string(trim(line.substr(tab + 1))));
      const auto term = trim(line.substr(0, tab));
      if (block == Block::terms)
        sl.add_term(term, value);
      else
        sl.add_booster(term, value);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  });
  return sl;
}

void SentimentLexicon::add_term(std::string_view term, int strength) {
  if (strength < -5 || strength > 5 || (strength > -2 && strength < 2))
    throw Error("sentiment strength out of range for '" + std::string(term) +
                "': " + std::to_string(strength));
  auto [word, stem] = split_entry(term);
  if (stem) {
    longest_stem_ = std::max(longest_stem_, word.size());
    stems_[word] = strength;
  } else {
    exact_[word] = strength;
  }
}

void SentimentLexicon::add_booster(std::string_view word, int shift) {
  if (shift == 0 || shift < -2 || shift > 2)
    throw Error("booster shift must be +-1 or +-2 for '" + std::string(word) + "'");
  auto [w, stem] = split_entry(word);
  if (stem) throw Error("boosters cannot be stems: " + std::string(word));
  boosters_[w] = shift;
}

void SentimentLexicon::add_negator(std::string_view word) {
  auto [w, stem] = split_entry(word);
  if (stem) throw Error("negators cannot be stems: " + std::string(word));
  negators_.insert(w);
}

std::optional<int> SentimentLexicon::strength(std::string_view lower_word) const {
  if (const auto it = exact_.find(std::string(lower_word)); it != exact_.end())
    return it->second;
  const auto it = find_stem(stems_, longest_stem_, lower_word);
  if (it == stems_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SentimentLexicon::booster(std::string_view lower_word) const {
  const auto it = boosters_.find(std::string(lower_word));
  if (it == boosters_.end()) return std::nullopt;
  return it->second;
}

bool SentimentLexicon::is_negator(std::string_view lower_word) const {
  return negators_.count(std::string(lower_word)) > 0;
}

SentimentScore sentence_sentiment(std::span<const Token> tokens,
                                  const SentimentLexicon& sl) {
  std::vector<std::string> words;
  for (const auto& t : tokens)
    if (t.is_word()) words.push_back(lookup_key(t));

  int neg = -1, pos = 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto base = sl.strength(words[i]);
    if (!base) continue;
    int s = *base;
    if (i >= 1) {
      if (const auto shift = sl.booster(words[i - 1])) {
        const int mag = std::max(1, std::abs(s) + *shift);
        s = s > 0 ? mag : -mag;
      }
    }
    const bool negated = (i >= 1 && sl.is_negator(words[i - 1])) ||
                         (i >= 2 && sl.is_negator(words[i - 2]));
    if (negated) s = s > 0 ? -s + 1 : -1;
    if (s < 0) neg = std::min(neg, s);
    if (s > 0) pos = std::max(pos, s);
  }
  return {static_cast<double>(std::clamp(neg, -5, -1)),
          static_cast<double>(std::clamp(pos, 1, 5))};
}

SentimentScore sentiment_strength(std::span<const Sentence> sentences,
                                  const SentimentLexicon& sl) {
  if (sentences.empty()) return {};
  double neg = 0, pos = 0;
  for (const auto& s : sentences) {
    const auto score = sentence_sentiment(s.tokens, sl);
    neg += score.negative;
    pos += score.positive;
  }
  const auto n = static_cast<double>(sentences.size());
  return {neg / n, pos / n};
}

// ---------------------------------------------------------------------------
// StopList

StopList::StopList(std::unordered_set<std::string> words) {
  for (const auto& w : words) words_.insert(utf8::to_lower(utf8::normalize(w)));
}

StopList StopList::load(const std::filesystem::path& file) {
  return parse(read_text(file, "stop-word list"));
}

StopList StopList::parse(std::string_view text) {
  std::unordered_set<std::string> words;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      if (comma == std::string_view::npos) comma = line.size();
      const auto w = trim(line.substr(pos, comma - pos));
      if (!w.empty()) words.emplace(w);
      pos = comma + 1;
    }
  });
  return StopList(std::move(words));
}

bool StopList::contains(std::string_view lower_word) const {
  return words_.count(std::string(lower_word)) > 0;
}

}  // namespace newsstyle
