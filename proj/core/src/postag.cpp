#include "newsstyle/postag.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "newsstyle/error.hpp"
#include "newsstyle/rng.hpp"
#include "utf8.hpp"

namespace newsstyle {

const std::vector<std::string>& penn_tagset() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t = {
        "CC",  "CD",  "DT",   "EX",   "FW",   "IN",  "JJ",  "JJR", "JJS",
        "LS",  "MD",  "NN",   "NNS",  "NNP",  "NNPS", "PDT", "POS", "PRP",
        "PRP$", "RB", "RBR",  "RBS",  "RP",   "SYM", "TO",  "UH",  "VB",
        "VBD", "VBG", "VBN",  "VBP",  "VBZ",  "WDT", "WP",  "WP$", "WRB",
        ".",   ",",   ":",    "``",   "''",   "\"",  "(",   ")",   "-LRB-",
        "-RRB-", "#", "$",    "HYPH", "NFP",  "ADD", "AFX", "GW",  "XX"};
    std::sort(t.begin(), t.end());
    return t;
  }();
  return tags;
}

bool is_penn_tag(std::string_view tag) {
  const auto& tags = penn_tagset();
  return std::binary_search(tags.begin(), tags.end(), tag);
}

// ---------------------------------------------------------------------------
// Model

int TaggerModel::tag_index(std::string_view tag) const {
  const auto it = std::lower_bound(tagset.begin(), tagset.end(), tag);
  if (it == tagset.end() || *it != tag) return -1;
  return static_cast<int>(it - tagset.begin());
}

bool TaggerModel::knows_word(std::string_view word) const {
  std::string key = "w=";
  key += word;
  return weights.count(key) > 0;
}

void TaggerModel::check_invariants() const {
  if (!std::is_sorted(tagset.begin(), tagset.end()))
    throw Error("tagger tagset is not sorted");
  for (const auto& [feature, entries] : weights)
    for (const auto& [idx, w] : entries)
      if (idx >= tagset.size())
        throw Error("feature '" + feature + "' references tag index " +
                    std::to_string(idx) + " outside the tagset");
  for (const auto& [word, t] : lexical_backoff)
    if (tag_index(t) < 0)
      throw Error("backoff entry '" + word + "' uses unknown tag " + t);
}

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, const std::string& source, std::size_t line) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError(source, line, "bad number '" + std::string(s) + "'");
  return v;
}

std::size_t parse_count(std::string_view s, const std::string& source,
                        std::size_t line) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError(source, line, "bad count '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string_view::npos ? tab : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return out;
}

constexpr std::string_view kModelMagic = "newsstyle-tagger-model";

}  // namespace

void TaggerModel::save(std::ostream& out) const {
  out << kModelMagic << '\t' << kFormatVersion << '\n';
  out << "version\t" << version << '\n';
  out << "tagset\t" << tagset.size() << '\n';
  for (const auto& t : tagset) out << t << '\n';

  std::vector<std::pair<std::string, std::string>> backoff(lexical_backoff.begin(),
                                                           lexical_backoff.end());
  std::sort(backoff.begin(), backoff.end());
  out << "backoff\t" << backoff.size() << '\n';
  for (const auto& [w, t] : backoff) out << w << '\t' << t << '\n';

  std::vector<const std::string*> names;
  names.reserve(weights.size());
  for (const auto& [f, _] : weights) names.push_back(&f);
  std::sort(names.begin(), names.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  out << "features\t" << names.size() << '\n';
  for (const auto* name : names) {
    out << *name;
    for (const auto& [idx, w] : weights.at(*name))
      out << '\t' << idx << ':' << format_double(w);
    out << '\n';
  }
}

void TaggerModel::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write tagger model " + file.string());
  save(out);
  if (!out) throw Error("write failure on " + file.string());
}

TaggerModel TaggerModel::load(std::istream& in, const std::string& source) {
  TaggerModel m;
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> std::string_view {
    if (!std::getline(in, line))
      throw ParseError(source, line_no, "unexpected end of tagger model");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  auto header = [&](std::string_view key) {
    const auto fields = split_tabs(next());
    if (fields.size() != 2 || fields[0] != key)
      throw ParseError(source, line_no, "expected '" + std::string(key) + "' header");
    return std::string(fields[1]);
  };

  const auto magic = header(kModelMagic);
  if (magic != std::to_string(kFormatVersion))
    throw ParseError(source, line_no, "unsupported tagger model format " + magic);
  m.version = header("version");

  const auto ntags = parse_count(header("tagset"), source, line_no);
  for (std::size_t i = 0; i < ntags; ++i) {
    const auto t = next();
    if (t.empty()) throw ParseError(source, line_no, "empty tag");
    m.tagset.emplace_back(t);
  }
  if (!std::is_sorted(m.tagset.begin(), m.tagset.end()))
    throw ParseError(source, line_no, "tagset must be sorted");

  const auto nback = parse_count(header("backoff"), source, line_no);
  for (std::size_t i = 0; i < nback; ++i) {
    const auto fields = split_tabs(next());
    if (fields.size() != 2) throw ParseError(source, line_no, "malformed backoff entry");
    if (m.tag_index(fields[1]) < 0)
      throw ParseError(source, line_no, "backoff tag not in tagset: " + std::string(fields[1]));
    m.lexical_backoff.emplace(std::string(fields[0]), std::string(fields[1]));
  }

  const auto nfeat = parse_count(header("features"), source, line_no);
  m.weights.reserve(nfeat);
  for (std::size_t i = 0; i < nfeat; ++i) {
    const auto fields = split_tabs(next());
    if (fields.size() < 2) throw ParseError(source, line_no, "feature without weights");
    std::vector<std::pair<std::uint16_t, double>> entries;
    for (std::size_t k = 1; k < fields.size(); ++k) {
      const auto colon = fields[k].find(':');
      if (colon == std::string_view::npos)
        throw ParseError(source, line_no, "malformed weight entry");
      const auto idx = parse_count(fields[k].substr(0, colon), source, line_no);
      if (idx >= m.tagset.size())
        throw ParseError(source, line_no, "tag index out of range");
      entries.emplace_back(static_cast<std::uint16_t>(idx),
                           parse_double(fields[k].substr(colon + 1), source, line_no));
    }
    m.weights.emplace(std::string(fields[0]), std::move(entries));
  }
  return m;
}

TaggerModel TaggerModel::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open tagger model " + file.string());
  return load(in, file.string());
}

// ---------------------------------------------------------------------------
// Features

namespace {

const std::string kStart1 = "-START-";
const std::string kStart2 = "-START2-";
const std::string kEnd = "-END-";

std::string suffix(std::string_view lower, std::size_t ncp) {
  std::size_t pos = lower.size();
  std::size_t count = 0;
  while (pos > 0 && count < ncp) {
    --pos;
    while (pos > 0 && (static_cast<unsigned char>(lower[pos]) & 0xC0) == 0x80) --pos;
    ++count;
  }
  return std::string(lower.substr(pos));
}

struct Context {
  std::vector<std::string> words;  // normalized
  std::vector<std::string> lower;
  std::vector<const Token*> tokens;
};

Context make_context(std::span<const Token> tokens) {
  Context c;
  c.words.reserve(tokens.size());
  for (const auto& t : tokens) {
    c.words.push_back(t.norm.empty() ? t.text : t.norm);
    c.lower.push_back(utf8::to_lower(c.words.back()));
    c.tokens.push_back(&t);
  }
  return c;
}

void extract_features(const Context& c, std::size_t i, const std::string& prev,
                      const std::string& prev2, std::vector<std::string>& out) {
  out.clear();
  const auto& lw = c.lower[i];
  out.emplace_back("b");
  out.push_back("w=" + c.words[i]);
  out.push_back("lw=" + lw);
  out.push_back("s1=" + suffix(lw, 1));
  out.push_back("s2=" + suffix(lw, 2));
  out.push_back("s3=" + suffix(lw, 3));
  out.push_back("pt=" + prev);
  out.push_back("pt2=" + prev2 + "|" + prev);
  out.push_back("pw=" + (i > 0 ? c.lower[i - 1] : kStart1));
  out.push_back("nw=" + (i + 1 < c.lower.size() ? c.lower[i + 1] : kEnd));
  if (c.tokens[i]->is_all_caps) out.emplace_back("caps");
  if (c.tokens[i]->kind == TokenKind::number) out.emplace_back("num");
}

const std::string* find_backoff(const std::unordered_map<std::string, std::string>& table,
                                const Token& tok, const std::string& word) {
  if (auto it = table.find(word); it != table.end()) return &it->second;
  if (!tok.is_all_caps || utf8::length(word) >= 3) {
    if (auto it = table.find(utf8::to_lower(word)); it != table.end())
      return &it->second;
  }
  return nullptr;
}

// Training-time weights with lazy averaging.
struct Accumulator {
  std::uint16_t tag;
  double weight = 0;
  double total = 0;
  std::int64_t stamp = 0;
};

class PerceptronTrainer {
 public:
  explicit PerceptronTrainer(std::size_t ntags) : ntags_(ntags), scores_(ntags) {}

  int predict(const std::vector<std::string>& feats) {
    std::fill(scores_.begin(), scores_.end(), 0.0);
    for (const auto& f : feats) {
      const auto it = index_.find(f);
      if (it == index_.end()) continue;
      for (const auto& a : table_[it->second]) scores_[a.tag] += a.weight;
    }
    return argmax();
  }

  void update(int truth, int guess, const std::vector<std::string>& feats) {
    ++instances_;
    if (truth == guess) return;
    for (const auto& f : feats) {
      auto& entries = slot(f);
      bump(entries, static_cast<std::uint16_t>(truth), 1.0);
      bump(entries, static_cast<std::uint16_t>(guess), -1.0);
    }
  }

  void tick() { ++instances_; }

  void average_into(TaggerModel& model) const {
    model.weights.clear();
    model.weights.reserve(table_.size());
    for (const auto& [name, id] : index_) {
      std::vector<std::pair<std::uint16_t, double>> entries;
      for (const auto& a : table_[id]) {
        const double total = a.total + static_cast<double>(instances_ - a.stamp) * a.weight;
        const double avg = instances_ > 0 ? total / static_cast<double>(instances_) : 0.0;
        if (avg != 0.0) entries.emplace_back(a.tag, avg);
      }
      if (entries.empty()) continue;
      std::sort(entries.begin(), entries.end());
      model.weights.emplace(name, std::move(entries));
    }
  }

 private:
  int argmax() const {
    int best = 0;
    for (std::size_t t = 1; t < ntags_; ++t)
      if (scores_[t] > scores_[best]) best = static_cast<int>(t);
    return best;
  }

  std::vector<Accumulator>& slot(const std::string& f) {
    auto [it, inserted] = index_.try_emplace(f, table_.size());
    if (inserted) table_.emplace_back();
    return table_[it->second];
  }

  void bump(std::vector<Accumulator>& entries, std::uint16_t tag, double delta) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const Accumulator& a) { return a.tag == tag; });
    if (it == entries.end()) {
      entries.push_back({tag, 0.0, 0.0, instances_});
      it = entries.end() - 1;
    }
    it->total += static_cast<double>(instances_ - it->stamp) * it->weight;
    it->stamp = instances_;
    it->weight += delta;
  }

  std::size_t ntags_;
  std::vector<double> scores_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Accumulator>> table_;
  std::int64_t instances_ = 0;
};

}  // namespace

TaggerModel train_tagger(std::span<const TaggedSentence> annotated,
                         const TrainOptions& options) {
  if (annotated.empty()) throw Error("tagger training set is empty");
  if (options.epochs < 1) throw Error("tagger training needs at least one epoch");

  std::vector<std::string> tags;
  for (const auto& s : annotated)
    for (const auto& t : s.tokens) {
      if (!is_penn_tag(t.tag)) throw Error("training tag not in tagset: " + t.tag);
      tags.push_back(t.tag);
    }
  for (const auto& [w, t] : options.closed_class) {
    if (!is_penn_tag(t)) throw Error("closed-class tag not in tagset: " + t);
    tags.push_back(t);
  }
  tags.push_back("NNP");
  tags.push_back("CD");
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());

  TaggerModel model;
  model.tagset = tags;
  model.version = options.version;
  model.lexical_backoff = options.closed_class;

  if (options.backoff_min_count > 0) {
    std::map<std::string, std::map<std::string, int>> counts;
    for (const auto& s : annotated)
      for (const auto& t : s.tokens) ++counts[t.token.norm][t.tag];
    for (const auto& [word, by_tag] : counts) {
      int total = 0, best = 0;
      const std::string* best_tag = nullptr;
      for (const auto& [t, n] : by_tag) {
        total += n;
        if (n > best) {
          best = n;
          best_tag = &t;
        }
      }
      if (total >= options.backoff_min_count &&
          static_cast<double>(best) / total >= options.backoff_purity &&
          !model.lexical_backoff.count(word))
        model.lexical_backoff.emplace(word, *best_tag);
    }
  }

  PerceptronTrainer trainer(tags.size());
  std::vector<std::size_t> order(annotated.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 eng(options.seed);
  std::vector<std::string> feats;
  std::vector<Token> toks;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    seeded_shuffle(std::span<std::size_t>(order), eng);
    for (const auto idx : order) {
      const auto& sent = annotated[idx];
      toks.clear();
      for (const auto& t : sent.tokens) toks.push_back(t.token);
      const auto ctx = make_context(toks);
      std::string prev = kStart1, prev2 = kStart2;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        std::string guess_tag;
        if (const auto* forced = find_backoff(model.lexical_backoff, toks[i], ctx.words[i])) {
          guess_tag = *forced;
          trainer.tick();
        } else {
          extract_features(ctx, i, prev, prev2, feats);
          const int guess = trainer.predict(feats);
          trainer.update(model.tag_index(sent.tokens[i].tag), guess, feats);
          guess_tag = tags[static_cast<std::size_t>(guess)];
        }
        prev2 = std::move(prev);
        prev = std::move(guess_tag);
      }
    }
  }
  trainer.average_into(model);
  return model;
}

TaggedSentence tag(const Sentence& sentence, const TaggerModel& model) {
  return tag(std::span<const Token>(sentence.tokens), model);
}

TaggedSentence tag(std::span<const Token> tokens, const TaggerModel& model) {
  TaggedSentence out;
  out.tokens.reserve(tokens.size());
  const auto ctx = make_context(tokens);
  const auto ntags = model.tagset.size();
  std::vector<double> scores(ntags);
  std::vector<std::string> feats;
  std::string prev = kStart1, prev2 = kStart2;

  const int nnp = model.tag_index("NNP");
  const int cd = model.tag_index("CD");

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    std::string chosen;
    if (const auto* forced = find_backoff(model.lexical_backoff, tok, ctx.words[i])) {
      chosen = *forced;
    } else if (!model.knows_word(ctx.words[i]) && tok.is_all_caps && nnp >= 0) {
      chosen = "NNP";
    } else if (!model.knows_word(ctx.words[i]) && tok.kind == TokenKind::number &&
               cd >= 0) {
      chosen = "CD";
    } else if (ntags > 0) {
      extract_features(ctx, i, prev, prev2, feats);
      std::fill(scores.begin(), scores.end(), 0.0);
      for (const auto& f : feats) {
        const auto it = model.weights.find(f);
        if (it == model.weights.end()) continue;
        for (const auto& [idx, w] : it->second) scores[idx] += w;
      }
      std::size_t best = 0;
      for (std::size_t t = 1; t < ntags; ++t)
        if (scores[t] > scores[best]) best = t;
      chosen = model.tagset[best];
    }
    out.tokens.push_back({tok, chosen});
    prev2 = std::move(prev);
    prev = chosen;
  }
  return out;
}

double tagging_accuracy(std::span<const TaggedSentence> gold, const TaggerModel& model) {
  std::size_t correct = 0, total = 0;
  std::vector<Token> toks;
  for (const auto& s : gold) {
    toks.clear();
    for (const auto& t : s.tokens) toks.push_back(t.token);
    const auto predicted = tag(std::span<const Token>(toks), model);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      ++total;
      if (predicted.tokens[i].tag == s.tokens[i].tag) ++correct;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

// ---------------------------------------------------------------------------
// Pre-tagged input

std::vector<TaggedSentence> parse_pretagged(std::string_view text,
                                            const std::string& source) {
  std::vector<TaggedSentence> out;
  TaggedSentence current;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (!current.tokens.empty()) out.push_back(std::move(current));
      current = TaggedSentence{};
      offset = 0;
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size() ||
        line.find('\t', tab + 1) != std::string_view::npos)
      throw ParseError(source, line_no, "expected token<TAB>tag");
    const auto word = line.substr(0, tab);
    const auto t = line.substr(tab + 1);
    if (!is_penn_tag(t))
      throw ParseError(source, line_no, "tag not in tagset: " + std::string(t));
    current.tokens.push_back({token_from_text(word, offset), std::string(t)});
    offset += word.size() + 1;
  }
  if (!current.tokens.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<TaggedSentence> load_pretagged(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open pre-tagged file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pretagged(ss.str(), file.string());
}

std::unordered_map<std::string, std::string> load_closed_class(
    const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open closed-class list " + file.string());
  std::unordered_map<std::string, std::string> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty())
      throw ParseError(file.string(), line_no, "expected word<TAB>tag");
    if (!is_penn_tag(fields[1]))
      throw ParseError(file.string(), line_no, "tag not in tagset: " + std::string(fields[1]));
    table[std::string(fields[0])] = std::string(fields[1]);
  }
  return table;
}

}  // namespace newsstyle
