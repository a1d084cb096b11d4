#include "newsstyle/features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "newsstyle/error.hpp"
#include "utf8.hpp"

namespace newsstyle {

const char* to_string(Part part) { return part == Part::title ? "title" : "body"; }

std::optional<Part> parse_part(std::string_view text) {
  if (text == "title") return Part::title;
  if (text == "body") return Part::body;
  return std::nullopt;
}

const std::vector<std::string>& complexity_features() {
  static const std::vector<std::string> v = {
      "GI", "SMOG", "FK", "med_depth", "med_np_depth", "med_vp_depth",
      "flu_coca_c", "flu_coca_d", "TTR", "avg_wlen"};
  return v;
}

namespace {

const std::vector<std::string>& pos_features() {
  static const std::vector<std::string> v = {
      "NN", "NNP", "PRP", "PRP$", "WP", "DT", "WDT", "CD", "RB",
      "UH", "VB", "JJ", "VBD", "VBG", "VBN", "VBP", "VBZ"};
  return v;
}

const std::vector<std::string>& stylistic_categories() {
  static const std::vector<std::string> v = {
      "focuspast", "focusfuture", "i", "we", "you", "shehe",
      "quant", "compare", "negate", "swear", "netspeak", "interrog"};
  return v;
}

const std::vector<std::string>& psychological_categories() {
  static const std::vector<std::string> v = {
      "analytic", "insight", "cause", "discrep", "tentat", "certain", "differ",
      "affil", "power", "reward", "risk", "personal", "tone", "affect"};
  return v;
}

}  // namespace

const std::vector<std::string>& stylistic_features() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out = {"WC", "WPS"};
    for (const auto& t : pos_features()) out.push_back(t);
    for (const char* name : {"focuspast", "focusfuture", "i", "we", "you", "shehe",
                             "quant", "compare", "exclaim", "negate", "swear",
                             "netspeak", "interrog", "all_caps", "per_stop",
                             "allPunc", "quotes", "#vps"})
      out.emplace_back(name);
    return out;
  }();
  return v;
}

const std::vector<std::string>& psychological_features() {
  static const std::vector<std::string> v = [] {
    auto out = psychological_categories();
    out.emplace_back("str_neg");
    out.emplace_back("str_pos");
    return out;
  }();
  return v;
}

const std::vector<std::string>& feature_catalog() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto* part : {&complexity_features(), &stylistic_features(),
                             &psychological_features()})
      out.insert(out.end(), part->begin(), part->end());
    return out;
  }();
  return v;
}

const std::vector<std::string>& category_features() {
  static const std::vector<std::string> v = [] {
    auto out = stylistic_categories();
    const auto& psy = psychological_categories();
    out.insert(out.end(), psy.begin(), psy.end());
    return out;
  }();
  return v;
}

bool is_catalog_feature(std::string_view name) {
  const auto& c = feature_catalog();
  return std::find(c.begin(), c.end(), name) != c.end();
}

bool is_known_feature(std::string_view name) {
  if (is_catalog_feature(name)) return true;
  constexpr std::string_view suffix = "_pct";
  if (name.size() <= suffix.size() || name.substr(name.size() - suffix.size()) != suffix)
    return false;
  const auto base = name.substr(0, name.size() - suffix.size());
  const auto& c = category_features();
  return std::find(c.begin(), c.end(), base) != c.end();
}

std::optional<double> FeatureVector::get(const std::string& name) const {
  const auto it = values.find(name);
  if (it == values.end()) throw Error("feature not present: " + name);
  return it->second;
}

std::size_t FeatureVector::undefined_count() const {
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [](const auto& kv) { return !kv.second; }));
}

Resources Resources::load(const std::filesystem::path& dir) {
  Resources r;
  r.abbreviations = AbbreviationList::load(dir / "abbreviations.txt");
  r.tagger = TaggerModel::load(dir / "tagger.model");
  r.categories = CategoryLexicon::load(dir / "categories.dic");
  r.frequency = FrequencyTable::load(dir / "frequency.tsv");
  r.sentiment = SentimentLexicon::load(dir / "sentiment.tsv");
  r.stopwords = StopList::load(dir / "stopwords.txt");
  return r;
}

PartAnalysis analyze_part(std::string_view text, Part part, const Resources& res) {
  PartAnalysis a;
  a.tokens = tokenize(text);
  if (part == Part::title) {
    if (!a.tokens.empty()) a.sentences.push_back(Sentence{a.tokens, 0});
  } else {
    a.sentences = split_sentences(text, a.tokens, res.abbreviations);
  }
  a.tagged.reserve(a.sentences.size());
  a.trees.reserve(a.sentences.size());
  for (const auto& s : a.sentences) {
    a.tagged.push_back(tag(s, res.tagger));
    a.trees.push_back(chunk(a.tagged.back()));
  }
  return a;
}

PartAnalysis analysis_from_tagged(std::vector<TaggedSentence> tagged) {
  PartAnalysis a;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    Sentence s;
    s.index = i;
    for (const auto& t : tagged[i].tokens) s.tokens.push_back(t.token);
    a.tokens.insert(a.tokens.end(), s.tokens.begin(), s.tokens.end());
    a.sentences.push_back(std::move(s));
    a.trees.push_back(chunk(tagged[i]));
  }
  a.tagged = std::move(tagged);
  return a;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::size_t word_count(std::span<const Token> tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_word(); }));
}

bool is_quote_token(const Token& t) {
  if (!t.is_punct()) return false;
  const auto d = utf8::decode(t.text, 0);
  return d.len == t.text.size() && utf8::is_quote(d.cp);
}

double count_of(const std::map<std::string, std::size_t>& counts, const std::string& name) {
  const auto it = counts.find(name);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second);
}

}  // namespace

FeatureMap extract_complexity(const PartAnalysis& a, const FrequencyTable& ft) {
  FeatureMap out;
  for (const auto& name : complexity_features()) out[name] = std::nullopt;
  if (a.sentences.empty()) return out;

  const auto sentences = static_cast<double>(a.sentences.size());
  std::size_t words = 0, syllables = 0, complex = 0, polysyllables = 0, chars = 0;
  std::unordered_set<std::string> types;
  for (const auto& ts : a.tagged) {
    for (const auto& t : ts.tokens) {
      if (!t.token.is_word()) continue;
      ++words;
      const int syl = count_syllables(t.token.text);
      syllables += static_cast<std::size_t>(syl);
      if (syl >= 3) ++polysyllables;
      if (is_complex_word(t.token.text, t.tag)) ++complex;
      chars += utf8::length(t.token.text);
      types.insert(lookup_key(t.token));
    }
  }

  out["SMOG"] = 1.0430 * std::sqrt(static_cast<double>(polysyllables) * 30.0 / sentences) +
                3.1291;
  if (words > 0) {
    const auto w = static_cast<double>(words);
    out["GI"] = 0.4 * (w / sentences + 100.0 * static_cast<double>(complex) / w);
    out["FK"] = 0.39 * w / sentences + 11.8 * static_cast<double>(syllables) / w - 15.59;
    out["TTR"] = static_cast<double>(types.size()) / w;
    out["avg_wlen"] = static_cast<double>(chars) / w;
  }

  std::vector<double> depth, np, vp;
  for (const auto& tree : a.trees) {
    const auto m = tree_metrics(tree);
    depth.push_back(m.depth);
    np.push_back(m.np_depth);
    vp.push_back(m.vp_depth);
  }
  if (!depth.empty()) {
    out["med_depth"] = median(depth);
    out["med_np_depth"] = median(np);
    out["med_vp_depth"] = median(vp);
  }
  out["flu_coca_c"] = fluency_least3(a.tokens, ft);
  out["flu_coca_d"] = fluency_doc(a.tokens, ft);
  return out;
}

FeatureMap extract_stylistic(const PartAnalysis& a, const StopList& stoplist,
                             const CategoryLexicon& lex) {
  FeatureMap out;
  const auto wc = word_count(a.tokens);
  out["WC"] = static_cast<double>(wc);
  out["WPS"] = std::nullopt;
  if (wc > 0 && !a.sentences.empty())
    out["WPS"] = static_cast<double>(wc) / static_cast<double>(a.sentences.size());

  std::map<std::string, std::size_t> tags;
  for (const auto& ts : a.tagged)
    for (const auto& t : ts.tokens) ++tags[t.tag];
  auto tag_count = [&](const char* t) {
    const auto it = tags.find(t);
    return it == tags.end() ? 0.0 : static_cast<double>(it->second);
  };
  for (const auto& name : pos_features()) out[name] = tag_count(name.c_str());
  out["NN"] = tag_count("NN") + tag_count("NNS");
  out["NNP"] = tag_count("NNP") + tag_count("NNPS");

  const auto counts = match_categories(a.tokens, lex);
  for (const auto& name : stylistic_categories()) out[name] = count_of(counts, name);

  std::size_t caps = 0, stop = 0, punct = 0, quotes = 0, exclaim = 0;
  for (const auto& t : a.tokens) {
    if (t.is_word()) {
      if (t.is_all_caps) ++caps;
      if (stoplist.contains(lookup_key(t))) ++stop;
    } else if (t.is_punct()) {
      ++punct;
      if (is_quote_token(t)) ++quotes;
      if (t.text == "!") ++exclaim;
    }
  }
  out["all_caps"] = static_cast<double>(caps);
  out["per_stop"] = std::nullopt;
  if (wc > 0) out["per_stop"] = 100.0 * static_cast<double>(stop) / static_cast<double>(wc);
  out["allPunc"] = static_cast<double>(punct);
  out["quotes"] = static_cast<double>(quotes);
  out["exclaim"] = static_cast<double>(exclaim);

  double vps = 0;
  for (const auto& tree : a.trees) vps += tree_metrics(tree).vp_count;
  out["#vps"] = vps;
  return out;
}

FeatureMap extract_psychological(const PartAnalysis& a, const CategoryLexicon& lex,
                                 const SentimentLexicon& sl) {
  FeatureMap out;
  const auto counts = match_categories(a.tokens, lex);
  for (const auto& name : psychological_categories()) out[name] = count_of(counts, name);
  if (a.sentences.empty()) {
    out["str_neg"] = std::nullopt;
    out["str_pos"] = std::nullopt;
  } else {
    const auto s = sentiment_strength(a.sentences, sl);
    out["str_neg"] = s.negative;
    out["str_pos"] = s.positive;
  }
  return out;
}

FeatureVector extract_all(const Document& doc, Part part, const Resources& res) {
  const auto& text = part == Part::title ? doc.title : doc.body;
  return extract_all(doc, part, analyze_part(text, part, res), res);
}

FeatureVector extract_all(const Document& doc, Part part, const PartAnalysis& a,
                          const Resources& res) {
  FeatureVector v;
  v.doc_id = doc.id;
  v.label = doc.label;
  v.part = part;
  if (a.tokens.empty()) {
    for (const auto& name : feature_catalog()) v.values[name] = std::nullopt;
    return v;
  }
  v.values = extract_complexity(a, res.frequency);
  v.values.merge(extract_stylistic(a, res.stopwords, res.categories));
  v.values.merge(extract_psychological(a, res.categories, res.sentiment));
  return v;
}

void add_percentages(FeatureVector& v) {
  const auto wc = v.get("WC");
  for (const auto& name : category_features()) {
    const auto count = v.get(name);
    std::optional<double> pct;
    if (count && wc && *wc > 0) pct = 100.0 * *count / *wc;
    v.values[name + "_pct"] = pct;
  }
}

}  // namespace newsstyle
