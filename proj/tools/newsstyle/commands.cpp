#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "newsstyle/corpus.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/learn.hpp"
#include "newsstyle/postag.hpp"
#include "newsstyle/rng.hpp"
#include "newsstyle/stats.hpp"

#ifndef NEWSSTYLE_DEFAULT_RESOURCE_DIR
#define NEWSSTYLE_DEFAULT_RESOURCE_DIR ""
#endif
#ifndef NEWSSTYLE_INSTALL_RESOURCE_DIR
#define NEWSSTYLE_INSTALL_RESOURCE_DIR ""
#endif

namespace newsstyle::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Runs body(i) for i in [0, n) on up to `jobs` threads. The first failing
// index (lowest i) determines which exception propagates.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// JSON has no infinities; they are written as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  return NAN;
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());
  out << text;
  if (!out) throw Error("write failed: " + file.string());
}

void write_json(const fs::path& file, const json& j) { write_text(file, j.dump(2) + "\n"); }

json read_json(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(file.string(), 0, e.what());
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
}

json file_ref(const fs::path& file) {
  json j;
  j["file"] = file.filename().string();
  j["sha256"] = sha256_file(file);
  return j;
}

std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Renders rows as left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line.append(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

Label require_label(const std::string& text) {
  auto l = parse_label(text);
  if (!l) throw Error("unknown label '" + text + "'");
  return *l;
}

// The part shared by every row; mixed matrices are rejected.
Part matrix_part(const FeatureMatrix& m, const fs::path& file) {
  if (m.rows.empty()) throw Error(file.string() + ": matrix has no rows");
  const Part p = m.rows.front().part;
  for (const auto& r : m.rows)
    if (r.part != p) throw Error(file.string() + ": rows mix title and body parts");
  return p;
}

std::vector<Label> present_labels(const FeatureMatrix& m) {
  std::vector<Label> out;
  for (Label l : kAllLabels)
    if (std::any_of(m.rows.begin(), m.rows.end(), [&](const auto& r) { return r.label == l; }))
      out.push_back(l);
  return out;
}

bool any_degenerate(const OrderingReport& r) {
  return std::any_of(r.rows.begin(), r.rows.end(), [](const auto& t) { return t.degenerate; });
}

json result_json(const TestResult& t, const OrderingReport& r) {
  json j;
  j["feature"] = t.feature;
  j["test"] = to_string(t.test_used);
  j["statistic"] = number(t.statistic);
  j["p"] = number(t.p_value);
  j["ordering"] = t.ordering;
  j["significant"] = t.significant;
  j["bold"] = r.is_bold(t);
  j["degenerate"] = t.degenerate;
  json means = json::array();
  for (const auto& g : t.group_means)
    means.push_back({{"label", to_string(g.label)}, {"mean", number(g.mean)}, {"n", g.n}});
  j["means"] = means;
  return j;
}

std::string ordering_table(const OrderingReport& r, bool significant_only) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"feature", "ordering", "test", "statistic", "p", "bold"});
  for (const auto& t : r.rows) {
    if (significant_only && !t.significant) continue;
    rows.push_back({t.feature, t.ordering, to_string(t.test_used), fixed(t.statistic, 4),
                    fixed(t.p_value, 4), r.is_bold(t) ? "*" : ""});
  }
  return render_table(rows);
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string sha256_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

fs::path default_resource_dir() {
  if (const char* env = std::getenv("NEWSSTYLE_RESOURCES"); env && *env) return env;
  const fs::path build_dir = NEWSSTYLE_DEFAULT_RESOURCE_DIR;
  if (!build_dir.empty() && fs::exists(build_dir / "tagger.model")) return build_dir;
  return NEWSSTYLE_INSTALL_RESOURCE_DIR;
}

// ---------------------------------------------------------------------------

int cmd_ingest(const IngestConfig& c) {
  LoadResult loaded;
  try {
    loaded = load_corpus(c.corpus, c.dataset_id);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const Corpus& corpus = loaded.corpus;
  const ValidationReport v = validate_corpus(corpus);
  ensure_dir(c.out);

  json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["kind"] = "manifest";
  manifest["dataset_id"] = c.dataset_id;
  json counts;
  for (Label l : allowed_labels(c.dataset_id)) counts[to_string(l)] = corpus.manifest.count(l);
  manifest["counts"] = counts;
  manifest["total"] = corpus.manifest.total();
  json docs = json::array();
  std::string digest_input;
  for (const auto& d : corpus.documents) {
    const std::string h = sha256_hex(d.title + "\n\n" + d.body);
    docs.push_back({{"id", d.id},
                    {"label", to_string(d.label)},
                    {"source", d.source},
                    {"title_bytes", d.title.size()},
                    {"body_bytes", d.body.size()},
                    {"sha256", h}});
    digest_input += std::string(to_string(d.label)) + "/" + d.id + "\t" + h + "\n";
  }
  manifest["corpus_sha256"] = sha256_hex(digest_input);
  manifest["documents"] = docs;
  write_json(c.out / "manifest.json", manifest);

  json val;
  val["schema_version"] = kSchemaVersion;
  val["kind"] = "validation";
  val["dataset_id"] = c.dataset_id;
  val["clean"] = v.clean() && loaded.issues.empty();
  val["duplicate_ids"] = v.duplicate_ids;
  val["empty_bodies"] = v.empty_bodies;
  val["illegal_labels"] = v.illegal_labels;
  val["zero_sentence_bodies"] = v.zero_sentence_bodies;
  val["manifest_mismatch"] = v.manifest_mismatch;
  json issues = json::array();
  for (const auto& i : loaded.issues)
    issues.push_back({{"file", fs::relative(i.file, c.corpus).generic_string()},
                      {"message", i.message}});
  val["load_issues"] = issues;
  write_json(c.out / "validation.json", val);

  std::cout << "dataset " << c.dataset_id << ":";
  for (Label l : allowed_labels(c.dataset_id))
    std::cout << " " << to_string(l) << "=" << corpus.manifest.count(l);
  std::cout << " total=" << corpus.manifest.total() << "\n";
  for (const auto& i : loaded.issues)
    std::cerr << "warning: " << i.file.string() << ": " << i.message << "\n";
  for (const auto& id : v.zero_sentence_bodies)
    std::cerr << "warning: " << id << ": body has no sentences\n";

  const bool fatal = !v.duplicate_ids.empty() || !v.illegal_labels.empty() ||
                     !v.empty_bodies.empty() || v.manifest_mismatch;
  return fatal ? kInputError : kOk;
}

// ---------------------------------------------------------------------------

int cmd_extract(const ExtractConfig& c) {
  const auto part = parse_part(c.part);
  if (!part) throw Error("--part must be title or body, got '" + c.part + "'");
  LoadResult loaded;
  try {
    loaded = load_corpus(c.corpus, c.dataset_id);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const fs::path res_dir = c.resources.empty() ? default_resource_dir() : c.resources;
  const Resources res = Resources::load(res_dir);

  std::vector<const Document*> docs;
  std::size_t skipped = 0;
  for (const auto& d : loaded.corpus.documents) {
    const std::string& text = *part == Part::title ? d.title : d.body;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
      ++skipped;
      continue;
    }
    docs.push_back(&d);
  }

  std::vector<FeatureVector> vectors(docs.size());
  parallel_for(docs.size(), c.jobs, [&](std::size_t i) {
    const Document& d = *docs[i];
    const std::string stem = d.id + "." + to_string(*part);
    PartAnalysis a;
    if (c.tags_dir && fs::exists(*c.tags_dir / (stem + ".tags")))
      a = analysis_from_tagged(load_pretagged(*c.tags_dir / (stem + ".tags")));
    else
      a = analyze_part(*part == Part::title ? d.title : d.body, *part, res);
    if (c.trees_dir && fs::exists(*c.trees_dir / (stem + ".trees")))
      a.trees = read_bracketed_trees(*c.trees_dir / (stem + ".trees"));
    vectors[i] = extract_all(d, *part, a, res);
    if (c.with_pct) add_percentages(vectors[i]);
  });

  std::vector<std::string> columns = feature_catalog();
  if (c.with_pct)
    for (const auto& f : category_features()) columns.push_back(f + "_pct");
  const FeatureMatrix m = make_matrix(vectors, columns);
  if (c.out.has_parent_path()) ensure_dir(c.out.parent_path());
  write_matrix(m, c.out);

  std::size_t all_undefined = 0;
  for (const auto& r : m.rows)
    if (std::none_of(r.values.begin(), r.values.end(), [](const auto& v) { return v.has_value(); }))
      ++all_undefined;
  std::cout << "extracted " << m.rows.size() << " rows x " << m.features.size()
            << " features (" << c.part << ")";
  if (skipped) std::cout << ", skipped " << skipped << " empty " << c.part << "s";
  std::cout << "\n";
  if (all_undefined * 10 > m.rows.size()) {
    std::cerr << "error: " << all_undefined << " of " << m.rows.size()
              << " rows have no defined feature\n";
    return kInputError;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const AnalyzeConfig& c) {
  if (!(c.alpha > 0 && c.alpha <= 0.5)) throw Error("--alpha must lie in (0, 0.5]");
  const FeatureMatrix m = read_matrix(c.matrix);
  const Part part = matrix_part(m, c.matrix);
  std::vector<Label> labels;
  for (const auto& g : c.groups) labels.push_back(require_label(g));
  if (labels.empty()) labels = present_labels(m);
  if (labels.size() < 2) throw Error("need at least two groups to compare");

  ReportOptions opts;
  opts.alpha = c.alpha;
  opts.bold_threshold = c.bold_threshold;
  opts.bonferroni = c.bonferroni;
  const OrderingReport r = build_ordering_report(m, labels, c.dataset_id, part, opts, c.jobs);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "ordering";
  j["dataset_id"] = r.dataset_id;
  j["part"] = to_string(r.part);
  json groups = json::array();
  for (Label l : r.labels) groups.push_back(to_string(l));
  j["groups"] = groups;
  j["alpha"] = r.alpha;
  j["effective_alpha"] = r.effective_alpha;
  j["bold_threshold"] = r.bold_threshold;
  j["bonferroni"] = r.bonferroni;
  j["input"] = file_ref(c.matrix);
  json rows = json::array();
  for (const auto& t : r.rows) rows.push_back(result_json(t, r));
  j["features"] = rows;
  json skipped = json::array();
  for (const auto& t : r.skipped)
    skipped.push_back({{"feature", t.feature}, {"reason", t.skipped.value_or("")}});
  j["skipped"] = skipped;

  ensure_dir(c.out);
  write_json(c.out / "ordering.json", j);

  std::ostringstream txt;
  txt << "Data set " << r.dataset_id << ", " << to_string(r.part) << ": features that differ"
      << " (alpha " << format_real(r.effective_alpha) << ", * p < "
      << format_real(r.bold_threshold) << ")\n\n";
  txt << ordering_table(r, true);
  txt << "\nAll features\n\n" << ordering_table(r, false);
  if (!r.skipped.empty()) {
    txt << "\nSkipped\n\n";
    std::vector<std::vector<std::string>> rows_txt{{"feature", "reason"}};
    for (const auto& t : r.skipped) rows_txt.push_back({t.feature, t.skipped.value_or("")});
    txt << render_table(rows_txt);
  }
  write_text(c.out / "ordering.txt", txt.str());

  const auto n_sig = std::count_if(r.rows.begin(), r.rows.end(),
                                   [](const auto& t) { return t.significant; });
  std::cout << n_sig << " of " << r.rows.size() << " features differ; " << r.skipped.size()
            << " skipped\n";
  if (any_degenerate(r)) {
    std::cerr << "warning: degenerate statistics for some features\n";
    if (c.strict) return kDegenerate;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_classify(const ClassifyConfig& c) {
  const auto colon = c.pair.find(':');
  if (colon == std::string::npos) throw Error("--pair must look like fake:real");
  const Label positive = require_label(c.pair.substr(0, colon));
  const Label negative = require_label(c.pair.substr(colon + 1));
  if (positive == negative) throw Error("--pair needs two different labels");
  if (c.preset.has_value() == c.top_k.has_value())
    throw Error("give exactly one of --preset or --top-k");
  if (c.folds < 2) throw Error("--folds must be at least 2");

  const FeatureMatrix m = read_matrix(c.matrix);
  const Part part = matrix_part(m, c.matrix);

  json selection;
  std::vector<std::string> features;
  bool degenerate = false;
  if (c.preset) {
    features = preset_features(*c.preset);
    selection["mode"] = "preset";
    selection["name"] = *c.preset;
  } else {
    ReportOptions opts;
    opts.alpha = c.alpha;
    const std::vector<Label> pair{positive, negative};
    const OrderingReport r = build_ordering_report(m, pair, c.dataset_id, part, opts, c.jobs);
    degenerate = any_degenerate(r);
    const RankedFeatures ranked = rank_features(r.rows, *c.top_k, c.alpha);
    features = ranked.names;
    selection["mode"] = "top-k";
    selection["k"] = *c.top_k;
    selection["alpha"] = c.alpha;
    if (ranked.warning) {
      selection["warning"] = *ranked.warning;
      std::cerr << "warning: " << *ranked.warning << "\n";
    }
    if (features.empty()) {
      std::cerr << "error: no feature separates " << c.pair << " at alpha " << c.alpha << "\n";
      return kInputError;
    }
  }
  std::vector<std::size_t> cols;
  for (const auto& f : features) cols.push_back(m.column(f));

  RawMatrix X;
  std::vector<Label> y;
  for (const auto& r : m.rows) {
    if (r.label != positive && r.label != negative) continue;
    std::vector<std::optional<double>> row;
    for (auto col : cols) row.push_back(r.values[col]);
    X.push_back(std::move(row));
    y.push_back(r.label);
  }
  if (c.shuffle_labels) seeded_shuffle(std::span<Label>(y), c.seed ^ 0x5eed5eedULL);

  SvmOptions svm;
  svm.C = c.C;
  svm.tol = c.tol;
  svm.max_epochs = c.max_epochs;
  svm.seed = c.seed;
  const CvReport cv = cross_validate(X, y, positive, negative, features, c.folds, svm, c.jobs);
  const SvmModel model = fit_model(X, y, positive, negative, features, svm);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "cv";
  j["dataset_id"] = c.dataset_id;
  j["part"] = to_string(part);
  j["pair"] = std::string(to_string(positive)) + ":" + to_string(negative);
  j["positive"] = to_string(positive);
  j["negative"] = to_string(negative);
  j["selection"] = selection;
  j["features"] = features;
  j["folds"] = cv.k;
  j["seed"] = cv.seed;
  j["C"] = c.C;
  j["tol"] = c.tol;
  j["max_epochs"] = c.max_epochs;
  j["shuffle_labels"] = c.shuffle_labels;
  j["n_positive"] = cv.n_positive;
  j["n_negative"] = cv.n_negative;
  json folds = json::array();
  for (double a : cv.fold_accuracies) folds.push_back(a);
  j["fold_accuracies"] = folds;
  j["mean_accuracy"] = cv.mean_accuracy;
  j["baseline"] = cv.baseline;
  j["final_model"] = {{"converged", model.svm.converged}, {"epochs", model.svm.epochs}};
  j["input"] = file_ref(c.matrix);

  ensure_dir(c.out);
  write_json(c.out / "cv.json", j);
  model.save(c.out / "model.txt");

  std::ostringstream txt;
  txt << "Data set " << c.dataset_id << ", " << to_string(part) << ", " << to_string(positive)
      << " vs " << to_string(negative) << (c.shuffle_labels ? " (shuffled labels)" : "") << "\n";
  txt << "features: ";
  for (std::size_t i = 0; i < features.size(); ++i) txt << (i ? ", " : "") << features[i];
  txt << "\n\n";
  std::vector<std::vector<std::string>> rows{{"fold", "accuracy"}};
  for (std::size_t i = 0; i < cv.fold_accuracies.size(); ++i)
    rows.push_back({std::to_string(i + 1), fixed(100 * cv.fold_accuracies[i], 1) + "%"});
  rows.push_back({"mean", fixed(100 * cv.mean_accuracy, 1) + "%"});
  rows.push_back({"baseline", fixed(100 * cv.baseline, 1) + "%"});
  txt << render_table(rows);
  write_text(c.out / "cv.txt", txt.str());

  std::cout << c.pair << " " << to_string(part) << ": mean accuracy "
            << fixed(100 * cv.mean_accuracy, 1) << "% (baseline " << fixed(100 * cv.baseline, 1)
            << "%)\n";
  if (degenerate) {
    std::cerr << "warning: degenerate statistics during feature selection\n";
    if (c.strict) return kDegenerate;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_report(const ReportConfig& c) {
  if (c.matrices.empty() && c.analyses.empty() && c.cv_reports.empty())
    throw Error("report needs at least one --matrix, --analysis or --cv input");
  ensure_dir(c.out);

  json inputs = json::array();
  auto add_input = [&](const char* role, const fs::path& p) {
    json ref = file_ref(p);
    ref["role"] = role;
    inputs.push_back(ref);
  };

  // Confidence intervals per matrix, feature and label.
  std::ostringstream ci_csv;
  ci_csv << "matrix,part,feature,label,n,mean,sd,lower,upper\n";
  json ci_rows = json::array();
  for (const auto& path : c.matrices) {
    add_input("matrix", path);
    const FeatureMatrix m = read_matrix(path);
    const Part part = matrix_part(m, path);
    const std::string name = path.stem().string();
    for (const auto& f : c.ci_features) {
      if (!std::count(m.features.begin(), m.features.end(), f)) {
        std::cerr << "warning: " << path.filename().string() << " has no column " << f << "\n";
        continue;
      }
      const std::size_t col = m.column(f);
      for (Label l : present_labels(m)) {
        std::vector<double> vals;
        for (const auto& r : m.rows)
          if (r.label == l && r.values[col]) vals.push_back(*r.values[col]);
        const auto ci = mean_confidence_interval(vals, c.level);
        ci_csv << name << "," << to_string(part) << "," << f << "," << to_string(l) << ","
               << vals.size();
        json row{{"matrix", name}, {"part", to_string(part)}, {"feature", f},
                 {"label", to_string(l)}, {"n", vals.size()}};
        if (ci) {
          ci_csv << "," << format_real(ci->mean) << "," << format_real(ci->sd) << ","
                 << format_real(ci->lower) << "," << format_real(ci->upper) << "\n";
          row["mean"] = ci->mean;
          row["sd"] = ci->sd;
          row["lower"] = ci->lower;
          row["upper"] = ci->upper;
        } else {
          ci_csv << ",NA,NA,NA,NA\n";
        }
        ci_rows.push_back(row);
      }
    }
  }
  write_text(c.out / "ci.csv", ci_csv.str());

  // Ordering tables: one column per analysis, rows in catalog order.
  std::vector<json> analyses;
  for (const auto& path : c.analyses) {
    add_input("analysis", path);
    json a = read_json(path);
    if (a.value("kind", "") != "ordering")
      throw Error(path.string() + ": not an ordering report");
    analyses.push_back(std::move(a));
  }
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& f : feature_catalog()) order.push_back(f), seen.insert(f);
  for (const auto& a : analyses)
    for (const auto& row : a["features"]) {
      const auto f = row["feature"].get<std::string>();
      if (seen.insert(f).second) order.push_back(f);
    }
  json orderings = json::array();
  std::vector<std::vector<std::string>> otable;
  {
    std::vector<std::string> head{"feature"};
    for (const auto& a : analyses)
      head.push_back("data set " + std::to_string(a["dataset_id"].get<int>()) + " " +
                     a["part"].get<std::string>());
    otable.push_back(head);
  }
  for (const auto& f : order) {
    std::vector<std::string> cells{f};
    bool any = false;
    json entry{{"feature", f}};
    json per = json::array();
    for (const auto& a : analyses) {
      const json* hit = nullptr;
      for (const auto& row : a["features"])
        if (row["feature"] == f) hit = &row;
      if (hit && (*hit)["significant"].get<bool>()) {
        any = true;
        const double p = read_number((*hit)["p"]);
        const bool bold = (*hit)["bold"].get<bool>();
        cells.push_back((*hit)["ordering"].get<std::string>() + "  " + fixed(p, 4) +
                        (bold ? "*" : ""));
        per.push_back({{"dataset_id", a["dataset_id"]}, {"part", a["part"]},
                       {"ordering", (*hit)["ordering"]}, {"p", (*hit)["p"]}, {"bold", bold}});
      } else {
        cells.push_back("-");
        per.push_back(nullptr);
      }
    }
    if (!any) continue;
    entry["columns"] = per;
    orderings.push_back(entry);
    otable.push_back(cells);
  }

  // Classification summary.
  json classification = json::array();
  std::vector<std::vector<std::string>> ctable{
      {"data set", "part", "pair", "features", "accuracy", "baseline"}};
  for (const auto& path : c.cv_reports) {
    add_input("cv", path);
    const json cv = read_json(path);
    if (cv.value("kind", "") != "cv") throw Error(path.string() + ": not a cv report");
    std::string feats;
    for (const auto& f : cv["features"]) feats += (feats.empty() ? "" : ",") + f.get<std::string>();
    classification.push_back({{"dataset_id", cv["dataset_id"]}, {"part", cv["part"]},
                              {"pair", cv["pair"]}, {"features", cv["features"]},
                              {"mean_accuracy", cv["mean_accuracy"]},
                              {"baseline", cv["baseline"]}});
    ctable.push_back({std::to_string(cv["dataset_id"].get<int>()),
                      cv["part"].get<std::string>(), cv["pair"].get<std::string>(), feats,
                      fixed(100 * cv["mean_accuracy"].get<double>(), 1) + "%",
                      fixed(100 * cv["baseline"].get<double>(), 1) + "%"});
  }

  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "report";
  j["inputs"] = inputs;
  j["confidence_level"] = c.level;
  j["orderings"] = orderings;
  j["classification"] = classification;
  j["confidence_intervals"] = ci_rows;
  write_json(c.out / "report.json", j);

  std::ostringstream txt;
  if (!analyses.empty())
    txt << "Features that differ between groups (* marks p < bold threshold)\n\n"
        << render_table(otable) << "\n";
  if (!c.cv_reports.empty())
    txt << "Cross-validated linear SVM accuracy\n\n" << render_table(ctable) << "\n";
  txt << "Inputs\n\n";
  std::vector<std::vector<std::string>> itable{{"role", "file", "sha256"}};
  for (const auto& in : inputs)
    itable.push_back({in["role"].get<std::string>(), in["file"].get<std::string>(),
                      in["sha256"].get<std::string>()});
  txt << render_table(itable);
  write_text(c.out / "report.txt", txt.str());
  std::cout << "report written to " << c.out.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_import(const ImportConfig& c) {
  const std::size_t n = import_title_body_layout(c.src, c.out);
  std::cout << "imported " << n << " articles\n";
  return kOk;
}

int cmd_train_tagger(const TrainTaggerConfig& c) {
  auto sentences = load_pretagged(c.corpus);
  std::vector<TaggedSentence> train, held;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (c.heldout_every > 0 && (i + 1) % static_cast<std::size_t>(c.heldout_every) == 0)
      held.push_back(std::move(sentences[i]));
    else
      train.push_back(std::move(sentences[i]));
  }
  TrainOptions opts;
  opts.epochs = c.epochs;
  opts.seed = c.seed;
  opts.version = "newsstyle-ap-e" + std::to_string(c.epochs) + "-s" + std::to_string(c.seed);
  if (c.closed_class) opts.closed_class = load_closed_class(*c.closed_class);
  const TaggerModel model = train_tagger(train, opts);
  if (c.out.has_parent_path()) ensure_dir(c.out.parent_path());
  model.save(c.out);
  std::cout << "trained on " << train.size() << " sentences, " << model.weights.size()
            << " features\n";
  if (!held.empty())
    std::cout << "held-out accuracy " << fixed(100 * tagging_accuracy(held, model), 2)
              << "% on " << held.size() << " sentences\n";
  return kOk;
}

}  // namespace newsstyle::cli
