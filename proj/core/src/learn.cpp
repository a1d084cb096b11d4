#include "newsstyle/learn.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"
#include "newsstyle/rng.hpp"

namespace newsstyle {

// ---------------------------------------------------------------------------
// Standardizer

Standardizer Standardizer::fit(const RawMatrix& X) {
  if (X.empty()) throw Error("cannot fit a standardizer on an empty matrix");
  const auto d = X.front().size();
  Standardizer s;
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 1.0);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<double> col;
    for (const auto& row : X) {
      if (row.size() != d) throw Error("ragged matrix passed to standardizer");
      if (row[c]) col.push_back(*row[c]);
    }
    if (col.empty()) continue;
    const bool constant =
        std::all_of(col.begin(), col.end(), [&](double v) { return v == col.front(); });
    if (constant) {
      s.mean[c] = col.front();
      s.scale[c] = kMinScale;
      continue;
    }
    double m = 0;
    for (const double v : col) m += v;
    m /= static_cast<double>(col.size());
    double ss = 0;
    for (const double v : col) ss += (v - m) * (v - m);
    s.mean[c] = m;
    s.scale[c] = std::max(kMinScale, std::sqrt(ss / static_cast<double>(col.size())));
  }
  return s;
}

std::vector<double> Standardizer::transform_row(
    std::span<const std::optional<double>> row) const {
  if (row.size() != mean.size())
    throw Error("row has " + std::to_string(row.size()) + " values, standardizer expects " +
                std::to_string(mean.size()));
  std::vector<double> out(row.size());
  for (std::size_t c = 0; c < row.size(); ++c)
    out[c] = row[c] ? (*row[c] - mean[c]) / scale[c] : 0.0;
  return out;
}

DenseMatrix Standardizer::transform(const RawMatrix& X) const {
  DenseMatrix out;
  out.reserve(X.size());
  for (const auto& row : X) out.push_back(transform_row(row));
  return out;
}

// ---------------------------------------------------------------------------
// Dual coordinate descent

double LinearSvm::decision(std::span<const double> x) const {
  if (x.size() != weights.size()) throw Error("feature count does not match the model");
  double f = bias;
  for (std::size_t j = 0; j < x.size(); ++j) f += weights[j] * x[j];
  return f;
}

LinearSvm train_svm(const DenseMatrix& X, std::span<const int> y, const SvmOptions& options,
                    SvmTrace* trace) {
  if (X.size() != y.size()) throw Error("train_svm: X and y differ in length");
  if (X.empty()) throw Error("train_svm: empty training set");
  if (!(options.C > 0)) throw Error("train_svm: C must be positive");
  if (!(options.tol > 0)) throw Error("train_svm: tol must be positive");
  if (options.max_epochs < 1) throw Error("train_svm: max_epochs must be at least 1");
  const auto d = X.front().size();
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i].size() != d) throw Error("train_svm: ragged rows");
    for (const double v : X[i])
      if (!std::isfinite(v)) throw Error("train_svm: non-finite feature value");
    if (y[i] == 1)
      pos = true;
    else if (y[i] == -1)
      neg = true;
    else
      throw Error("train_svm: labels must be +1 or -1");
  }
  if (!pos || !neg) throw Error("train_svm: both classes must be present");

  const std::size_t n = X.size();
  const double C = options.C;
  // w has d feature weights followed by the bias weight.
  std::vector<double> w(d + 1, 0.0);
  std::vector<double> alpha(n, 0.0);
  std::vector<double> qii(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 1.0;
    for (const double v : X[i]) s += v * v;
    qii[i] = s;
  }
  auto dot = [&](std::size_t i) {
    double s = w[d];
    for (std::size_t j = 0; j < d; ++j) s += w[j] * X[i][j];
    return s;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 eng(options.seed);

  LinearSvm model;
  for (int epoch = 0; epoch < options.max_epochs; ++epoch) {
    seeded_shuffle(std::span<std::size_t>(order), eng);
    double max_pg = 0;
    for (const auto i : order) {
      const double yi = y[i];
      const double g = yi * dot(i) - 1.0;
      double pg = g;
      if (alpha[i] == 0)
        pg = std::min(g, 0.0);
      else if (alpha[i] == C)
        pg = std::max(g, 0.0);
      max_pg = std::max(max_pg, std::fabs(pg));
      if (std::fabs(pg) > 1e-12) {
        const double old = alpha[i];
        alpha[i] = std::min(std::max(old - g / qii[i], 0.0), C);
        const double delta = (alpha[i] - old) * yi;
        for (std::size_t j = 0; j < d; ++j) w[j] += delta * X[i][j];
        w[d] += delta;
      }
    }
    model.epochs = epoch + 1;
    if (trace) {
      double ww = 0, sum_alpha = 0;
      for (const double v : w) ww += v * v;
      for (const double a : alpha) {
        sum_alpha += a;
        if (a < 0 || a > C) trace->alpha_out_of_box = true;
      }
      trace->dual_objective.push_back(0.5 * ww - sum_alpha);
      trace->max_violation.push_back(max_pg);
    }
    if (max_pg < options.tol) {
      model.converged = true;
      break;
    }
  }
  model.weights.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  model.bias = w[d];
  if (trace) trace->alpha = alpha;
  return model;
}

// ---------------------------------------------------------------------------
// Pipeline model

namespace {

int sign_of(Label l, Label positive, Label negative) {
  if (l == positive) return 1;
  if (l == negative) return -1;
  return 0;
}

std::string fmt(double v) { return format_real(v); }

double parse_real(std::string_view s, const std::string& source, std::size_t line) {
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError(source, line, "bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) out.push_back(field);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

}  // namespace

void SvmModel::save(std::ostream& out) const {
  out << "newsstyle-svm-model\t" << kFormatVersion << '\n';
  out << "positive\t" << to_string(positive) << '\n';
  out << "negative\t" << to_string(negative) << '\n';
  out << "C\t" << fmt(options.C) << '\n';
  out << "tol\t" << fmt(options.tol) << '\n';
  out << "max_epochs\t" << options.max_epochs << '\n';
  out << "seed\t" << options.seed << '\n';
  out << "epochs\t" << svm.epochs << '\n';
  out << "converged\t" << (svm.converged ? 1 : 0) << '\n';
  out << "bias\t" << fmt(svm.bias) << '\n';
  out << "features\t" << features.size() << '\n';
  for (std::size_t j = 0; j < features.size(); ++j)
    out << features[j] << '\t' << fmt(standardizer.mean[j]) << '\t'
        << fmt(standardizer.scale[j]) << '\t' << fmt(svm.weights[j]) << '\n';
}

void SvmModel::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());
  save(out);
  if (!out) throw Error("write failure on " + file.string());
}

SvmModel SvmModel::load(std::istream& in, const std::string& source) {
  SvmModel m;
  std::string line;
  std::size_t line_no = 0;
  auto field = [&](const char* key) {
    if (!std::getline(in, line)) throw ParseError(source, line_no, "unexpected end of model");
    ++line_no;
    const auto f = split_tabs(line);
    if (f.size() != 2 || f[0] != key)
      throw ParseError(source, line_no, std::string("expected '") + key + "'");
    return f[1];
  };
  if (field("newsstyle-svm-model") != std::to_string(kFormatVersion))
    throw ParseError(source, line_no, "unsupported model version");
  auto label = [&](const char* key) {
    const auto v = field(key);
    const auto l = parse_label(v);
    if (!l) throw ParseError(source, line_no, "unknown label " + v);
    return *l;
  };
  m.positive = label("positive");
  m.negative = label("negative");
  m.options.C = parse_real(field("C"), source, line_no);
  m.options.tol = parse_real(field("tol"), source, line_no);
  m.options.max_epochs = static_cast<int>(parse_real(field("max_epochs"), source, line_no));
  const auto seed = field("seed");
  if (std::from_chars(seed.data(), seed.data() + seed.size(), m.options.seed).ec != std::errc{})
    throw ParseError(source, line_no, "bad seed");
  m.svm.epochs = static_cast<int>(parse_real(field("epochs"), source, line_no));
  m.svm.converged = field("converged") == "1";
  m.svm.bias = parse_real(field("bias"), source, line_no);
  const auto count = static_cast<std::size_t>(parse_real(field("features"), source, line_no));
  for (std::size_t j = 0; j < count; ++j) {
    if (!std::getline(in, line)) throw ParseError(source, line_no, "missing feature line");
    ++line_no;
    const auto f = split_tabs(line);
    if (f.size() != 4) throw ParseError(source, line_no, "expected name, mean, scale, weight");
    m.features.push_back(f[0]);
    m.standardizer.mean.push_back(parse_real(f[1], source, line_no));
    m.standardizer.scale.push_back(parse_real(f[2], source, line_no));
    m.svm.weights.push_back(parse_real(f[3], source, line_no));
  }
  return m;
}

SvmModel SvmModel::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  return load(in, file.string());
}

SvmModel fit_model(const RawMatrix& X, std::span<const Label> y, Label positive,
                   Label negative, std::vector<std::string> features,
                   const SvmOptions& options) {
  if (positive == negative) throw Error("positive and negative labels must differ");
  if (X.size() != y.size()) throw Error("fit_model: X and y differ in length");
  RawMatrix rows;
  std::vector<int> signs;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const int s = sign_of(y[i], positive, negative);
    if (s == 0) continue;
    rows.push_back(X[i]);
    signs.push_back(s);
  }
  if (rows.empty()) throw Error("fit_model: no rows carry the requested labels");
  SvmModel m;
  m.features = std::move(features);
  m.positive = positive;
  m.negative = negative;
  m.options = options;
  m.standardizer = Standardizer::fit(rows);
  m.svm = train_svm(m.standardizer.transform(rows), signs, options);
  return m;
}

Prediction predict(const SvmModel& m, std::span<const std::optional<double>> row) {
  const auto x = m.standardizer.transform_row(row);
  Prediction p;
  p.decision = m.svm.decision(x);
  p.label = p.decision >= 0 ? m.positive : m.negative;
  return p;
}

// ---------------------------------------------------------------------------
// Evaluation

std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const int> classes,
                                                       std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error("stratified_kfold: k must be at least 2");
  if (classes.size() < k) throw Error("stratified_kfold: fewer samples than folds");
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < classes.size(); ++i) by_class[classes[i]].push_back(i);

  std::mt19937_64 eng(seed);
  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t offset = 0;
  for (auto& [cls, idx] : by_class) {
    seeded_shuffle(std::span<std::size_t>(idx), eng);
    for (std::size_t j = 0; j < idx.size(); ++j) folds[(offset + j) % k].push_back(idx[j]);
    offset = (offset + idx.size()) % k;
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

double majority_baseline(std::span<const int> classes) {
  if (classes.empty()) throw Error("majority_baseline: no labels");
  std::map<int, std::size_t> counts;
  for (const int c : classes) ++counts[c];
  std::size_t best = 0;
  for (const auto& [c, n] : counts) best = std::max(best, n);
  return static_cast<double>(best) / static_cast<double>(classes.size());
}

CvReport cross_validate(const RawMatrix& X, std::span<const Label> y, Label positive,
                        Label negative, std::vector<std::string> features, std::size_t k,
                        const SvmOptions& options, unsigned jobs) {
  if (X.size() != y.size()) throw Error("cross_validate: X and y differ in length");
  if (positive == negative) throw Error("positive and negative labels must differ");
  RawMatrix rows;
  std::vector<int> signs;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const int s = sign_of(y[i], positive, negative);
    if (s == 0) continue;
    rows.push_back(X[i]);
    signs.push_back(s);
  }
  CvReport report;
  report.k = k;
  report.seed = options.seed;
  report.features = features;
  report.positive = positive;
  report.negative = negative;
  report.n_positive = static_cast<std::size_t>(std::count(signs.begin(), signs.end(), 1));
  report.n_negative = signs.size() - report.n_positive;
  if (report.n_positive < k || report.n_negative < k)
    throw Error("cross_validate: need at least " + std::to_string(k) +
                " rows of each label, have " + std::to_string(report.n_positive) + " " +
                to_string(positive) + " and " + std::to_string(report.n_negative) + " " +
                to_string(negative));

  const auto folds = stratified_kfold(signs, k, options.seed);
  report.fold_accuracies.assign(k, 0.0);
  auto run_fold = [&](std::size_t f) {
    std::vector<bool> held(rows.size(), false);
    for (const auto i : folds[f]) held[i] = true;
    RawMatrix train_x;
    std::vector<Label> train_y;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (held[i]) continue;
      train_x.push_back(rows[i]);
      train_y.push_back(signs[i] > 0 ? positive : negative);
    }
    const auto model = fit_model(train_x, train_y, positive, negative, features, options);
    std::size_t correct = 0;
    for (const auto i : folds[f]) {
      const auto p = predict(model, rows[i]);
      if ((p.label == positive) == (signs[i] > 0)) ++correct;
    }
    report.fold_accuracies[f] =
        static_cast<double>(correct) / static_cast<double>(folds[f].size());
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(k)));
  if (jobs == 1) {
    for (std::size_t f = 0; f < k; ++f) run_fold(f);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        try {
          for (std::size_t f; (f = next.fetch_add(1)) < k;) run_fold(f);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  double sum = 0;
  for (const double a : report.fold_accuracies) sum += a;
  report.mean_accuracy = sum / static_cast<double>(k);
  report.baseline = majority_baseline(signs);
  return report;
}

const std::vector<std::string>& preset_features(std::string_view name) {
  static const std::vector<std::string> body4 = {"NN", "TTR", "WC", "quotes"};
  static const std::vector<std::string> title4 = {"per_stop", "NN", "avg_wlen", "FK"};
  if (name == "body4") return body4;
  if (name == "title4") return title4;
  throw Error("unknown feature preset: " + std::string(name));
}

std::vector<std::string> preset_names() { return {"body4", "title4"}; }

}  // namespace newsstyle
