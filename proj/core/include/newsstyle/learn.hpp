#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsstyle/corpus.hpp"

namespace newsstyle {

using RawMatrix = std::vector<std::vector<std::optional<double>>>;
using DenseMatrix = std::vector<std::vector<double>>;

// Per-column z-scoring fitted on training rows. Undefined cells are imputed
// with the column mean, so they map to 0.
struct Standardizer {
  static constexpr double kMinScale = 1e-12;

  std::vector<double> mean;
  std::vector<double> scale;  // population standard deviation, >= kMinScale

  static Standardizer fit(const RawMatrix& X);
  std::vector<double> transform_row(std::span<const std::optional<double>> row) const;
  DenseMatrix transform(const RawMatrix& X) const;
};

struct SvmOptions {
  double C = 1.0;
  double tol = 1e-4;
  int max_epochs = 1000;
  std::uint64_t seed = 1;
};

// Per-epoch record of the optimizer, for property checks.
struct SvmTrace {
  std::vector<double> dual_objective;  // ½‖w‖² − Σα after each epoch
  std::vector<double> max_violation;   // max |projected gradient| seen per epoch
  std::vector<double> alpha;           // final dual variables
  // True when some α left [0, C] after any epoch.
  bool alpha_out_of_box = false;
};

// Weights over the columns of the training matrix; bias is the weight of an
// appended constant-1 column and is regularized with the rest.
struct LinearSvm {
  std::vector<double> weights;
  double bias = 0;
  int epochs = 0;
  bool converged = false;

  double decision(std::span<const double> x) const;
};

// L2-regularized hinge-loss SVM by dual coordinate descent. `y` holds ±1.
// Throws Error when only one class is present or rows are ragged.
LinearSvm train_svm(const DenseMatrix& X, std::span<const int> y,
                    const SvmOptions& options = {}, SvmTrace* trace = nullptr);

// Standardizer + linear SVM over named features for one label pair.
struct SvmModel {
  static constexpr int kFormatVersion = 1;

  std::vector<std::string> features;
  Label positive = Label::fake;  // +1
  Label negative = Label::real;  // -1
  Standardizer standardizer;
  LinearSvm svm;
  SvmOptions options;

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& file) const;
  static SvmModel load(std::istream& in, const std::string& source = {});
  static SvmModel load(const std::filesystem::path& file);
};

SvmModel fit_model(const RawMatrix& X, std::span<const Label> y, Label positive,
                   Label negative, std::vector<std::string> features,
                   const SvmOptions& options = {});

struct Prediction {
  Label label = Label::real;
  double decision = 0;
};

// A decision value of exactly 0 goes to the positive class.
Prediction predict(const SvmModel& m, std::span<const std::optional<double>> row);

// Folds partition the indices; within each class the indices are shuffled
// with `seed` and dealt round-robin, so per-class fold sizes differ by at
// most one. Indices inside a fold are ascending.
std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const int> classes,
                                                       std::size_t k, std::uint64_t seed);

// Largest class frequency over the total.
double majority_baseline(std::span<const int> classes);

struct CvReport {
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0;
  double baseline = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> features;
  Label positive = Label::fake;
  Label negative = Label::real;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
};

// Fits a fresh standardizer and SVM per fold on the training rows only.
// Requires at least k rows of each label. Folds run on up to `jobs` threads;
// the report does not depend on `jobs`.
CvReport cross_validate(const RawMatrix& X, std::span<const Label> y, Label positive,
                        Label negative, std::vector<std::string> features, std::size_t k,
                        const SvmOptions& options = {}, unsigned jobs = 1);

// Named feature sets: "body4" and "title4".
const std::vector<std::string>& preset_features(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace newsstyle
