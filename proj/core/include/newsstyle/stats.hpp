#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "newsstyle/corpus.hpp"
#include "newsstyle/features.hpp"

namespace newsstyle {

// D'Agostino-Pearson K² omnibus test. Samples smaller than
// `kMinNormalitySample` are classified non-normal without testing.
inline constexpr std::size_t kMinNormalitySample = 20;

struct NormalityResult {
  double statistic = 0;  // K²
  double p = 0;
  bool normal = false;
  bool degenerate = false;  // zero variance
  bool tested = false;      // false when the sample was too small
};

NormalityResult normality_test(std::span<const double> sample, double alpha = 0.05);

struct AnovaResult {
  double F = 0;
  double p = 1;
  int df_between = 0;
  int df_within = 0;
  bool degenerate = false;  // zero within-group variance
};

// Requires at least two groups of at least two values each.
AnovaResult anova_oneway(std::span<const std::vector<double>> groups);

struct RankSumResult {
  double z = 0;
  double p = 1;
  double W = 0;  // rank sum of the first sample
  bool degenerate = false;  // every pooled value tied
};

// Two-sided Wilcoxon rank-sum, normal approximation with tie-corrected
// variance and no continuity correction.
RankSumResult ranksum(std::span<const double> a, std::span<const double> b);

struct KruskalResult {
  double H = 0;
  double p = 1;
  int df = 0;
  bool degenerate = false;
};

// Tie-corrected Kruskal-Wallis H; at least two non-empty groups.
KruskalResult kruskal_wallis(std::span<const std::vector<double>> groups);

// Midranks (1-based) of `values`.
std::vector<double> midranks(std::span<const double> values);

enum class TestKind { anova, ranksum, kruskal };
const char* to_string(TestKind kind);

struct GroupSample {
  Label label = Label::real;
  std::vector<double> values;
};

struct GroupMean {
  Label label = Label::real;
  double mean = 0;
  std::size_t n = 0;
};

struct TestResult {
  std::string feature;
  TestKind test_used = TestKind::ranksum;
  double statistic = 0;
  double p_value = 1;
  std::vector<GroupMean> group_means;  // in input group order
  std::string ordering;
  bool significant = false;
  bool degenerate = false;
  // Set when the comparison could not run; the numeric fields are unset.
  std::optional<std::string> skipped;
};

struct CompareOptions {
  double alpha = 0.05;
  double normality_alpha = 0.05;
};

// Routes to ANOVA when every group passes the normality test, otherwise to
// rank-sum (two groups) or Kruskal-Wallis (three or more).
TestResult compare_feature(const std::string& feature, std::span<const GroupSample> groups,
                           const CompareOptions& options = {});

// Groups sorted by mean, descending; adjacent pairs joined by ">" when their
// rank-sum p is below `alpha`, else "=". Names use display_name().
std::string derive_ordering(std::span<const GroupSample> groups,
                            std::span<const GroupMean> means, double alpha);

struct RankedFeatures {
  std::vector<std::string> names;
  std::optional<std::string> warning;  // fewer than k significant features
};

// Sorts by p ascending, |statistic| descending, then name; keeps the first k
// with p < alpha. Skipped results are ignored.
RankedFeatures rank_features(std::span<const TestResult> results, std::size_t k,
                             double alpha = 0.05);

struct ReportOptions {
  double alpha = 0.05;
  double bold_threshold = 0.005;
  bool bonferroni = false;
  double normality_alpha = 0.05;
};

struct OrderingReport {
  Part part = Part::body;
  int dataset_id = 0;
  double alpha = 0.05;
  double effective_alpha = 0.05;  // alpha after the optional correction
  double bold_threshold = 0.005;
  bool bonferroni = false;
  std::vector<Label> labels;
  std::vector<TestResult> rows;     // sorted by p ascending, then name
  std::vector<TestResult> skipped;  // in matrix column order

  bool is_bold(const TestResult& r) const { return r.p_value < bold_threshold; }
};

// Compares every matrix column across the requested labels. Undefined cells
// are dropped per feature. Column comparisons run on up to `jobs` threads;
// the result does not depend on `jobs`.
OrderingReport build_ordering_report(const FeatureMatrix& m, std::span<const Label> labels,
                                     int dataset_id, Part part,
                                     const ReportOptions& options = {}, unsigned jobs = 1);

struct ConfidenceInterval {
  double mean = 0;
  double lower = 0;
  double upper = 0;
  double sd = 0;
  std::size_t n = 0;
};

// mean ± t_{(1+level)/2, n-1} · s / √n; nullopt for fewer than two values.
std::optional<ConfidenceInterval> mean_confidence_interval(std::span<const double> values,
                                                           double level = 0.95);

}  // namespace newsstyle
