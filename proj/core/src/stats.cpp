#include "newsstyle/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "newsstyle/error.hpp"
#include "newsstyle/special_functions.hpp"

namespace newsstyle {

namespace {

double mean_of(std::span<const double> v) {
  double s = 0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Σ (t³ - t) over tie groups of the pooled sample.
double tie_sum(std::vector<double> pooled) {
  std::sort(pooled.begin(), pooled.end());
  double sum = 0;
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
    const auto t = static_cast<double>(j - i);
    sum += t * t * t - t;
    i = j;
  }
  return sum;
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + 1 + j);  // mean of i+1 .. j
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

NormalityResult normality_test(std::span<const double> sample, double alpha) {
  NormalityResult r;
  const auto n = sample.size();
  if (n < kMinNormalitySample) return r;
  r.tested = true;

  const double m = mean_of(sample);
  double m2 = 0, m3 = 0, m4 = 0;
  for (const double x : sample) {
    const double d = x - m;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const auto nd = static_cast<double>(n);
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;
  if (m2 <= std::numeric_limits<double>::min() * 1e4 ||
      m2 <= 1e-28 * std::max(1.0, m * m)) {
    r.degenerate = true;
    return r;
  }

  // Skewness transformed to a standard normal deviate.
  const double b1 = m3 / std::pow(m2, 1.5);
  double y = b1 * std::sqrt((nd + 1) * (nd + 3) / (6.0 * (nd - 2)));
  const double beta2 = 3.0 * (nd * nd + 27 * nd - 70) * (nd + 1) * (nd + 3) /
                       ((nd - 2) * (nd + 5) * (nd + 7) * (nd + 9));
  const double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
  const double delta = 1.0 / std::sqrt(0.5 * std::log(w2));
  const double alpha_s = std::sqrt(2.0 / (w2 - 1.0));
  if (y == 0) y = 1;
  const double ya = y / alpha_s;
  const double z_skew = delta * std::log(ya + std::sqrt(ya * ya + 1.0));

  // Kurtosis transformed to a standard normal deviate.
  const double b2 = m4 / (m2 * m2);
  const double e = 3.0 * (nd - 1) / (nd + 1);
  const double var_b2 =
      24.0 * nd * (nd - 2) * (nd - 3) / ((nd + 1) * (nd + 1) * (nd + 3) * (nd + 5));
  const double x = (b2 - e) / std::sqrt(var_b2);
  const double sqrt_beta1 = 6.0 * (nd * nd - 5 * nd + 2) / ((nd + 7) * (nd + 9)) *
                            std::sqrt(6.0 * (nd + 3) * (nd + 5) / (nd * (nd - 2) * (nd - 3)));
  const double a = 6.0 + 8.0 / sqrt_beta1 *
                             (2.0 / sqrt_beta1 + std::sqrt(1.0 + 4.0 / (sqrt_beta1 * sqrt_beta1)));
  const double term1 = 1.0 - 2.0 / (9.0 * a);
  const double denom = 1.0 + x * std::sqrt(2.0 / (a - 4.0));
  if (denom == 0) {
    r.degenerate = true;
    return r;
  }
  const double term2 =
      (denom > 0 ? 1.0 : -1.0) * std::cbrt((1.0 - 2.0 / a) / std::fabs(denom));
  const double z_kurt = (term1 - term2) / std::sqrt(2.0 / (9.0 * a));

  r.statistic = z_skew * z_skew + z_kurt * z_kurt;
  r.p = std::exp(-0.5 * r.statistic);  // chi-square sf with 2 df
  r.normal = r.p >= alpha;
  return r;
}

AnovaResult anova_oneway(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw Error("anova_oneway: need at least two groups");
  std::size_t total = 0;
  double grand = 0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw Error("anova_oneway: every group needs at least two values");
    total += g.size();
    for (const double x : g) grand += x;
  }
  grand /= static_cast<double>(total);

  double ss_between = 0, ss_within = 0;
  for (const auto& g : groups) {
    const double m = mean_of(g);
    ss_between += static_cast<double>(g.size()) * (m - grand) * (m - grand);
    for (const double x : g) ss_within += (x - m) * (x - m);
  }

  AnovaResult r;
  r.df_between = static_cast<int>(groups.size()) - 1;
  r.df_within = static_cast<int>(total - groups.size());
  // Relative threshold so that rounding noise in identical groups reads as 0.
  double scale = 0;
  for (const auto& g : groups)
    for (const double x : g) scale = std::max(scale, std::fabs(x - grand));
  const double noise = 1e-24 * scale * scale * static_cast<double>(total);
  if (ss_within <= noise) {
    r.degenerate = true;
    if (ss_between <= noise) {
      r.F = 0;
      r.p = 1;
    } else {
      r.F = std::numeric_limits<double>::infinity();
      r.p = 0;
    }
    return r;
  }
  r.F = (ss_between * r.df_within) / (ss_within * r.df_between);
  r.p = f_sf(r.F, r.df_between, r.df_within);
  return r;
}

RankSumResult ranksum(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error("ranksum: both samples must be non-empty");
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = midranks(pooled);

  RankSumResult r;
  for (std::size_t i = 0; i < a.size(); ++i) r.W += ranks[i];
  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  const double expected = n1 * (n + 1) / 2.0;
  const double variance = n1 * n2 / 12.0 * ((n + 1) - tie_sum(pooled) / (n * (n - 1)));
  if (!(variance > 0)) {
    r.degenerate = true;
    return r;
  }
  r.z = (r.W - expected) / std::sqrt(variance);
  r.p = std::min(1.0, 2.0 * normal_cdf(-std::fabs(r.z)));
  return r;
}

KruskalResult kruskal_wallis(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw Error("kruskal_wallis: need at least two groups");
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.empty()) throw Error("kruskal_wallis: empty group");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  const auto ranks = midranks(pooled);
  const auto n = static_cast<double>(pooled.size());

  KruskalResult r;
  r.df = static_cast<int>(groups.size()) - 1;
  const double correction = 1.0 - tie_sum(pooled) / (n * n * n - n);
  if (!(correction > 0)) {
    r.degenerate = true;
    return r;
  }
  double sum = 0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    double rs = 0;
    for (std::size_t i = 0; i < g.size(); ++i) rs += ranks[offset + i];
    sum += rs * rs / static_cast<double>(g.size());
    offset += g.size();
  }
  r.H = (12.0 / (n * (n + 1)) * sum - 3.0 * (n + 1)) / correction;
  if (r.H < 0) r.H = 0;  // rounding below zero for identical groups
  r.p = chi_square_sf(r.H, r.df);
  return r;
}

const char* to_string(TestKind kind) {
  switch (kind) {
    case TestKind::anova: return "anova";
    case TestKind::ranksum: return "ranksum";
    case TestKind::kruskal: return "kruskal";
  }
  return "?";
}

std::string derive_ordering(std::span<const GroupSample> groups,
                            std::span<const GroupMean> means, double alpha) {
  if (groups.size() != means.size())
    throw Error("derive_ordering: groups and means differ in length");
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return means[a].mean > means[b].mean; });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) {
      const auto& hi = groups[order[i - 1]].values;
      const auto& lo = groups[order[i]].values;
      const bool differ = !hi.empty() && !lo.empty() && ranksum(hi, lo).p < alpha;
      out += differ ? " > " : " = ";
    }
    out += display_name(means[order[i]].label);
  }
  return out;
}

TestResult compare_feature(const std::string& feature, std::span<const GroupSample> groups,
                           const CompareOptions& options) {
  TestResult r;
  r.feature = feature;
  if (groups.size() < 2) {
    r.skipped = "fewer than two groups";
    return r;
  }
  for (const auto& g : groups) {
    if (g.values.size() < 2) {
      r.skipped = std::string(display_name(g.label)) + " has " +
                  std::to_string(g.values.size()) + " defined values";
      return r;
    }
  }
  for (const auto& g : groups) r.group_means.push_back({g.label, mean_of(g.values), g.values.size()});

  bool all_normal = true;
  for (const auto& g : groups)
    all_normal = all_normal && normality_test(g.values, options.normality_alpha).normal;

  std::vector<std::vector<double>> samples;
  samples.reserve(groups.size());
  for (const auto& g : groups) samples.push_back(g.values);

  if (all_normal) {
    const auto a = anova_oneway(samples);
    r.test_used = TestKind::anova;
    r.statistic = a.F;
    r.p_value = a.p;
    r.degenerate = a.degenerate;
  } else if (groups.size() == 2) {
    const auto s = ranksum(samples[0], samples[1]);
    r.test_used = TestKind::ranksum;
    r.statistic = s.z;
    r.p_value = s.p;
    r.degenerate = s.degenerate;
  } else {
    const auto k = kruskal_wallis(samples);
    r.test_used = TestKind::kruskal;
    r.statistic = k.H;
    r.p_value = k.p;
    r.degenerate = k.degenerate;
  }
  r.significant = r.p_value < options.alpha;
  r.ordering = derive_ordering(groups, r.group_means, options.alpha);
  return r;
}

namespace {

bool result_before(const TestResult& a, const TestResult& b) {
  if (a.p_value != b.p_value) return a.p_value < b.p_value;
  const double sa = std::fabs(a.statistic), sb = std::fabs(b.statistic);
  if (sa != sb) return sa > sb;
  return a.feature < b.feature;
}

}  // namespace

RankedFeatures rank_features(std::span<const TestResult> results, std::size_t k,
                             double alpha) {
  std::vector<const TestResult*> sorted;
  for (const auto& r : results)
    if (!r.skipped) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const TestResult* a, const TestResult* b) { return result_before(*a, *b); });
  RankedFeatures out;
  for (const auto* r : sorted) {
    if (out.names.size() == k) break;
    if (r->p_value < alpha) out.names.push_back(r->feature);
  }
  if (out.names.size() < k)
    out.warning = "only " + std::to_string(out.names.size()) + " of " + std::to_string(k) +
                  " requested features are significant at alpha " + format_real(alpha);
  return out;
}

OrderingReport build_ordering_report(const FeatureMatrix& m, std::span<const Label> labels,
                                     int dataset_id, Part part, const ReportOptions& options,
                                     unsigned jobs) {
  if (labels.size() < 2) throw Error("an ordering report needs at least two labels");
  OrderingReport report;
  report.part = part;
  report.dataset_id = dataset_id;
  report.alpha = options.alpha;
  report.bold_threshold = options.bold_threshold;
  report.bonferroni = options.bonferroni;
  report.labels.assign(labels.begin(), labels.end());
  report.effective_alpha = options.alpha;
  if (options.bonferroni && !m.features.empty())
    report.effective_alpha = options.alpha / static_cast<double>(m.features.size());

  for (const auto label : labels) {
    const bool present = std::any_of(m.rows.begin(), m.rows.end(),
                                     [&](const FeatureRow& r) { return r.label == label; });
    if (!present) throw Error(std::string(to_string(label)) + " absent");
  }

  std::vector<TestResult> results(m.features.size());
  const CompareOptions compare{report.effective_alpha, options.normality_alpha};
  auto run_column = [&](std::size_t c) {
    std::vector<GroupSample> groups;
    for (const auto label : labels) {
      GroupSample g{label, {}};
      for (const auto& row : m.rows)
        if (row.label == label && row.values[c]) g.values.push_back(*row.values[c]);
      groups.push_back(std::move(g));
    }
    results[c] = compare_feature(m.features[c], groups, compare);
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(m.features.size())));
  if (jobs <= 1) {
    for (std::size_t c = 0; c < m.features.size(); ++c) run_column(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t c; (c = next.fetch_add(1)) < m.features.size();) run_column(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (auto& r : results) (r.skipped ? report.skipped : report.rows).push_back(std::move(r));
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
    if (a.p_value != b.p_value) return a.p_value < b.p_value;
    return a.feature < b.feature;
  });
  return report;
}

std::optional<ConfidenceInterval> mean_confidence_interval(std::span<const double> values,
                                                           double level) {
  if (!(level > 0 && level < 1)) throw DomainError("confidence level must lie in (0, 1)");
  if (values.size() < 2) return std::nullopt;
  ConfidenceInterval ci;
  ci.n = values.size();
  ci.mean = mean_of(values);
  double ss = 0;
  for (const double x : values) ss += (x - ci.mean) * (x - ci.mean);
  const auto n = static_cast<double>(ci.n);
  ci.sd = std::sqrt(ss / (n - 1));
  const double t = student_t_quantile(0.5 * (1.0 + level), n - 1);
  const double half = t * ci.sd / std::sqrt(n);
  ci.lower = ci.mean - half;
  ci.upper = ci.mean + half;
  return ci;
}

}  // namespace newsstyle
