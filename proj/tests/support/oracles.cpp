#include "oracles.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <map>

namespace nstest::oracle {

namespace bm = boost::math;

double ln_gamma(double x) { return bm::lgamma(x); }
double ibeta(double x, double a, double b) { return bm::ibeta(a, b, x); }
double gamma_p(double a, double x) { return bm::gamma_p(a, x); }
double normal_cdf(double z) { return bm::cdf(bm::normal_distribution<double>(0.0, 1.0), z); }

double f_sf(double f, double df1, double df2) {
  return bm::cdf(bm::complement(bm::fisher_f_distribution<double>(df1, df2), f));
}

double chi_square_sf(double x, double df) {
  return bm::cdf(bm::complement(bm::chi_squared_distribution<double>(df), x));
}

double t_quantile(double p, double df) {
  return bm::quantile(bm::students_t_distribution<double>(df), p);
}

Anova anova(const std::vector<std::vector<double>>& groups) {
  long double grand = 0;
  std::size_t n = 0;
  for (const auto& g : groups) {
    for (double v : g) grand += v;
    n += g.size();
  }
  grand /= static_cast<long double>(n);
  long double ssb = 0, ssw = 0;
  for (const auto& g : groups) {
    long double m = 0;
    for (double v : g) m += v;
    m /= static_cast<long double>(g.size());
    ssb += static_cast<long double>(g.size()) * (m - grand) * (m - grand);
    for (double v : g) ssw += (v - m) * (v - m);
  }
  const double df1 = static_cast<double>(groups.size() - 1);
  const double df2 = static_cast<double>(n - groups.size());
  Anova out;
  out.F = static_cast<double>((ssb / df1) / (ssw / df2));
  out.p = f_sf(out.F, df1, df2);
  return out;
}

namespace {

// Σ (t³ − t) over tie groups of the pooled data.
long double tie_term(const std::vector<double>& pooled) {
  std::map<double, long double> counts;
  for (double v : pooled) counts[v] += 1;
  long double sum = 0;
  for (const auto& [v, t] : counts) sum += t * t * t - t;
  return sum;
}

}  // namespace

RankSum ranksum(const std::vector<double>& a, const std::vector<double>& b) {
  long double U = 0;
  for (double x : a)
    for (double y : b) U += x > y ? 1.0L : (x == y ? 0.5L : 0.0L);
  const long double n1 = a.size(), n2 = b.size(), N = n1 + n2;
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const long double var = n1 * n2 / 12.0L * ((N + 1) - tie_term(pooled) / (N * (N - 1)));
  RankSum out;
  out.W = static_cast<double>(U + n1 * (n1 + 1) / 2);
  out.z = static_cast<double>((U - n1 * n2 / 2) / std::sqrt(var));
  out.p = 2 * normal_cdf(-std::fabs(out.z));
  return out;
}

Kruskal kruskal(const std::vector<std::vector<double>>& groups) {
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const long double N = pooled.size();
  long double sum = 0;
  for (const auto& g : groups) {
    long double R = 0;
    for (double v : g) {
      long double less = 0, equal = 0;
      for (double w : pooled) {
        if (w < v) less += 1;
        if (w == v) equal += 1;
      }
      R += less + (equal + 1) / 2;
    }
    sum += R * R / static_cast<long double>(g.size());
  }
  const long double H0 = 12.0L / (N * (N + 1)) * sum - 3 * (N + 1);
  const long double C = 1 - tie_term(pooled) / (N * N * N - N);
  Kruskal out;
  out.H = static_cast<double>(H0 / C);
  out.p = chi_square_sf(out.H, static_cast<double>(groups.size() - 1));
  return out;
}

}  // namespace nstest::oracle
