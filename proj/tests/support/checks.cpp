#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "newsstyle/features.hpp"
#include "newsstyle/learn.hpp"
#include "newsstyle/special_functions.hpp"
#include "newsstyle/stats.hpp"
#include "newsstyle/textseg.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"
#include "test_env.hpp"

namespace nstest {

namespace ns = newsstyle;

void CheckOutcome::fail(const std::string& message) {
  if (failures++ == 0) first_failure = message;
}

namespace {

double log_uniform(std::mt19937_64& eng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(eng));
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(eng);
}

std::size_t size_between(std::mt19937_64& eng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(eng);
}

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream ss;
  ss.precision(17);
  bool first = true;
  for (const auto& [k, v] : fields) {
    ss << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return ss.str();
}

void compare(CheckOutcome& out, double got, double want, double tol, const std::string& where) {
  const double err = std::fabs(got - want);
  out.observe(err);
  if (!(err <= tol)) out.fail(where + " got=" + std::to_string(got) + " want=" + std::to_string(want));
}

}  // namespace

std::vector<CheckOutcome> check_special_functions(std::size_t points, std::uint64_t seed,
                                                  double tol) {
  std::mt19937_64 eng(seed);
  CheckOutcome lg{"ln_gamma"}, ib{"reg_incomplete_beta"}, gp{"reg_incomplete_gamma_p"},
      nc{"normal_cdf"};
  for (std::size_t i = 0; i < points; ++i) {
    const double x = log_uniform(eng, 1e-3, 1e6);
    ++lg.trials;
    compare(lg, ns::ln_gamma(x), oracle::ln_gamma(x), tol, describe({{"x", x}}));

    const double bx = uniform(eng, 0, 1), a = log_uniform(eng, 0.05, 500),
                 b = log_uniform(eng, 0.05, 500);
    ++ib.trials;
    compare(ib, ns::reg_incomplete_beta(bx, a, b), oracle::ibeta(bx, a, b), tol,
            describe({{"x", bx}, {"a", a}, {"b", b}}));

    const double ga = log_uniform(eng, 0.05, 1000), gx = uniform(eng, 0, 3 * ga + 5);
    ++gp.trials;
    compare(gp, ns::reg_incomplete_gamma_p(ga, gx), oracle::gamma_p(ga, gx), tol,
            describe({{"a", ga}, {"x", gx}}));

    const double z = uniform(eng, -12, 12);
    ++nc.trials;
    compare(nc, ns::normal_cdf(z), oracle::normal_cdf(z), tol, describe({{"z", z}}));
  }
  return {lg, ib, gp, nc};
}

std::vector<CheckOutcome> check_test_statistics(std::size_t samples, std::uint64_t seed,
                                                double stat_tol, double p_tol) {
  std::mt19937_64 eng(seed);
  CheckOutcome an{"anova_oneway"}, rs{"ranksum"}, kw{"kruskal_wallis"};
  for (std::size_t t = 0; t < samples; ++t) {
    const bool ties = t % 2 == 1;
    const std::size_t k = 2 + t % 3 / 2;  // 2, 2, 3, 2, 2, 3, ...
    std::vector<std::vector<double>> groups;
    for (std::size_t g = 0; g < k; ++g)
      groups.push_back(random_sample(eng, size_between(eng, 5, 100), uniform(eng, 0, 0.8), ties));
    const std::string where = "trial " + std::to_string(t);

    ++an.trials;
    const auto a = ns::anova_oneway(groups);
    const auto ao = oracle::anova(groups);
    compare(an, a.F, ao.F, stat_tol * std::max(1.0, std::fabs(ao.F)), where + " F");
    compare(an, a.p, ao.p, p_tol, where + " p");

    ++rs.trials;
    const auto r = ns::ranksum(groups[0], groups[1]);
    const auto ro = oracle::ranksum(groups[0], groups[1]);
    compare(rs, r.z, ro.z, stat_tol * std::max(1.0, std::fabs(ro.z)), where + " z");
    compare(rs, r.W, ro.W, stat_tol * std::max(1.0, ro.W), where + " W");
    compare(rs, r.p, ro.p, p_tol, where + " p");

    ++kw.trials;
    const auto h = ns::kruskal_wallis(groups);
    const auto ho = oracle::kruskal(groups);
    compare(kw, h.H, ho.H, stat_tol * std::max(1.0, std::fabs(ho.H)), where + " H");
    compare(kw, h.p, ho.p, p_tol, where + " p");
  }
  return {an, rs, kw};
}

CheckOutcome check_svm_optimizer(std::size_t problems, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CheckOutcome out{"svm_optimizer"};
  int most_epochs = 0;
  for (std::size_t t = 0; t < problems; ++t) {
    ++out.trials;
    const std::size_t n = size_between(eng, 20, 200), d = size_between(eng, 2, 10);
    std::vector<double> w_true(d);
    for (auto& w : w_true) w = normal(eng);
    ns::DenseMatrix X(n, std::vector<double>(d));
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.3 * normal(eng);
      for (std::size_t j = 0; j < d; ++j) {
        X[i][j] = normal(eng);
        s += w_true[j] * X[i][j];
      }
      y[i] = s >= 0 ? 1 : -1;
    }
    if (std::all_of(y.begin(), y.end(), [&](int v) { return v == y[0]; })) y[0] = -y[0];

    ns::SvmOptions opt;
    opt.C = log_uniform(eng, 0.1, 10);
    opt.seed = t + 1;
    opt.max_epochs = 20000;
    ns::SvmTrace trace;
    const ns::LinearSvm svm = ns::train_svm(X, y, opt, &trace);
    most_epochs = std::max(most_epochs, svm.epochs);
    const std::string where = "problem " + std::to_string(t);

    if (trace.alpha_out_of_box) out.fail(where + ": alpha left [0, C]");
    for (double a : trace.alpha)
      if (a < 0 || a > opt.C) out.fail(where + ": final alpha outside [0, C]");
    for (std::size_t e = 1; e < trace.dual_objective.size(); ++e) {
      const double prev = trace.dual_objective[e - 1], cur = trace.dual_objective[e];
      // Allows floating-point noise at the converged optimum.
      if (cur > prev + 1e-12 * std::max(1.0, std::fabs(prev)))
        out.fail(where + ": dual objective rose at epoch " + std::to_string(e));
    }
    if (!svm.converged) {
      out.fail(where + ": not converged");
      continue;
    }
    const double bound = 10 * opt.tol;
    for (std::size_t i = 0; i < n; ++i) {
      const double margin = y[i] * svm.decision(X[i]);
      const double a = trace.alpha[i];
      double residual = 0;
      if (a <= 0)
        residual = std::max(0.0, 1 - margin);
      else if (a >= opt.C)
        residual = std::max(0.0, margin - 1);
      else
        residual = std::fabs(margin - 1);
      out.observe(residual);
      if (residual >= bound) {
        out.fail(where + ": KKT residual " + std::to_string(residual));
        break;
      }
    }
  }
  out.note = "most epochs " + std::to_string(most_epochs);
  return out;
}

CheckOutcome prop_tokenizer_roundtrip(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  CheckOutcome out{"tokenizer_roundtrip"};
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const std::string text = random_text(eng, size_between(eng, 0, 40));
    const auto tokens = ns::tokenize(text);
    std::string rebuilt;
    std::size_t pos = 0;
    bool ok = true;
    for (const auto& tok : tokens) {
      if (tok.end <= tok.start || tok.start < pos || tok.end > text.size() ||
          text.compare(tok.start, tok.end - tok.start, tok.text) != 0) {
        ok = false;
        break;
      }
      const std::string gap = text.substr(pos, tok.start - pos);
      if (gap.find_first_not_of(" \t\r\n\f\v") != std::string::npos) {
        ok = false;
        break;
      }
      rebuilt += gap + tok.text;
      pos = tok.end;
    }
    if (ok) {
      const std::string tail = text.substr(pos);
      ok = tail.find_first_not_of(" \t\r\n\f\v") == std::string::npos;
      rebuilt += tail;
    }
    if (!ok || rebuilt != text) {
      out.fail("spans do not rebuild: \"" + text + "\"");
      continue;
    }
    std::vector<ns::Token> flat;
    for (const auto& s : ns::split_sentences(text))
      flat.insert(flat.end(), s.tokens.begin(), s.tokens.end());
    if (flat != tokens) out.fail("sentences lose or repeat tokens: \"" + text + "\"");
    if (ns::tokenize(text) != tokens) out.fail("tokenize not deterministic");
  }
  return out;
}

CheckOutcome prop_ttr_per_stop(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  const auto& res = resources();
  CheckOutcome out{"ttr_per_stop_ranges"};
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    std::string text = random_words(eng, size_between(eng, 1, 30)) + ".";
    if (t % 3 == 0) text += " " + random_words(eng, size_between(eng, 1, 10)) + "!";
    const auto a = ns::analyze_part(text, ns::Part::body, res);
    const auto cx = ns::extract_complexity(a, res.frequency);
    const auto st = ns::extract_stylistic(a, res.stopwords, res.categories);
    const double ttr = *cx.at("TTR"), ps = *st.at("per_stop");
    if (!(ttr > 0 && ttr <= 1)) out.fail("TTR " + std::to_string(ttr) + " for \"" + text + "\"");
    if (!(ps >= 0 && ps <= 100)) out.fail("per_stop out of range for \"" + text + "\"");

    std::set<std::string> types;
    std::size_t words = 0;
    for (const auto& tok : a.tokens)
      if (tok.is_word()) ++words, types.insert(ns::lookup_key(tok));
    if ((ttr == 1.0) != (types.size() == words)) out.fail("TTR = 1 iff distinct fails");

    // Self-concatenation.
    const auto a2 = ns::analyze_part(text + " " + text, ns::Part::body, res);
    const auto cx2 = ns::extract_complexity(a2, res.frequency);
    const auto st2 = ns::extract_stylistic(a2, res.stopwords, res.categories);
    if (*cx2.at("TTR") > ttr + 1e-15) out.fail("TTR rose under self-concatenation");
    if (std::fabs(*st2.at("per_stop") - ps) > 1e-9) out.fail("per_stop changed");
    if (std::fabs(*cx2.at("avg_wlen") - *cx.at("avg_wlen")) > 1e-9) out.fail("avg_wlen changed");
    if (*st2.at("WC") != 2 * *st.at("WC")) out.fail("WC did not double");
    if (*st2.at("allPunc") != 2 * *st.at("allPunc")) out.fail("allPunc did not double");
  }
  return out;
}

CheckOutcome prop_anova_affine_invariance(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  CheckOutcome out{"anova_affine_invariance"};
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const std::size_t k = 2 + t % 2;
    std::vector<std::vector<double>> groups;
    for (std::size_t g = 0; g < k; ++g)
      groups.push_back(random_sample(eng, size_between(eng, 2, 30), uniform(eng, 0, 1), false));
    double scale = log_uniform(eng, 0.01, 100);
    if (t % 2) scale = -scale;
    const double shift = uniform(eng, -1000, 1000);
    auto moved = groups;
    for (auto& g : moved)
      for (auto& v : g) v = scale * v + shift;
    const auto a = ns::anova_oneway(groups), b = ns::anova_oneway(moved);
    const double ferr = std::fabs(a.F - b.F) / std::max(1.0, a.F);
    out.observe(ferr);
    if (ferr > 1e-8 || std::fabs(a.p - b.p) > 1e-10 || b.p < 0 || b.p > 1)
      out.fail("trial " + std::to_string(t) + ": F " + std::to_string(a.F) + " vs " +
               std::to_string(b.F));
  }
  return out;
}

CheckOutcome prop_ranksum_monotone_invariance(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  const std::vector<std::function<double(double)>> transforms = {
      [](double x) { return std::exp(x / 3); },
      [](double x) { return x * x * x + x; },
      [](double x) { return std::atan(x); },
      [](double x) { return 2 * x + 5; },
      [](double x) { return std::log(x + 20); },
  };
  CheckOutcome out{"ranksum_monotone_invariance"};
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const bool ties = t % 2 == 1;
    auto a = random_sample(eng, size_between(eng, 1, 40), 0, ties);
    auto b = random_sample(eng, size_between(eng, 1, 40), uniform(eng, 0, 1), ties);
    const auto base = ns::ranksum(a, b);
    const auto& f = transforms[t % transforms.size()];
    for (auto& v : a) v = f(v);
    for (auto& v : b) v = f(v);
    const auto moved = ns::ranksum(a, b);
    const double err = std::fabs(base.z - moved.z);
    out.observe(err);
    if (err > 1e-12 || base.degenerate != moved.degenerate)
      out.fail("trial " + std::to_string(t) + ": z " + std::to_string(base.z) + " vs " +
               std::to_string(moved.z));
  }
  return out;
}

CheckOutcome prop_ibeta_symmetry(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  CheckOutcome out{"ibeta_symmetry"};
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const double x = uniform(eng, 0, 1), a = log_uniform(eng, 0.01, 1000),
                 b = log_uniform(eng, 0.01, 1000);
    const double sum = ns::reg_incomplete_beta(x, a, b) + ns::reg_incomplete_beta(1 - x, b, a);
    const double err = std::fabs(sum - 1);
    out.observe(err);
    if (err > 1e-10) out.fail(describe({{"x", x}, {"a", a}, {"b", b}, {"sum", sum}}));
  }
  return out;
}

CheckOutcome prop_standardization_pipeline(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CheckOutcome out{"standardization_pipeline"};
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const std::size_t n = size_between(eng, 20, 60), d = size_between(eng, 1, 5);
    ns::RawMatrix X(n, std::vector<std::optional<double>>(d));
    std::vector<ns::Label> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = normal(eng);
      for (std::size_t j = 0; j < d; ++j) {
        const double v = normal(eng);
        s += v;
        X[i][j] = (i * 7 + j) % 23 == 5 ? std::nullopt : std::optional<double>(v);
      }
      y[i] = i % 2 ? ns::Label::fake : ns::Label::real;
      if (s > 1) y[i] = ns::Label::fake;
      if (s < -1) y[i] = ns::Label::real;
    }
    std::vector<double> scale(d), shift(d);
    for (std::size_t j = 0; j < d; ++j) {
      scale[j] = log_uniform(eng, 0.01, 100);
      shift[j] = uniform(eng, -100, 100);
    }
    auto moved = X;
    for (auto& row : moved)
      for (std::size_t j = 0; j < d; ++j)
        if (row[j]) row[j] = scale[j] * *row[j] + shift[j];

    std::vector<std::string> names;
    for (std::size_t j = 0; j < d; ++j) names.push_back("f" + std::to_string(j));
    ns::SvmOptions opt;
    opt.seed = t;
    const auto m1 = ns::fit_model(X, y, ns::Label::fake, ns::Label::real, names, opt);
    const auto m2 = ns::fit_model(moved, y, ns::Label::fake, ns::Label::real, names, opt);
    for (std::size_t i = 0; i < n; ++i) {
      const auto p1 = ns::predict(m1, X[i]);
      const auto p2 = ns::predict(m2, moved[i]);
      const double err = std::fabs(p1.decision - p2.decision);
      out.observe(err);
      const bool near_zero = std::fabs(p1.decision) < 1e-6;
      if (err > 1e-6 * std::max(1.0, std::fabs(p1.decision)) ||
          (p1.label != p2.label && !near_zero)) {
        out.fail("trial " + std::to_string(t) + " row " + std::to_string(i) + ": decision " +
                 std::to_string(p1.decision) + " vs " + std::to_string(p2.decision));
        break;
      }
    }
  }
  return out;
}

std::vector<CheckOutcome> run_property_suites(std::size_t trials, std::uint64_t seed) {
  return {prop_tokenizer_roundtrip(trials, seed),
          prop_ttr_per_stop(trials, seed + 1),
          prop_anova_affine_invariance(trials, seed + 2),
          prop_ranksum_monotone_invariance(trials, seed + 3),
          prop_ibeta_symmetry(trials, seed + 4),
          prop_standardization_pipeline(trials, seed + 5)};
}

}  // namespace nstest
