#pragma once

namespace newsstyle {

// All functions throw DomainError outside their stated domain.

// ln Γ(x) for x > 0.
double ln_gamma(double x);

// Regularized incomplete beta I_x(a, b); x in [0,1], a, b > 0.
double reg_incomplete_beta(double x, double a, double b);

// Regularized lower incomplete gamma P(a, x) and its complement Q = 1 - P;
// a > 0, x >= 0. Q is evaluated directly so small tails keep precision.
double reg_incomplete_gamma_p(double a, double x);
double reg_incomplete_gamma_q(double a, double x);

// Standard normal CDF.
double normal_cdf(double z);

// Upper tail of the chi-square distribution with `df` degrees of freedom.
double chi_square_sf(double x, double df);

// Upper tail of the F distribution.
double f_sf(double f, double df1, double df2);

// Student t CDF and quantile, df > 0; p in (0, 1).
double student_t_cdf(double t, double df);
double student_t_quantile(double p, double df);

}  // namespace newsstyle
