#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace viralstyle {

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;   // sample stddev (n-1); meaningful only when n >= 2
  bool has_stddev() const { return n >= 2; }
};

/// Mean and sample standard deviation (two-pass). Throws DataError on an
/// empty sample.
SampleSummary summarize(std::span<const double> sample);

struct TestResult {
  double statistic = 0.0;
  double df1 = 0.0;  // Welch-Satterthwaite df for the t test; numerator df for F
  double df2 = 0.0;  // denominator df for F; 0 for the t test
  double p_value = 1.0;
  bool degenerate = false;  // zero-variance input, p forced to 0 or 1

  /// Subset of {0.05, 0.01, 0.001} where p < threshold.
  std::vector<double> significant_at() const;
};

/// Welch's unequal-variance two-sample t test, two-sided.
/// Both samples need n >= 2. When both variances are zero the result is
/// flagged degenerate: equal means give t = 0, p = 1; unequal means give
/// p = 0 with an infinite statistic.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// Variance-ratio F test, two-sided: statistic s_a^2 / s_b^2 as given (not
/// folded above 1), df (n_a - 1, n_b - 1), p = 2 * min(cdf, 1 - cdf).
/// Throws DataError when either sample has fewer than 2 values or zero
/// variance.
TestResult f_test_variance(std::span<const double> a, std::span<const double> b);

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation. Domain: a > 0, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided p for a Student t statistic.
double student_t_two_sided_p(double t, double df);

/// CDF of the F distribution with (d1, d2) degrees of freedom.
double f_cdf(double f, double d1, double d2);

}  // namespace viralstyle
