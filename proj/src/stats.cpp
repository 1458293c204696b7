#include "viralstyle/stats.hpp"

#include <cmath>
#include <limits>

#include "viralstyle/error.hpp"

namespace viralstyle {

namespace {

double sample_variance(std::span<const double> xs, double mean) {
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return acc / double(xs.size() - 1);
}

double sample_mean(std::span<const double> xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / double(xs.size());
}

// Continued fraction for I_x(a,b), modified Lentz. Converges fast for
// x < (a+1)/(a+b+2); the caller flips to the symmetric form otherwise.
double ibeta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  constexpr int max_iter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + num * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + num * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw DataError("incomplete beta requires a > 0 and b > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DataError("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = a * std::log(x) + b * std::log1p(-x) -
                           (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * ibeta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * ibeta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

double f_cdf(double f, double d1, double d2) {
  if (f <= 0.0) return 0.0;
  const double x = d1 * f / (d1 * f + d2);
  return regularized_incomplete_beta(d1 / 2.0, d2 / 2.0, x);
}

SampleSummary summarize(std::span<const double> sample) {
  if (sample.empty()) throw DataError("cannot summarize an empty sample");
  SampleSummary s;
  s.n = sample.size();
  s.mean = sample_mean(sample);
  s.stddev = s.n >= 2 ? std::sqrt(sample_variance(sample, s.mean)) : 0.0;
  return s;
}

std::vector<double> TestResult::significant_at() const {
  std::vector<double> out;
  for (double alpha : {0.05, 0.01, 0.001}) {
    if (p_value < alpha) out.push_back(alpha);
  }
  return out;
}

TestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw DataError("welch_t_test needs at least 2 values per sample");
  }
  const double mean_a = sample_mean(a);
  const double mean_b = sample_mean(b);
  const double var_a = sample_variance(a, mean_a);
  const double var_b = sample_variance(b, mean_b);

  TestResult r;
  if (var_a == 0.0 && var_b == 0.0) {
    r.degenerate = true;
    if (mean_a == mean_b) {
      r.statistic = 0.0;
      r.p_value = 1.0;
    } else {
      r.statistic = mean_a > mean_b ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
    r.df1 = double(a.size() + b.size() - 2);
    return r;
  }

  const double se_a = var_a / double(a.size());
  const double se_b = var_b / double(b.size());
  const double se2 = se_a + se_b;
  r.statistic = (mean_a - mean_b) / std::sqrt(se2);
  r.df1 = se2 * se2 / (se_a * se_a / double(a.size() - 1) +
                       se_b * se_b / double(b.size() - 1));
  r.p_value = student_t_two_sided_p(r.statistic, r.df1);
  return r;
}

TestResult f_test_variance(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw DataError("f_test_variance needs at least 2 values per sample");
  }
  const double var_a = sample_variance(a, sample_mean(a));
  const double var_b = sample_variance(b, sample_mean(b));
  if (var_a == 0.0 || var_b == 0.0) {
    throw DataError("f_test_variance: degenerate zero-variance sample");
  }

  TestResult r;
  r.statistic = var_a / var_b;
  r.df1 = double(a.size() - 1);
  r.df2 = double(b.size() - 1);
  const double cdf = f_cdf(r.statistic, r.df1, r.df2);
  r.p_value = std::min(1.0, 2.0 * std::min(cdf, 1.0 - cdf));
  return r;
}

}  // namespace viralstyle
