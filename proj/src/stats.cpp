#include "stylochron/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stylochron {

namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta function, modified Lentz method.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double mean_of(Eigen::Ref<const Eigen::VectorXd> v) { return v.mean(); }

double sample_variance(Eigen::Ref<const Eigen::VectorXd> v) {
  const auto n = v.size();
  const double m = v.mean();
  return (v.array() - m).square().sum() / static_cast<double>(n - 1);
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw ValueError("incomplete_beta: a, b must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_tailed(double t, double df) {
  if (!(df > 0.0)) throw ValueError("student_t_two_tailed: df must be positive");
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

double student_t_cdf(double t, double df) {
  const double p = student_t_two_tailed(t, df);
  return t >= 0.0 ? 1.0 - 0.5 * p : 0.5 * p;
}

double pearson(Eigen::Ref<const Eigen::VectorXd> xs,
               Eigen::Ref<const Eigen::VectorXd> ys) {
  if (xs.size() != ys.size()) {
    throw ShapeError("pearson: length mismatch (" + std::to_string(xs.size()) +
                     " vs " + std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 2) throw InsufficientData("pearson: need at least 2 pairs");
  const Eigen::ArrayXd xc = xs.array() - mean_of(xs);
  const Eigen::ArrayXd yc = ys.array() - mean_of(ys);
  const double ssx = (xc * xc).sum();
  const double ssy = (yc * yc).sum();
  if (ssx == 0.0 || ssy == 0.0) {
    throw DegenerateInput("pearson: zero variance input");
  }
  const double r = (xc * yc).sum() / std::sqrt(ssx * ssy);
  return std::clamp(r, -1.0, 1.0);
}

double pearson_pvalue(double r, int n) {
  if (n < 3) throw InsufficientData("pearson_pvalue: need n >= 3");
  if (std::fabs(r) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / (1.0 - r * r));
  return student_t_two_tailed(t, df);
}

CorrelationResult correlate(Eigen::Ref<const Eigen::VectorXd> xs,
                            Eigen::Ref<const Eigen::VectorXd> ys) {
  CorrelationResult out;
  out.n = static_cast<int>(xs.size());
  out.r = pearson(xs, ys);
  out.p_two_tailed = pearson_pvalue(out.r, out.n);
  return out;
}

GroupSummary group_summary(Eigen::Ref<const Eigen::VectorXd> xs) {
  if (xs.size() < 1) throw InsufficientData("group_summary: empty input");
  GroupSummary g;
  g.n = static_cast<int>(xs.size());
  g.mean = xs.mean();
  g.se = g.n == 1 ? 0.0
                  : std::sqrt(sample_variance(xs)) / std::sqrt(static_cast<double>(g.n));
  return g;
}

double sigma_difference(double x, const GroupSummary& g) {
  if (g.se <= 0.0) throw DegenerateInput("sigma_difference: zero standard error");
  return std::fabs(x - g.mean) / g.se;
}

TTestResult welch_ttest(Eigen::Ref<const Eigen::VectorXd> xs,
                        Eigen::Ref<const Eigen::VectorXd> ys) {
  if (xs.size() < 2 || ys.size() < 2) {
    throw InsufficientData("welch_ttest: each group needs n >= 2");
  }
  const double na = static_cast<double>(xs.size());
  const double nb = static_cast<double>(ys.size());
  const double va = sample_variance(xs);
  const double vb = sample_variance(ys);
  const double sa = va / na;
  const double sb = vb / nb;
  if (sa + sb == 0.0) {
    throw DegenerateInput("welch_ttest: zero combined variance");
  }
  TTestResult out;
  out.t = (mean_of(xs) - mean_of(ys)) / std::sqrt(sa + sb);
  double denom = 0.0;
  if (sa > 0.0) denom += sa * sa / (na - 1.0);
  if (sb > 0.0) denom += sb * sb / (nb - 1.0);
  out.df = (sa + sb) * (sa + sb) / denom;
  out.p_two_tailed = student_t_two_tailed(out.t, out.df);
  return out;
}

}  // namespace stylochron
