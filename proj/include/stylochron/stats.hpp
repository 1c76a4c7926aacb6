#pragma once

#include <Eigen/Dense>

#include "stylochron/errors.hpp"

namespace stylochron {

struct CorrelationResult {
  double r = 0.0;
  int n = 0;
  double p_two_tailed = 1.0;
};

struct TTestResult {
  double t = 0.0;
  double df = 0.0;  // Welch-Satterthwaite
  double p_two_tailed = 1.0;
};

struct GroupSummary {
  double mean = 0.0;
  double se = 0.0;  // sample std / sqrt(n)
  int n = 0;
};

/// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t distribution with df degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-tailed tail mass P(|T| >= |t|) of Student's t.
double student_t_two_tailed(double t, double df);

/// Product-moment correlation. Throws ShapeError on length mismatch,
/// InsufficientData for n < 2, DegenerateInput when either input has zero
/// variance.
double pearson(Eigen::Ref<const Eigen::VectorXd> xs,
               Eigen::Ref<const Eigen::VectorXd> ys);

/// Two-tailed p-value of a correlation r observed on n pairs.
/// |r| >= 1 yields exactly 0; n < 3 throws InsufficientData.
double pearson_pvalue(double r, int n);

/// pearson + pearson_pvalue for a pair of samples.
CorrelationResult correlate(Eigen::Ref<const Eigen::VectorXd> xs,
                            Eigen::Ref<const Eigen::VectorXd> ys);

/// Mean, standard error (sample std / sqrt(n)) and count. se is 0 when n == 1.
GroupSummary group_summary(Eigen::Ref<const Eigen::VectorXd> xs);

/// |x - g.mean| / g.se. Throws DegenerateInput when g.se == 0.
double sigma_difference(double x, const GroupSummary& g);

/// Welch's unequal-variance t-test with Satterthwaite degrees of freedom.
TTestResult welch_ttest(Eigen::Ref<const Eigen::VectorXd> xs,
                        Eigen::Ref<const Eigen::VectorXd> ys);

}  // namespace stylochron
