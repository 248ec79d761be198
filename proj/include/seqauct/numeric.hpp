#pragma once
// Special functions and scalar root finding shared by the estimators.
//
// Accuracy notes:
//   - reg_inc_beta uses an exact binomial tail sum for integer shapes
//     (absolute error < 1e-12 for a+b <= 101) and a Lentz continued
//     fraction otherwise.
//   - std_normal_cdf is erfc-based; absolute error < 1e-14.
//   - std_normal_quantile is Acklam's rational approximation refined by
//     one Halley step; absolute error < 1e-12 on (1e-300, 1-1e-16).

#include <functional>

namespace seqauct {

// Shape (a, b) of a regularized incomplete beta I_z(a, b).  For the
// j-th highest of N order statistics: a = N - j + 1, b = j.
struct BetaShape {
    double a = 1.0;
    double b = 1.0;
};

bool shape_is_integer(const BetaShape& s);

// Regularized incomplete beta I_z(a, b); exact 0 at z=0 and 1 at z=1.
double reg_inc_beta(double z, const BetaShape& shape);

// Inverse of reg_inc_beta in z: returns z with |I_z(a,b) - p| <= 1e-10.
double reg_inc_beta_inv(double p, const BetaShape& shape);

// Beta density z^{a-1} (1-z)^{b-1} / B(a, b).
double beta_density(double z, const BetaShape& shape);

// Root of f(x) = target for weakly increasing f on [lo, hi].  Clamps:
// target below f(lo) returns lo, above f(hi) returns hi, so inversions
// at the support edge return the boundary instead of failing.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double target, double tol = 1e-10);

double std_normal_cdf(double x);
double std_normal_pdf(double x);
double std_normal_quantile(double p);

double lognormal_cdf(double x, double mu, double sigma);
double lognormal_pdf(double x, double mu, double sigma);
double lognormal_quantile(double p, double mu, double sigma);

// Integral of f over [a, b] by the interval-doubling trapezoid ladder
// with Richardson extrapolation, run until the relative change is below
// rel_tol.  Returns 0 when a >= b.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-8);

}  // namespace seqauct
