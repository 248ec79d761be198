#include "seqauct/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace seqauct {

namespace {

constexpr double kIntegerTol = 1e-9;

bool near_integer(double x) { return std::abs(x - std::round(x)) < kIntegerTol; }

void check_shape(const BetaShape& s) {
    if (!(s.a > 0.0) || !(s.b > 0.0)) {
        throw std::domain_error("beta shape parameters must be positive (a=" +
                                std::to_string(s.a) + ", b=" + std::to_string(s.b) + ")");
    }
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Exact binomial tail: I_z(a, b) = sum_{i=a}^{n} C(n, i) z^i (1-z)^{n-i}
// with n = a + b - 1.  The first term is seeded through logs and the rest
// follow the multiplicative recurrence, so only b terms are touched.
double inc_beta_integer(double z, long a, long b) {
    const long n = a + b - 1;
    const double logz = std::log(z);
    const double log1mz = std::log1p(-z);
    const double log_c = std::lgamma(double(n + 1)) - std::lgamma(double(a + 1)) -
                         std::lgamma(double(n - a + 1));
    long double term = std::exp((long double)(log_c + double(a) * logz + double(n - a) * log1mz));
    long double sum = term;
    const long double ratio = (long double)z / (long double)(1.0 - z);
    for (long i = a; i < n; ++i) {
        term *= ratio * (long double)(n - i) / (long double)(i + 1);
        sum += term;
    }
    double out = (double)sum;
    if (out < 0.0) out = 0.0;
    if (out > 1.0) out = 1.0;
    return out;
}

// Lentz continued fraction for the general (non-integer) case.
double inc_beta_cf(double z, double a, double b) {
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    const double tiny = 1e-300;
    double c = 1.0;
    double d = 1.0 - qab * z / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * z / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    const double front =
        std::exp(a * std::log(z) + b * std::log1p(-z) - log_beta(a, b)) / a;
    return front * h;
}

}  // namespace

bool shape_is_integer(const BetaShape& s) {
    return near_integer(s.a) && near_integer(s.b);
}

double reg_inc_beta(double z, const BetaShape& shape) {
    check_shape(shape);
    if (std::isnan(z) || z < 0.0 || z > 1.0) {
        throw std::domain_error("reg_inc_beta: z outside [0, 1]");
    }
    if (z == 0.0) return 0.0;
    if (z == 1.0) return 1.0;

    if (shape_is_integer(shape)) {
        const long a = (long)std::llround(shape.a);
        const long b = (long)std::llround(shape.b);
        // Summing the shorter tail keeps the term count at min(a, b).
        if (b <= a) return inc_beta_integer(z, a, b);
        return 1.0 - inc_beta_integer(1.0 - z, b, a);
    }

    // Continued fraction converges fastest below the mean; use symmetry above.
    if (z < (shape.a + 1.0) / (shape.a + shape.b + 2.0)) {
        return inc_beta_cf(z, shape.a, shape.b);
    }
    return 1.0 - inc_beta_cf(1.0 - z, shape.b, shape.a);
}

double reg_inc_beta_inv(double p, const BetaShape& shape) {
    check_shape(shape);
    if (std::isnan(p) || p < 0.0 || p > 1.0) {
        throw std::domain_error("reg_inc_beta_inv: p outside [0, 1]");
    }
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = reg_inc_beta(mid, shape);
        if (v < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double beta_density(double z, const BetaShape& shape) {
    check_shape(shape);
    if (std::isnan(z) || z < 0.0 || z > 1.0) {
        throw std::domain_error("beta_density: z outside [0, 1]");
    }
    const double a = shape.a, b = shape.b;
    if (z == 0.0) {
        if (a > 1.0) return 0.0;
        if (a == 1.0) return std::exp(-log_beta(a, b));
        return std::numeric_limits<double>::infinity();
    }
    if (z == 1.0) {
        if (b > 1.0) return 0.0;
        if (b == 1.0) return std::exp(-log_beta(a, b));
        return std::numeric_limits<double>::infinity();
    }
    return std::exp((a - 1.0) * std::log(z) + (b - 1.0) * std::log1p(-z) - log_beta(a, b));
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double target, double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("bisect: lo > hi");
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo > fhi + tol) throw std::invalid_argument("bisect: f not increasing on bracket");
    if (target <= flo) return lo;
    if (target >= fhi) return hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double v = f(mid);
        if (std::abs(v - target) <= tol) return mid;
        if (v < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * (1.0 / std::sqrt(2.0))); }

double std_normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014327;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double std_normal_quantile(double p) {
    if (std::isnan(p) || p <= 0.0 || p >= 1.0) {
        throw std::domain_error("std_normal_quantile: p outside (0, 1)");
    }
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley step against the erfc-based CDF.
    const double e = std_normal_cdf(x) - p;
    const double u = e / std_normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double lognormal_cdf(double x, double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("lognormal_cdf: sigma must be positive");
    if (x <= 0.0) {
        if (x == 0.0) return 0.0;
        throw std::domain_error("lognormal_cdf: x must be positive");
    }
    return std_normal_cdf((std::log(x) - mu) / sigma);
}

double lognormal_pdf(double x, double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("lognormal_pdf: sigma must be positive");
    if (x <= 0.0) return 0.0;
    return std_normal_pdf((std::log(x) - mu) / sigma) / (x * sigma);
}

double lognormal_quantile(double p, double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("lognormal_quantile: sigma must be positive");
    if (p == 0.0) return 0.0;
    return std::exp(mu + sigma * std_normal_quantile(p));
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol) {
    if (!(b > a)) return 0.0;
    constexpr int kMaxLevels = 22;
    double prev[kMaxLevels], cur[kMaxLevels];
    prev[0] = 0.5 * (b - a) * (f(a) + f(b));
    long n = 1;
    for (int level = 1; level < kMaxLevels; ++level) {
        const double h = (b - a) / (double)(2 * n);
        double mid_sum = 0.0;
        for (long i = 0; i < n; ++i) {
            mid_sum += f(a + h * (double)(2 * i + 1));
        }
        cur[0] = 0.5 * prev[0] + h * mid_sum;
        // Richardson extrapolation along the doubling ladder.
        double pow4 = 4.0;
        for (int j = 1; j <= level; ++j) {
            cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (pow4 - 1.0);
            pow4 *= 4.0;
        }
        if (level >= 3 && std::abs(cur[level] - prev[level - 1]) <=
                              rel_tol * std::abs(cur[level]) + 1e-14) {
            return cur[level];
        }
        for (int j = 0; j <= level; ++j) prev[j] = cur[j];
        n *= 2;
    }
    return prev[kMaxLevels - 1];
}

}  // namespace seqauct
