#pragma once
// A function tabulated on a strictly increasing valuation grid.  Bound
// curves, standard errors, and confidence bands all live in this shape.

#include <cstddef>
#include <vector>

namespace seqauct {

struct GridCurve {
    std::vector<double> grid;
    std::vector<double> values;

    std::size_t size() const { return grid.size(); }

    // Piecewise-linear evaluation; CDF-style extension outside the grid
    // (0 below the first point, 1 above the last).
    double interpolate(double v) const;

    void validate() const;  // throws on length mismatch or non-increasing grid
};

// Trapezoid rule over the curve's own grid.  Fewer than 2 points is a
// domain error.
double trapezoid_integral(const GridCurve& curve);

// Right-continuous empirical CDF of `samples` evaluated at `grid`.
GridCurve empirical_cdf(const std::vector<double>& samples,
                        const std::vector<double>& grid);

// Running max along the grid, then clip to [0, 1].  Applied to every
// final bound curve; the estimators themselves can be non-monotone.
void monotone_rearrange(GridCurve& curve);

// n equally spaced points between the 0.5th and 99.5th percentile of the
// pooled sample.
std::vector<double> default_grid(std::vector<double> pooled, int n = 200);

std::vector<double> linspace(double lo, double hi, int n);

// Type-7 (linear interpolation) sample quantile; sorts a copy.
double sample_quantile(std::vector<double> xs, double p);

}  // namespace seqauct
