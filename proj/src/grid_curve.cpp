#include "seqauct/grid_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqauct {

double GridCurve::interpolate(double v) const {
    if (grid.empty()) throw std::domain_error("GridCurve::interpolate: empty curve");
    if (v <= grid.front()) return v < grid.front() ? 0.0 : values.front();
    if (v >= grid.back()) return v > grid.back() ? 1.0 : values.back();
    const auto it = std::upper_bound(grid.begin(), grid.end(), v);
    const std::size_t i = (std::size_t)(it - grid.begin());
    const double x0 = grid[i - 1], x1 = grid[i];
    const double y0 = values[i - 1], y1 = values[i];
    const double t = (v - x0) / (x1 - x0);
    return y0 + t * (y1 - y0);
}

void GridCurve::validate() const {
    if (grid.size() != values.size()) {
        throw std::invalid_argument("GridCurve: grid/value lengths differ");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("GridCurve: grid not strictly increasing");
        }
    }
}

double trapezoid_integral(const GridCurve& curve) {
    curve.validate();
    if (curve.size() < 2) throw std::domain_error("trapezoid_integral: need at least 2 grid points");
    double sum = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        sum += 0.5 * (curve.grid[i] - curve.grid[i - 1]) *
               (curve.values[i] + curve.values[i - 1]);
    }
    return sum;
}

GridCurve empirical_cdf(const std::vector<double>& samples,
                        const std::vector<double>& grid) {
    if (samples.empty()) throw std::domain_error("empirical_cdf: empty sample");
    std::vector<double> sorted(samples);
    std::sort(sorted.begin(), sorted.end());
    GridCurve out;
    out.grid = grid;
    out.values.reserve(grid.size());
    const double n = (double)sorted.size();
    for (double v : grid) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), v);
        out.values.push_back((double)(it - sorted.begin()) / n);
    }
    return out;
}

void monotone_rearrange(GridCurve& curve) {
    double running = 0.0;
    for (double& y : curve.values) {
        running = std::max(running, y);
        y = std::min(std::max(running, 0.0), 1.0);
        running = y;
    }
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> out((std::size_t)n);
    const double step = (hi - lo) / (double)(n - 1);
    for (int i = 0; i < n; ++i) out[(std::size_t)i] = lo + step * (double)i;
    out.back() = hi;
    return out;
}

double sample_quantile(std::vector<double> xs, double p) {
    if (xs.empty()) throw std::domain_error("sample_quantile: empty sample");
    if (p < 0.0 || p > 1.0) throw std::domain_error("sample_quantile: p outside [0, 1]");
    std::sort(xs.begin(), xs.end());
    const double pos = p * (double)(xs.size() - 1);
    const std::size_t i = (std::size_t)pos;
    if (i + 1 >= xs.size()) return xs.back();
    const double frac = pos - (double)i;
    return xs[i] + frac * (xs[i + 1] - xs[i]);
}

std::vector<double> default_grid(std::vector<double> pooled, int n) {
    if (pooled.empty()) throw std::domain_error("default_grid: empty pooled sample");
    double lo = sample_quantile(pooled, 0.005);
    double hi = sample_quantile(pooled, 0.995);
    if (!(hi > lo)) {
        const double pad = std::max(1e-9, std::abs(lo) * 1e-9);
        lo -= pad;
        hi += pad;
    }
    return linspace(lo, hi, n);
}

}  // namespace seqauct
