#pragma once

#include <span>
#include <vector>

#include "qneuron/anneal.hpp"
#include "qneuron/exp_sum.hpp"

namespace qneuron {

/// Rectangular sample of a two-input model.  values is row-major:
/// values[i * axis2.size() + j] = output at (axis1[i], axis2[j]).
struct SurfaceGrid {
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::vector<double> values;
};

void validate(const SurfaceGrid& grid);

/// Number of strict interior local extrema of a sampled line: index i counts
/// when (v[i]-v[i-1]) * (v[i+1]-v[i]) < 0.
int line_extrema(std::span<const double> values);

/// Mean number of strict interior local extrema per axis-parallel grid line
/// (rows and columns both contribute).  A sample is an extremum when the
/// discrete slope changes sign: (v[i]-v[i-1]) * (v[i+1]-v[i]) < 0.  Throws
/// std::invalid_argument unless the grid is at least 3x3.
double smoothness_metric(const SurfaceGrid& grid);

/// Uniform inclusive sampling of a two-input model on [range1 x range2] with
/// resolution points per axis (at least 2).
template <AnnealModel M>
SurfaceGrid sample_surface(const M& model, Interval range1, Interval range2,
                           int resolution) {
    if (resolution < 2)
        throw std::invalid_argument("sample_surface: resolution must be at least 2");
    if (!(range1.lo < range1.hi) || !(range2.lo < range2.hi))
        throw std::invalid_argument("sample_surface: empty axis range");
    SurfaceGrid grid;
    const std::size_t n = static_cast<std::size_t>(resolution);
    grid.axis1.resize(n);
    grid.axis2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(n - 1);
        grid.axis1[i] = range1.lo + (range1.hi - range1.lo) * frac;
        grid.axis2[i] = range2.lo + (range2.hi - range2.lo) * frac;
    }
    grid.values.resize(n * n);
    double x[2];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            x[0] = grid.axis1[i];
            x[1] = grid.axis2[j];
            grid.values[i * n + j] = model_output(model, std::span<const double>(x, 2));
        }
    return grid;
}

}  // namespace qneuron
