#include "qneuron/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron {

void validate(const SurfaceGrid& grid) {
    if (grid.axis1.empty() || grid.axis2.empty())
        throw std::invalid_argument("SurfaceGrid: empty axis");
    if (grid.values.size() != grid.axis1.size() * grid.axis2.size())
        throw std::invalid_argument("SurfaceGrid: value count does not match axes");
    for (double v : grid.values)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("SurfaceGrid: values must be finite and non-negative");
}

namespace {

int count_extrema(const double* v, std::size_t count, std::size_t stride) {
    int extrema = 0;
    for (std::size_t i = 1; i + 1 < count; ++i) {
        const double left = v[i * stride] - v[(i - 1) * stride];
        const double right = v[(i + 1) * stride] - v[i * stride];
        if (left * right < 0.0) ++extrema;
    }
    return extrema;
}

}  // namespace

int line_extrema(std::span<const double> values) {
    return count_extrema(values.data(), values.size(), 1);
}

double smoothness_metric(const SurfaceGrid& grid) {
    validate(grid);
    const std::size_t rows = grid.axis1.size();
    const std::size_t cols = grid.axis2.size();
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("smoothness_metric: grid must be at least 3x3");
    long total = 0;
    for (std::size_t i = 0; i < rows; ++i)
        total += count_extrema(grid.values.data() + i * cols, cols, 1);
    for (std::size_t j = 0; j < cols; ++j)
        total += count_extrema(grid.values.data() + j, rows, cols);
    return static_cast<double>(total) / static_cast<double>(rows + cols);
}

}  // namespace qneuron
