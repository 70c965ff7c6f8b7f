#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "qneuron/surface.hpp"
#include "qneuron/wgm.hpp"

using namespace qneuron;

namespace {

SurfaceGrid uniform_grid(std::size_t rows, std::size_t cols, double value) {
    SurfaceGrid grid;
    for (std::size_t i = 0; i < rows; ++i) grid.axis1.push_back(static_cast<double>(i));
    for (std::size_t j = 0; j < cols; ++j) grid.axis2.push_back(static_cast<double>(j));
    grid.values.assign(rows * cols, value);
    return grid;
}

WgmNeuron two_input_neuron() {
    WgmNeuron neuron;
    neuron.universes = {Universe{1, {0.8, 1.1}, 0.6}, Universe{2, {1.4, 0.5}, 1.9}};
    return neuron;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("line_extrema counts strict interior sign changes") {
    const std::vector<double> single_peak{0.0, 1.0, 0.0};
    CHECK(line_extrema(single_peak) == 1);
    const std::vector<double> plateau{0.0, 1.0, 1.0, 0.0};
    CHECK(line_extrema(plateau) == 0);  // flat top is not strict
    const std::vector<double> ramp{0.0, 0.5, 1.0, 1.5};
    CHECK(line_extrema(ramp) == 0);

    // cos(6 pi x) on 101 uniform points of [0,1]: interior extrema at
    // x ~ 1/6, 1/3, 1/2, 2/3, 5/6 (the endpoint peaks do not count)
    std::vector<double> cosline;
    for (int i = 0; i <= 100; ++i)
        cosline.push_back(std::cos(6.0 * std::acos(-1.0) * i / 100.0));
    CHECK(line_extrema(cosline) == 5);
}

TEST_CASE("smoothness_metric: flat and monotone surfaces score zero") {
    CHECK(smoothness_metric(uniform_grid(5, 7, 0.3)) == 0.0);

    SurfaceGrid ramp = uniform_grid(5, 5, 0.0);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            ramp.values[i * 5 + j] = static_cast<double>(i) + 0.1 * static_cast<double>(j);
    CHECK(smoothness_metric(ramp) == 0.0);
}

TEST_CASE("smoothness_metric averages the oscillating rows") {
    // every row is cos(6 pi x) (5 extrema), every column is constant (0)
    SurfaceGrid grid = uniform_grid(101, 101, 0.0);
    for (std::size_t i = 0; i < 101; ++i)
        for (std::size_t j = 0; j < 101; ++j)
            grid.values[i * 101 + j] =
                1.0 + std::cos(6.0 * std::acos(-1.0) * static_cast<double>(j) / 100.0);
    CHECK(smoothness_metric(grid) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("validation catches degenerate grids") {
    SurfaceGrid grid = uniform_grid(2, 3, 0.1);
    CHECK_THROWS_AS(smoothness_metric(grid), std::invalid_argument);

    grid = uniform_grid(3, 3, 0.1);
    grid.values.pop_back();
    CHECK_THROWS_AS(validate(grid), std::invalid_argument);

    grid = uniform_grid(3, 3, 0.1);
    grid.values[4] = -0.2;
    CHECK_THROWS_AS(validate(grid), std::invalid_argument);
}

TEST_CASE("sample_surface: corners equal direct model calls") {
    const WgmNeuron neuron = two_input_neuron();
    const SurfaceGrid grid = sample_surface(neuron, {1.0, 2.0}, {3.0, 4.0}, 2);
    REQUIRE(grid.axis1.size() == 2);
    REQUIRE(grid.values.size() == 4);
    CHECK(grid.axis1[0] == 1.0);
    CHECK(grid.axis1[1] == 2.0);
    CHECK(grid.axis2[0] == 3.0);
    CHECK(grid.axis2[1] == 4.0);
    const double corners[4][2] = {{1.0, 3.0}, {1.0, 4.0}, {2.0, 3.0}, {2.0, 4.0}};
    for (int c = 0; c < 4; ++c) {
        const std::vector<double> x{corners[c][0], corners[c][1]};
        CHECK(grid.values[static_cast<std::size_t>(c)] == model_output(neuron, x));
    }
}

TEST_CASE("sample_surface: a single-universe model gives a constant sheet") {
    WgmNeuron neuron;
    neuron.universes = {Universe{2, {1.0, 1.5}, 0.7}};
    const SurfaceGrid grid = sample_surface(neuron, {0.0, 1.0}, {0.0, 1.0}, 5);
    // constant up to rounding; the strict-extremum metric may still pick up
    // the last-ulp wiggle of |exp(i*phase)|^2, so it gets no exactness check
    for (double v : grid.values)
        CHECK(v == doctest::Approx(grid.values[0]).epsilon(1e-13));
}

TEST_CASE("sample_surface rejects degenerate requests") {
    const WgmNeuron neuron = two_input_neuron();
    CHECK_THROWS_AS(sample_surface(neuron, {0.0, 1.0}, {0.0, 1.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_surface(neuron, {1.0, 1.0}, {0.0, 1.0}, 3), std::invalid_argument);
}

}  // TEST_SUITE
