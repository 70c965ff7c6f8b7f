#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qneuron/builder.hpp"
#include "qneuron/quadrature.hpp"
#include "qneuron/rng.hpp"
#include "qneuron/slit_system.hpp"
#include "qneuron/slm.hpp"
#include "qneuron/surface.hpp"
#include "qneuron/wgm.hpp"

namespace {

using namespace qneuron;

BarrierStack small_stack() {
    BarrierStack stack;
    stack.wavelength = 0.8;
    stack.gaps = {1.5, 2.0, 1.2};
    stack.slit_positions = {{-0.4, 0.7}, {0.1, -0.9, 1.3}};
    stack.source_position = 0.25;
    stack.detector_position = -0.35;
    return stack;
}

// four barriers x ten slits = 10^4 trajectories
BarrierStack wide_stack() {
    std::mt19937_64 gen(7);
    BarrierStack stack;
    stack.wavelength = 1.0;
    stack.slit_positions.assign(4, std::vector<double>(10));
    for (auto& barrier : stack.slit_positions)
        for (double& s : barrier) s = uniform_range(gen, -2.0, 2.0);
    stack.gaps.assign(5, 1.0);
    return stack;
}

void bm_detection_probability_small(benchmark::State& state) {
    const BarrierStack stack = small_stack();
    const std::vector<double> n{1.2, 1.5, 1.1};
    for (auto _ : state) benchmark::DoNotOptimize(detection_probability(stack, n));
}
BENCHMARK(bm_detection_probability_small);

void bm_detection_probability_wide(benchmark::State& state) {
    const BarrierStack stack = wide_stack();
    const std::vector<double> n{1.2, 1.5, 1.1, 1.7, 1.3};
    for (auto _ : state) benchmark::DoNotOptimize(detection_probability(stack, n));
}
BENCHMARK(bm_detection_probability_wide);

void bm_wgm_output(benchmark::State& state) {
    std::mt19937_64 gen(11);
    WgmNeuron neuron;
    neuron.universes.resize(static_cast<std::size_t>(state.range(0)));
    for (Universe& u : neuron.universes) {
        u.multiplicity = static_cast<std::int64_t>(uniform_index(gen, 40)) + 1;
        u.lengths = {uniform_range(gen, 0.5, 3.0), uniform_range(gen, 0.5, 3.0)};
        u.bias_length = uniform_range(gen, 0.5, 3.0);
    }
    const std::vector<double> x{0.3, 0.7};
    for (auto _ : state) benchmark::DoNotOptimize(output(neuron, x));
}
BENCHMARK(bm_wgm_output)->Arg(8)->Arg(64);

void bm_gauss_legendre_64(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(64));
}
BENCHMARK(bm_gauss_legendre_64);

void bm_fourier_sqrt(benchmark::State& state) {
    const RectDomain line{{{0.0, 1.0}}};
    const TargetFn target = [](std::span<const double> x) {
        const double c = (1.0 + std::cos(two_pi * x[0])) / 2.0;
        return c * c;
    };
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fourier_sqrt(target, line, two_pi, order));
}
BENCHMARK(bm_fourier_sqrt)->Arg(4)->Arg(32);

void bm_smoothness_metric(benchmark::State& state) {
    SurfaceGrid grid;
    grid.axis1.resize(101);
    grid.axis2.resize(101);
    grid.values.resize(101 * 101);
    for (std::size_t i = 0; i < 101; ++i) {
        grid.axis1[i] = grid.axis2[i] = static_cast<double>(i) / 100.0;
        for (std::size_t j = 0; j < 101; ++j)
            grid.values[i * 101 + j] =
                2.0 + std::cos(6.0 * two_pi * grid.axis1[i]) * std::sin(4.0 * two_pi * grid.axis1[j]);
    }
    for (auto _ : state) benchmark::DoNotOptimize(smoothness_metric(grid));
}
BENCHMARK(bm_smoothness_metric);

void bm_excitation_probability(benchmark::State& state) {
    std::mt19937_64 gen(3);
    SlmNeuron neuron;
    const QuadratureRule rule = gauss_legendre(32, -1.0, 1.0);
    neuron.nodes.resize(rule.nodes.size());
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        neuron.nodes[q].offset = rule.nodes[q];
        neuron.nodes[q].quad_weight = rule.weights[q];
        neuron.nodes[q].a = uniform_range(gen, 0.2, 1.0);
        neuron.nodes[q].theta = uniform_range(gen, -3.0, 3.0);
        neuron.nodes[q].w1 = uniform_range(gen, -3.0, 3.0);
        neuron.nodes[q].w2 = uniform_range(gen, -3.0, 3.0);
    }
    for (auto _ : state) benchmark::DoNotOptimize(excitation_probability(neuron, 1.3, 0.7));
}
BENCHMARK(bm_excitation_probability);

}  // namespace

BENCHMARK_MAIN();
