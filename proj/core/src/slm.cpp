#include "qneuron/slm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qneuron/quadrature.hpp"

namespace qneuron {

void validate(const SlmNeuron& neuron) {
    if (!(neuron.half_width > 0.0) || !std::isfinite(neuron.half_width))
        throw std::invalid_argument("SlmNeuron: half_width must be positive");
    if (!(neuron.norm > 0.0) || !std::isfinite(neuron.norm))
        throw std::invalid_argument("SlmNeuron: norm must be positive");
    if (neuron.nodes.size() < 2)
        throw std::invalid_argument("SlmNeuron: at least two quadrature nodes required");
    for (const SlmNode& node : neuron.nodes) {
        if (std::abs(node.offset) > neuron.half_width * (1.0 + 1e-12))
            throw std::invalid_argument("SlmNeuron: node offset outside [-half_width, half_width]");
        if (!(node.quad_weight > 0.0))
            throw std::invalid_argument("SlmNeuron: quadrature weights must be positive");
        if (!(node.a >= 0.0) || !std::isfinite(node.a))
            throw std::invalid_argument("SlmNeuron: spectral amplitudes must be non-negative");
        if (!std::isfinite(node.theta) || !std::isfinite(node.w1) || !std::isfinite(node.w2))
            throw std::invalid_argument("SlmNeuron: non-finite node phase");
    }
}

SlmNeuron from_spectra(const SlmSpectra& spectra, int node_count) {
    if (!spectra.amplitude || !spectra.base_phase || !spectra.slm_phase)
        throw std::invalid_argument("from_spectra: all three spectra required");
    if (!(spectra.half_width > 0.0) || !std::isfinite(spectra.half_width))
        throw std::invalid_argument("from_spectra: half_width must be positive");
    if (node_count < 2)
        throw std::invalid_argument("from_spectra: at least two quadrature nodes required");

    const QuadratureRule rule =
        gauss_legendre(node_count, -spectra.half_width, spectra.half_width);
    const double center = spectra.transition_frequency / 2.0;

    SlmNeuron neuron;
    neuron.half_width = spectra.half_width;
    neuron.norm = 1.0;
    neuron.nodes.resize(rule.nodes.size());
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double omega = rule.nodes[q];
        const double up = spectra.amplitude(center + omega);
        const double down = spectra.amplitude(center - omega);
        if (up < 0.0 || down < 0.0)
            throw std::domain_error("from_spectra: pump amplitude must be non-negative");
        SlmNode& node = neuron.nodes[q];
        node.offset = omega;
        node.quad_weight = rule.weights[q];
        node.a = up * down;
        node.theta = spectra.base_phase(center + omega) + spectra.base_phase(center - omega);
        node.w1 = spectra.slm_phase(center - omega);
        node.w2 = spectra.slm_phase(center + omega);
    }
    return neuron;
}

Amplitude slm_amplitude(const SlmNeuron& neuron, double x1, double x2) {
    Amplitude acc{0.0, 0.0};
    for (const SlmNode& node : neuron.nodes)
        acc += std::polar(node.quad_weight * node.a,
                          node.theta + node.w1 * x1 + node.w2 * x2);
    return acc;
}

double excitation_probability(const SlmNeuron& neuron, double x1, double x2) {
    return neuron.norm * probability(slm_amplitude(neuron, x1, x2));
}

SlmNeuron calibrate_norm(const SlmNeuron& neuron,
                         std::span<const std::vector<double>> inputs) {
    double peak = 0.0;
    for (const std::vector<double>& x : inputs) {
        if (x.size() != 2)
            throw std::invalid_argument("calibrate_norm: inputs must be two-dimensional");
        peak = std::max(peak, excitation_probability(neuron, x[0], x[1]));
    }
    SlmNeuron out = neuron;
    if (peak > 0.0) out.norm = neuron.norm / peak;
    return out;
}

ExpSum to_exp_sum(const SlmNeuron& neuron, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("to_exp_sum: omega must be positive");
    const double scale = std::sqrt(neuron.norm);
    ExpSum sum;
    sum.omega = omega;
    for (const SlmNode& node : neuron.nodes) {
        const double amplitude = scale * node.quad_weight * node.a;
        if (amplitude == 0.0) continue;
        ExpSumTerm term;
        term.amplitude = amplitude;
        term.frequencies = {node.w1 / omega, node.w2 / omega};
        term.bias = node.theta / omega;
        sum.terms.push_back(std::move(term));
    }
    return sum;
}

std::vector<double> parameters(const SlmNeuron& neuron) {
    std::vector<double> params;
    params.reserve(neuron.nodes.size() * 4);
    for (const SlmNode& node : neuron.nodes) {
        params.push_back(node.a);
        params.push_back(node.theta);
        params.push_back(node.w1);
        params.push_back(node.w2);
    }
    return params;
}

SlmNeuron with_parameters(const SlmNeuron& neuron, std::span<const double> params) {
    if (params.size() != neuron.nodes.size() * 4)
        throw std::invalid_argument("SlmNeuron: parameter count mismatch");
    SlmNeuron out = neuron;
    std::size_t i = 0;
    for (SlmNode& node : out.nodes) {
        node.a = std::max(params[i++], 0.0);
        node.theta = params[i++];
        node.w1 = params[i++];
        node.w2 = params[i++];
    }
    return out;
}

double model_output(const SlmNeuron& neuron, std::span<const double> x) {
    if (x.size() != 2)
        throw std::invalid_argument("SlmNeuron: input arity is two");
    return excitation_probability(neuron, x[0], x[1]);
}

std::size_t input_arity(const SlmNeuron&) { return 2; }

}  // namespace qneuron
