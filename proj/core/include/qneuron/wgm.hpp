#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qneuron/amplitude.hpp"

namespace qneuron {

/// One parallel branch ("universe") of the waveguide-model neuron: k identical
/// single-photon emitters behind waveguides of lengths l_1..l_d (one per input
/// component) plus a bias guide of length theta.
struct Universe {
    std::int64_t multiplicity = 1;  // k >= 1
    std::vector<double> lengths;    // all > 0
    double bias_length = 1.0;       // > 0
};

/// Coherent sum over universes:
///   g(x) = sum_u k_u / (prod_j l_uj * theta_u) * exp(i*omega*(dot(l_u, x) + theta_u))
/// Output is |g(x)|^2.
struct WgmNeuron {
    double omega = two_pi;
    std::vector<Universe> universes;
};

/// Throws std::invalid_argument on malformed models (omega <= 0, k < 1,
/// non-positive length or bias, inconsistent input arity across universes).
void validate(const WgmNeuron& neuron);

/// Input dimension (lengths per universe); 0 for an empty model.
std::size_t input_arity(const WgmNeuron& neuron);

Amplitude evaluate(const WgmNeuron& neuron, std::span<const double> x);

double output(const WgmNeuron& neuron, std::span<const double> x);

// --- training interface ----------------------------------------------------
// Adjustable vector: per universe, the d waveguide lengths then the bias
// length.  Multiplicities and omega stay fixed.  with_parameters clamps any
// non-positive proposed length to a floor of 1e-9.

std::vector<double> parameters(const WgmNeuron& neuron);
WgmNeuron with_parameters(const WgmNeuron& neuron, std::span<const double> params);
double model_output(const WgmNeuron& neuron, std::span<const double> x);

}  // namespace qneuron
