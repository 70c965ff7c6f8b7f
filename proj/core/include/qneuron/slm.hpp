#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qneuron/amplitude.hpp"
#include "qneuron/exp_sum.hpp"

namespace qneuron {

/// One quadrature node of the discretized biphoton integral.  `offset` is the
/// node position Omega in [-half_width, half_width], `quad_weight` its
/// Gauss-Legendre weight; a, theta, w1, w2 are the trainable spectral values
/// at that node.
struct SlmNode {
    double offset = 0.0;
    double quad_weight = 1.0;
    double a = 1.0;       // >= 0
    double theta = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
};

/// Two-photon neuron: a shaped biphoton spectrum drives a sum-frequency
/// transition, and the excitation probability is the squared modulus of the
/// spectral integral, discretized on a fixed quadrature grid:
///   P(x1, x2) = norm * |sum_q rho_q * a_q * exp(i*(theta_q + w1_q*x1 + w2_q*x2))|^2.
struct SlmNeuron {
    double half_width = 1.0;  // Omega_0 > 0
    double norm = 1.0;        // > 0
    std::vector<SlmNode> nodes;
};

/// Physical spectra the node values are sampled from: pump amplitude A, fixed
/// spectral phase Phi0, and the programmable modulator phase DeltaPhi, all as
/// functions of absolute frequency; the transition sits at omega0 and the
/// spectrum is integrated over [omega0/2 - Omega0, omega0/2 + Omega0].
struct SlmSpectra {
    std::function<double(double)> amplitude;   // A(omega) >= 0
    std::function<double(double)> base_phase;  // Phi0(omega)
    std::function<double(double)> slm_phase;   // DeltaPhi(omega)
    double transition_frequency = 0.0;         // omega0
    double half_width = 1.0;                   // Omega_0
};

void validate(const SlmNeuron& neuron);

/// Discretize the spectra on a node_count-point Gauss-Legendre grid over
/// [-half_width, half_width]:
///   a(Omega)  = A(omega0/2 + Omega) * A(omega0/2 - Omega)
///   theta     = Phi0(omega0/2 + Omega) + Phi0(omega0/2 - Omega)
///   w1        = DeltaPhi(omega0/2 - Omega),  w2 = DeltaPhi(omega0/2 + Omega)
/// Throws std::invalid_argument (node_count < 2, half_width <= 0, missing
/// callables) and std::domain_error (negative pump amplitude).
SlmNeuron from_spectra(const SlmSpectra& spectra, int node_count);

Amplitude slm_amplitude(const SlmNeuron& neuron, double x1, double x2);

double excitation_probability(const SlmNeuron& neuron, double x1, double x2);

/// Rescale norm so the maximum of excitation_probability over the given
/// inputs is 1 (no-op when the maximum vanishes).
SlmNeuron calibrate_norm(const SlmNeuron& neuron,
                         std::span<const std::vector<double>> inputs);

/// Exact rewrite as an exponential sum in two variables (norm folded into the
/// term amplitudes as its square root): with omega = 1 the terms carry the
/// node phases verbatim.
ExpSum to_exp_sum(const SlmNeuron& neuron, double omega = 1.0);

// --- training interface ----------------------------------------------------
// Adjustable vector: per node, (a, theta, w1, w2).  Quadrature grid, norm and
// half-width stay fixed.  with_parameters clamps proposed a to >= 0.

std::vector<double> parameters(const SlmNeuron& neuron);
SlmNeuron with_parameters(const SlmNeuron& neuron, std::span<const double> params);
double model_output(const SlmNeuron& neuron, std::span<const double> x);
std::size_t input_arity(const SlmNeuron& neuron);

}  // namespace qneuron
