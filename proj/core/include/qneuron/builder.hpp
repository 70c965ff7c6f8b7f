#pragma once

#include <functional>
#include <span>

#include "qneuron/exp_sum.hpp"
#include "qneuron/wgm.hpp"

namespace qneuron {

using TargetFn = std::function<double(std::span<const double>)>;

/// How the target is continued outside its box when expanding in a Fourier
/// basis.  `automatic` probes the boundary values and picks `periodic` when
/// opposite faces agree, `mirrored` (even reflection, doubled period)
/// otherwise.
enum class DomainExtension { automatic, periodic, mirrored };

/// Truncated multidimensional Fourier expansion of sqrt(f) on the box,
/// sampled on a uniform (2*order+1)^d grid per effective period and
/// transformed exactly.  Terms with |coefficient| < coefficient_cutoff are
/// dropped.  Throws std::domain_error if f takes a negative value at a sample
/// point and std::invalid_argument on malformed arguments.
ExpSum fourier_sqrt(const TargetFn& f, const RectDomain& domain, double omega,
                    std::span<const int> orders,
                    DomainExtension extension = DomainExtension::automatic,
                    double coefficient_cutoff = 1e-12);

ExpSum fourier_sqrt(const TargetFn& f, const RectDomain& domain, double omega,
                    int order, DomainExtension extension = DomainExtension::automatic,
                    double coefficient_cutoff = 1e-12);

/// Shift frequencies and biases into the strictly positive orthant: every
/// frequency gains the same per-model constant max(0, -min frequency) + 1,
/// every bias gains max(0, -min bias) + 1.  Because the shifts are common to
/// all terms they only multiply the sum by a global phase, so |evaluate|^2 is
/// preserved pointwise; the result is the form round_to_wgm accepts.
ExpSum positivize(const ExpSum& sum);

/// Largest pointwise modulus the sum can reach: sum of term amplitudes.
double amplitude_radius(const ExpSum& sum);

/// Quantize a positivized sum into a waveguide neuron at scale L:
///   k_u = floor(A_u * prod(l_u) * (L + theta_u)) + 1,
/// lengths copied as-is, bias L + theta_u.  Requires L > 0 and a positivized
/// input (all frequencies and biases > 0); throws std::invalid_argument.
WgmNeuron round_to_wgm(const ExpSum& sum, double L);

/// Sup over x of |evaluate(round_to_wgm(sum, L), x)*exp(-i*omega*L) - evaluate(sum, x)|:
///   sum_u 1 / (prod(l_u) * (L + theta_u))  <=  (1/L) * sum_u 1/prod(l_u).
double rounding_bound(const ExpSum& sum, double L);

struct BuildOptions {
    int initial_order = 1;
    int max_order = 64;               // per dimension
    int validation_points_per_dim = 0;  // 0 = default (201 in 1-D, 51 otherwise)
    DomainExtension extension = DomainExtension::automatic;
    double coefficient_cutoff = 1e-12;
};

struct BuildReport {
    int order = 0;                  // per-dimension truncation order used
    std::size_t universe_count = 0;
    double scale = 0.0;             // L
    double epsilon = 0.0;
    double sup_error = 0.0;         // measured on the validation grid
    int grid_points_per_dim = 0;
};

struct BuildResult {
    WgmNeuron neuron;
    ExpSum approximant;  // positivized exponential sum the neuron quantizes
    BuildReport report;
};

/// Constructive approximation pipeline: expand sqrt(f) until the squared
/// truncation falls below epsilon/2 on the validation grid, positivize, pick
/// the rounding margin delta with delta*(2R+delta) = epsilon/2, quantize at
/// L = sum_u(1/prod l_u)/delta, and re-check the final neuron on the grid.
/// Throws std::runtime_error when the order cap is hit before epsilon/2.
BuildResult build(const TargetFn& f, const RectDomain& domain, double epsilon,
                  double omega = two_pi, const BuildOptions& options = {});

/// Max over the uniform inclusive grid of |f(x) - g(x)|.
double sup_grid_error(const TargetFn& f, const std::function<double(std::span<const double>)>& g,
                      const RectDomain& domain, int points_per_dim);

}  // namespace qneuron
