#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qneuron/amplitude.hpp"

namespace qneuron {

/// Planar stack of slitted barriers between a point source and a point
/// detector.  Geometry is 2-D: every barrier is a line parallel to the
/// source/detector planes, `gaps[j]` is the longitudinal distance between
/// plane j and plane j+1, and slit/source/detector coordinates are
/// transverse offsets within their plane.
///
/// With b barriers there are b+1 gaps and every photon trajectory consists
/// of d = b+1 straight segments, one per gap.
struct BarrierStack {
    double wavelength = 1.0;
    std::vector<double> gaps;                         // d = b+1 entries, all > 0
    std::vector<std::vector<double>> slit_positions;  // per barrier, each non-empty
    double source_position = 0.0;
    double detector_position = 0.0;
};

/// One slit choice per barrier.
struct Trajectory {
    std::vector<std::size_t> slit_choice;
};

/// Throws std::invalid_argument when the geometry is malformed (no gaps,
/// non-positive gap or wavelength, barrier/gap count mismatch, empty barrier).
void validate(const BarrierStack& stack);

/// Number of straight segments per trajectory (= gaps.size()).
std::size_t region_count(const BarrierStack& stack);

/// Product of slit counts over all barriers.
std::size_t trajectory_count(const BarrierStack& stack);

/// Straight-line distance between transverse offsets a and b on planes a
/// longitudinal distance h apart.
double path_length(double a, double b, double h);

/// Segment lengths l_0..l_{d-1} of one trajectory.
std::vector<double> segment_lengths(const BarrierStack& stack, const Trajectory& traj);

/// Amplitude of a single trajectory for per-region refractive indices n:
///   (1 / prod_j l_j) * exp(i * (2*pi/wavelength) * sum_j n_j * l_j).
/// Throws std::invalid_argument if n.size() != region_count or any n_j < 1.
Amplitude trajectory_amplitude(const BarrierStack& stack, const Trajectory& traj,
                               std::span<const double> refractive_indices);

/// Perceptron view of one trajectory: trajectory_amplitude equals
/// exp(-theta) * exp(i * dot(weights, n)).
struct NeuronView {
    std::vector<double> weights;  // (2*pi/wavelength) * l_j
    double theta = 0.0;           // sum_j ln l_j
};
NeuronView neuron_view(const BarrierStack& stack, const Trajectory& traj);

/// |sum over all trajectories of trajectory_amplitude|^2, enumerated in
/// lexicographic slit order.  Throws std::invalid_argument on malformed input
/// and std::length_error when trajectory_count exceeds 10^7.
double detection_probability(const BarrierStack& stack,
                             std::span<const double> refractive_indices);

/// Single-barrier two-slit XOR geometry: source and detector on the axis,
/// slit 2 at transverse offset r2, both planes a distance h from the barrier,
/// slit 1 placed so the two trajectories differ by 3*wavelength/2 in length
/// (first-order placement, accurate for r2 >> wavelength).
/// Requires h >= 1000 * wavelength, r2 > 0; throws std::invalid_argument.
BarrierStack xor_stack(double r2, double h, double wavelength);

/// Closed-form detection probability of the ideal two-slit XOR geometry with
/// per-region indices n1, n2: A * (1 + cos((2*pi/wavelength)*(n1+n2)*3*wavelength/4))^2
/// with A = 1/(r2^2+h^2)^2.
double xor_two_path_probability(double n1, double n2, double r2, double h,
                                double wavelength);

// --- training interface ----------------------------------------------------
// Adjustable vector: slit offsets (barrier by barrier), source offset,
// detector offset, then the gaps.  with_parameters clamps proposed gaps to a
// floor of 1e-9 so stochastic perturbation cannot leave the valid domain.

std::vector<double> parameters(const BarrierStack& stack);
BarrierStack with_parameters(const BarrierStack& stack, std::span<const double> params);

/// Model output for training: detection_probability at input x (one
/// refractive index per region).
double model_output(const BarrierStack& stack, std::span<const double> x);

/// Input dimension expected by model_output (= region_count).
std::size_t input_arity(const BarrierStack& stack);

/// Sum over regions of (max segment length - min segment length) across all
/// trajectories.  Zero iff every trajectory sees identical per-region
/// lengths; large values indicate strongly trajectory-dependent phases.
double segment_length_spread(const BarrierStack& stack);

}  // namespace qneuron
