#include "qneuron/slit_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qneuron {

namespace {

constexpr std::size_t max_enumerated_trajectories = 10'000'000;

/// Visit every trajectory in lexicographic slit order (first barrier slowest).
template <typename Fn>
void for_each_trajectory(const BarrierStack& stack, Fn&& fn) {
    const std::size_t barriers = stack.slit_positions.size();
    Trajectory traj;
    traj.slit_choice.assign(barriers, 0);
    for (;;) {
        fn(const_cast<const Trajectory&>(traj));
        std::size_t i = barriers;
        while (i > 0) {
            --i;
            if (++traj.slit_choice[i] < stack.slit_positions[i].size()) break;
            traj.slit_choice[i] = 0;
            if (i == 0) return;
        }
        if (barriers == 0) return;
    }
}

}  // namespace

void validate(const BarrierStack& stack) {
    if (!(stack.wavelength > 0.0) || !std::isfinite(stack.wavelength))
        throw std::invalid_argument("BarrierStack: wavelength must be positive");
    if (stack.gaps.empty())
        throw std::invalid_argument("BarrierStack: at least one gap required");
    if (stack.slit_positions.size() + 1 != stack.gaps.size())
        throw std::invalid_argument("BarrierStack: need one more gap than barriers");
    for (double h : stack.gaps)
        if (!(h > 0.0) || !std::isfinite(h))
            throw std::invalid_argument("BarrierStack: gaps must be positive");
    for (const auto& barrier : stack.slit_positions) {
        if (barrier.empty())
            throw std::invalid_argument("BarrierStack: barrier without slits");
        for (double s : barrier)
            if (!std::isfinite(s))
                throw std::invalid_argument("BarrierStack: non-finite slit position");
    }
    if (!std::isfinite(stack.source_position) || !std::isfinite(stack.detector_position))
        throw std::invalid_argument("BarrierStack: non-finite source/detector position");
}

std::size_t region_count(const BarrierStack& stack) { return stack.gaps.size(); }

std::size_t trajectory_count(const BarrierStack& stack) {
    std::size_t count = 1;
    for (const auto& barrier : stack.slit_positions) {
        if (barrier.empty()) return 0;
        if (count > std::numeric_limits<std::size_t>::max() / barrier.size())
            return std::numeric_limits<std::size_t>::max();
        count *= barrier.size();
    }
    return count;
}

double path_length(double a, double b, double h) { return std::hypot(h, b - a); }

std::vector<double> segment_lengths(const BarrierStack& stack, const Trajectory& traj) {
    const std::size_t d = stack.gaps.size();
    if (traj.slit_choice.size() != stack.slit_positions.size())
        throw std::invalid_argument("Trajectory: one slit choice per barrier required");
    std::vector<double> lengths(d);
    double prev = stack.source_position;
    for (std::size_t j = 0; j < d; ++j) {
        const double next = (j + 1 < d)
                                ? stack.slit_positions[j].at(traj.slit_choice[j])
                                : stack.detector_position;
        lengths[j] = path_length(prev, next, stack.gaps[j]);
        prev = next;
    }
    return lengths;
}

Amplitude trajectory_amplitude(const BarrierStack& stack, const Trajectory& traj,
                               std::span<const double> refractive_indices) {
    const std::vector<double> lengths = segment_lengths(stack, traj);
    if (refractive_indices.size() != lengths.size())
        throw std::invalid_argument("trajectory_amplitude: one refractive index per region required");
    double inv_prod = 1.0;
    double phase = 0.0;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        const double n = refractive_indices[j];
        if (!(n >= 1.0) || !std::isfinite(n))
            throw std::invalid_argument("trajectory_amplitude: refractive indices must be >= 1");
        inv_prod /= lengths[j];
        phase += n * lengths[j];
    }
    return std::polar(inv_prod, two_pi / stack.wavelength * phase);
}

NeuronView neuron_view(const BarrierStack& stack, const Trajectory& traj) {
    const std::vector<double> lengths = segment_lengths(stack, traj);
    NeuronView view;
    view.weights.resize(lengths.size());
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        view.weights[j] = two_pi / stack.wavelength * lengths[j];
        view.theta += std::log(lengths[j]);
    }
    return view;
}

double detection_probability(const BarrierStack& stack,
                             std::span<const double> refractive_indices) {
    validate(stack);
    if (refractive_indices.size() != stack.gaps.size())
        throw std::invalid_argument("detection_probability: one refractive index per region required");
    for (double n : refractive_indices)
        if (!(n >= 1.0) || !std::isfinite(n))
            throw std::invalid_argument("detection_probability: refractive indices must be >= 1");
    if (trajectory_count(stack) > max_enumerated_trajectories)
        throw std::length_error("detection_probability: more than 10^7 trajectories");
    Amplitude acc{0.0, 0.0};
    for_each_trajectory(stack, [&](const Trajectory& traj) {
        acc += trajectory_amplitude(stack, traj, refractive_indices);
    });
    return probability(acc);
}

BarrierStack xor_stack(double r2, double h, double wavelength) {
    if (!(wavelength > 0.0))
        throw std::invalid_argument("xor_stack: wavelength must be positive");
    if (!(h >= 1000.0 * wavelength))
        throw std::invalid_argument("xor_stack: gap must be at least 1000 wavelengths");
    if (!(r2 > 0.0))
        throw std::invalid_argument("xor_stack: slit offset r2 must be positive");
    // First-order slit placement: sqrt(r1^2+h^2) - sqrt(r2^2+h^2) ~= 3*wavelength/4
    // per segment when r1 = r2 + sqrt(1 + h^2/r2^2) * (3*wavelength/4).
    const double r1 = r2 + std::sqrt(1.0 + (h / r2) * (h / r2)) * 0.75 * wavelength;
    BarrierStack stack;
    stack.wavelength = wavelength;
    stack.gaps = {h, h};
    stack.slit_positions = {{r1, r2}};
    stack.source_position = 0.0;
    stack.detector_position = 0.0;
    return stack;
}

double xor_two_path_probability(double n1, double n2, double r2, double h,
                                double wavelength) {
    const double l2_sq = r2 * r2 + h * h;
    const double amp = 1.0 / (l2_sq * l2_sq);
    const double phase = two_pi / wavelength * (n1 + n2) * 0.75 * wavelength;
    const double c = 1.0 + std::cos(phase);
    return amp * c * c;
}

std::vector<double> parameters(const BarrierStack& stack) {
    std::vector<double> params;
    for (const auto& barrier : stack.slit_positions)
        params.insert(params.end(), barrier.begin(), barrier.end());
    params.push_back(stack.source_position);
    params.push_back(stack.detector_position);
    params.insert(params.end(), stack.gaps.begin(), stack.gaps.end());
    return params;
}

BarrierStack with_parameters(const BarrierStack& stack, std::span<const double> params) {
    std::size_t expected = 2 + stack.gaps.size();
    for (const auto& barrier : stack.slit_positions) expected += barrier.size();
    if (params.size() != expected)
        throw std::invalid_argument("with_parameters: parameter count mismatch");
    BarrierStack out = stack;
    std::size_t i = 0;
    for (auto& barrier : out.slit_positions)
        for (double& s : barrier) s = params[i++];
    out.source_position = params[i++];
    out.detector_position = params[i++];
    for (double& h : out.gaps) h = std::max(params[i++], 1e-9);
    return out;
}

double model_output(const BarrierStack& stack, std::span<const double> x) {
    return detection_probability(stack, x);
}

std::size_t input_arity(const BarrierStack& stack) { return stack.gaps.size(); }

double segment_length_spread(const BarrierStack& stack) {
    validate(stack);
    const std::size_t d = stack.gaps.size();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for_each_trajectory(stack, [&](const Trajectory& traj) {
        const std::vector<double> lengths = segment_lengths(stack, traj);
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], lengths[j]);
            hi[j] = std::max(hi[j], lengths[j]);
        }
    });
    double spread = 0.0;
    for (std::size_t j = 0; j < d; ++j) spread += hi[j] - lo[j];
    return spread;
}

}  // namespace qneuron
