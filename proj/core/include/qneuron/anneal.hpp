#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qneuron/rng.hpp"

namespace qneuron {

struct TrainingPair {
    std::vector<double> input;
    double target = 0.0;
};

struct TrainingSet {
    std::vector<TrainingPair> pairs;
};

inline std::size_t input_arity(const TrainingSet& set) {
    return set.pairs.empty() ? 0 : set.pairs.front().input.size();
}

inline void validate(const TrainingSet& set) {
    if (set.pairs.empty())
        throw std::invalid_argument("TrainingSet: at least one pair required");
    const std::size_t arity = input_arity(set);
    if (arity == 0) throw std::invalid_argument("TrainingSet: empty input vector");
    for (const TrainingPair& pair : set.pairs) {
        if (pair.input.size() != arity)
            throw std::invalid_argument("TrainingSet: inconsistent input arity");
        for (double v : pair.input)
            if (!std::isfinite(v))
                throw std::invalid_argument("TrainingSet: non-finite input");
        if (!std::isfinite(pair.target))
            throw std::invalid_argument("TrainingSet: non-finite target");
    }
}

struct AnnealConfig {
    std::optional<double> initial_temperature;  // default: initial error
    int steps_per_epoch = 100;                  // proposals between temperature updates
    double beta = 1.0;                          // temperature scale
    double gamma = 0.05;                        // exponential cooling rate
    double step_scale = 0.05;                   // proposal half-width
    int max_epochs = 500;
    int stability_window = 5;                   // epochs of quiescence before stopping
    double stability_tolerance = 1e-4;          // max relative parameter change
    std::uint64_t seed = 1;
    bool perturb_all = false;                   // perturb every parameter per step
};

inline void validate(const AnnealConfig& config) {
    if (config.initial_temperature && !(*config.initial_temperature > 0.0))
        throw std::invalid_argument("AnnealConfig: initial temperature must be positive");
    if (config.steps_per_epoch < 1)
        throw std::invalid_argument("AnnealConfig: steps_per_epoch must be positive");
    if (!(config.beta > 0.0)) throw std::invalid_argument("AnnealConfig: beta must be positive");
    if (!(config.gamma > 0.0))
        throw std::invalid_argument("AnnealConfig: gamma must be positive");
    if (!(config.step_scale > 0.0))
        throw std::invalid_argument("AnnealConfig: step_scale must be positive");
    if (config.max_epochs < 1)
        throw std::invalid_argument("AnnealConfig: max_epochs must be positive");
    if (config.stability_window < 1)
        throw std::invalid_argument("AnnealConfig: stability_window must be positive");
    if (!(config.stability_tolerance > 0.0))
        throw std::invalid_argument("AnnealConfig: stability_tolerance must be positive");
}

struct TrainReport {
    double final_error = 0.0;          // objective of the returned model
    std::vector<double> error_trace;   // objective of the current state, one per epoch
    std::uint64_t accepted_moves = 0;
    int epochs = 0;
    bool converged = false;
};

/// Metropolis acceptance rule: 1 for non-increasing moves (delta_e <= 0,
/// including exactly 0), exp(-delta_e/temperature) otherwise.
inline double accept_probability(double delta_e, double temperature) {
    if (delta_e <= 0.0) return 1.0;
    return std::exp(-delta_e / temperature);
}

/// Anything trainable: exposes a flat parameter vector, can be rebuilt from a
/// proposed vector (clamping into its valid domain as needed), and maps an
/// input to a scalar output.
template <typename M>
concept AnnealModel = requires(const M& m, std::span<const double> v) {
    { parameters(m) } -> std::convertible_to<std::vector<double>>;
    { with_parameters(m, v) } -> std::convertible_to<M>;
    { model_output(m, v) } -> std::convertible_to<double>;
};

/// Squared-error functional: sum over the set of (output - target)^2.
template <AnnealModel M>
double error_functional(const M& model, const TrainingSet& set) {
    validate(set);
    double acc = 0.0;
    for (const TrainingPair& pair : set.pairs) {
        const double diff = model_output(model, pair.input) - pair.target;
        acc += diff * diff;
    }
    return acc;
}

/// Largest absolute deviation from a target over the training set.
template <AnnealModel M>
double max_deviation(const M& model, const TrainingSet& set) {
    double dev = 0.0;
    for (const TrainingPair& pair : set.pairs)
        dev = std::max(dev, std::abs(model_output(model, pair.input) - pair.target));
    return dev;
}

/// Metropolis annealing with exponential cooling.  Each step perturbs one
/// uniformly chosen parameter (or all of them with perturb_all) by
/// +-step_scale with a random sign and accepts by the Metropolis rule;
/// every steps_per_epoch steps the temperature is reset to
/// beta * E_current * exp(-gamma * epoch).  Stops when the best objective
/// falls below 1e-6 or the parameter vector is stable for stability_window
/// consecutive epochs (converged), or on epoch exhaustion / temperature
/// underflow below 1e-300 (not converged).  The best model ever visited is
/// returned, together with the per-epoch objective trace of the current
/// state; the optional penalty term joins the objective and is the hook for
/// soft geometry constraints.
template <AnnealModel M>
std::pair<M, TrainReport> train(const M& initial, const TrainingSet& set,
                                const AnnealConfig& config,
                                const std::function<double(const M&)>& penalty = {}) {
    validate(config);
    validate(set);
    const auto objective = [&](const M& m) {
        double e = error_functional(m, set);
        if (penalty) e += penalty(m);
        return e;
    };

    M current = initial;
    std::vector<double> params = parameters(current);
    if (params.empty()) throw std::invalid_argument("train: model has no parameters");
    double current_error = objective(current);

    M best = current;
    double best_error = current_error;

    TrainReport report;
    report.error_trace.push_back(current_error);
    if (best_error < 1e-6) {
        report.final_error = best_error;
        report.converged = true;
        return {best, report};
    }

    std::mt19937_64 gen(config.seed);
    double temperature = config.initial_temperature.value_or(current_error);
    std::vector<double> prev_params = params;
    int stable_epochs = 0;

    for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
        for (int step = 0; step < config.steps_per_epoch; ++step) {
            std::vector<double> candidate = params;
            if (config.perturb_all) {
                for (double& p : candidate)
                    p += coin_flip(gen) ? config.step_scale : -config.step_scale;
            } else {
                const std::size_t i = uniform_index(gen, candidate.size());
                candidate[i] += coin_flip(gen) ? config.step_scale : -config.step_scale;
            }
            M proposal = with_parameters(current, candidate);
            const double proposal_error = objective(proposal);
            const double u = uniform_unit(gen);
            if (u < accept_probability(proposal_error - current_error, temperature)) {
                current = std::move(proposal);
                params = parameters(current);  // canonical (clamped) values
                current_error = proposal_error;
                ++report.accepted_moves;
                if (current_error < best_error) {
                    best = current;
                    best_error = current_error;
                }
            }
        }
        report.epochs = epoch;
        report.error_trace.push_back(current_error);
        if (best_error < 1e-6) {
            report.converged = true;
            break;
        }
        double max_rel = 0.0;
        for (std::size_t i = 0; i < params.size(); ++i)
            max_rel = std::max(max_rel, std::abs(params[i] - prev_params[i]) /
                                            std::max(std::abs(prev_params[i]), 1e-12));
        prev_params = params;
        if (max_rel < config.stability_tolerance) {
            if (++stable_epochs >= config.stability_window) {
                report.converged = true;
                break;
            }
        } else {
            stable_epochs = 0;
        }
        temperature = config.beta * current_error * std::exp(-config.gamma * epoch);
        if (temperature < 1e-300) break;
    }

    report.final_error = best_error;
    return {best, report};
}

}  // namespace qneuron
