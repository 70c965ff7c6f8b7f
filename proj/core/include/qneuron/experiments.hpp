#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qneuron/anneal.hpp"
#include "qneuron/slit_system.hpp"
#include "qneuron/slm.hpp"
#include "qneuron/surface.hpp"

namespace qneuron {

// Logical levels of the two-valued refractive-index encoding.  The high level
// 5/3 makes the ideal two-slit geometry (path difference 3*wavelength/2) an
// exact XOR gate: per-pattern phases 3pi, 4pi, 4pi, 5pi.
inline constexpr double boolean_low = 1.0;
inline constexpr double boolean_high = 5.0 / 3.0;

/// The four input patterns (low,low), (low,high), (high,low), (high,high).
std::array<std::array<double, 2>, 4> boolean_input_patterns();

/// Truth table of two-variable boolean function `index` (0..15): bit i of
/// index is the target for pattern i.
std::array<double, 4> boolean_targets(int index);

/// Conventional name, e.g. 6 -> "XOR", 8 -> "AND".
std::string boolean_function_name(int index);

TrainingSet boolean_training_set(int index);

// --- two-slit XOR demonstration ---------------------------------------------

struct XorDemoReport {
    double wavelength = 0.0;
    double gap = 0.0;                       // h
    double slit_offset = 0.0;               // r2
    double path_difference = 0.0;           // total, ideally 3*wavelength/2
    std::array<double, 4> raw{};            // detection probabilities
    std::array<double, 4> normalized{};     // raw / max(raw)
    std::array<double, 4> closed_form{};    // ideal-geometry prediction
    double max_deviation = 0.0;             // of normalized from {0,1,1,0}
    bool pattern_ok = false;                // max_deviation < 1e-3
    BarrierStack stack;
};

/// Drive the analytic XOR geometry through the path-sum simulator.  The slit
/// offset defaults to five gaps so the first-order slit placement keeps the
/// path difference within 1e-6 wavelengths of the ideal 3*wavelength/2.
XorDemoReport run_xor_demo(double h_over_lambda, double r2_over_h = 5.0,
                           double wavelength = 1.0);

// --- full boolean suite -------------------------------------------------------

/// Fresh single-barrier four-slit geometry with slits, source and detector
/// uniform in [-2, 2] and both gaps uniform in [0.5, 2.5] (wavelength 1).
BarrierStack random_four_slit_stack(std::mt19937_64& gen);

struct BooleanSuiteConfig {
    std::uint64_t seed = 1;
    int restarts = 20;
    double success_threshold = 0.1;  // max pattern deviation
    AnnealConfig anneal;             // per-restart seed is derived from `seed`
};

struct BooleanFunctionResult {
    int index = 0;
    std::string name;
    bool success = false;
    int restarts_used = 0;      // restarts consumed (== restarts when failed)
    double best_deviation = 0.0;
    double final_error = 0.0;
    BarrierStack model;
};

struct BooleanSuiteReport {
    std::vector<BooleanFunctionResult> results;
    bool all_passed = false;
};

/// Train all sixteen two-variable boolean functions on the four-slit
/// geometry, restarting from fresh random stacks until the trained network
/// reproduces the truth table within the success threshold.
BooleanSuiteReport run_boolean_suite(const BooleanSuiteConfig& config = {});

// --- interference-landscape comparison ---------------------------------------

struct SmoothnessComparison {
    BarrierStack constrained_model;    // trained with small segment spread
    BarrierStack unconstrained_model;  // trained with spread pushed large
    double constrained_spread = 0.0;
    double unconstrained_spread = 0.0;
    double constrained_metric = 0.0;
    double unconstrained_metric = 0.0;
    double constrained_deviation = 0.0;
    double unconstrained_deviation = 0.0;
    SurfaceGrid constrained_surface;
    SurfaceGrid unconstrained_surface;
    bool smoother = false;  // constrained_metric < unconstrained_metric
};

/// Train AND twice from the same random stack: once with a penalty keeping
/// the per-region segment-length spread below half a wavelength, once with a
/// penalty forcing it above four wavelengths, then compare the smoothness of
/// the response surfaces over the logical input square.
SmoothnessComparison run_smoothness_comparison(std::uint64_t seed, int resolution = 101);

// --- multiphoton neuron training ----------------------------------------------

/// Fresh neuron on a node_count-point quadrature grid over
/// [-half_width, half_width]: a uniform in [0.2, 1], theta uniform in
/// [-pi, pi], w1/w2 uniform in [-3, 3], norm 1.
SlmNeuron random_slm_neuron(int node_count, double half_width, std::mt19937_64& gen);

struct SlmTrainOutcome {
    SlmNeuron model;
    TrainReport report;
    double max_deviation = 0.0;
    bool success = false;
    int restarts_used = 0;
};

/// Anneal the node spectra of a fresh random neuron against the training set,
/// restarting until the largest deviation falls below the threshold.
SlmTrainOutcome train_slm(const TrainingSet& set, std::uint64_t seed,
                          int node_count = 32, int restarts = 20,
                          double success_threshold = 0.1,
                          const AnnealConfig& base = {});

}  // namespace qneuron
