// Acceptance checklist for the library and the bundled CLI.  Each criterion
// prints exactly one line ("criterion N: PASS/FAIL (detail)"); the process
// exits 0 only when every selected criterion passes.  Run without arguments
// for the full list, or pass criterion numbers to run a subset.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qneuron/builder.hpp"
#include "qneuron/experiments.hpp"
#include "qneuron/rng.hpp"
#include "qneuron/slit_system.hpp"
#include "qneuron/slm.hpp"
#include "qneuron/surface.hpp"
#include "qneuron/wgm.hpp"

namespace {

using namespace qneuron;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// --- criterion 1: analytic XOR gate ------------------------------------------

Outcome criterion_1() {
    const auto start = Clock::now();
    const XorDemoReport report = run_xor_demo(1e4);
    const double elapsed = seconds_since(start);

    const std::array<double, 4> truth{0.0, 1.0, 1.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(report.normalized[i] - truth[i]));

    const double r2 = report.slit_offset;
    const double h = report.gap;
    const double l2_sq = r2 * r2 + h * h;
    const double amp = 1.0 / (l2_sq * l2_sq);
    double closed_worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        closed_worst =
            std::max(closed_worst, std::abs(report.closed_form[i] - amp * 4.0 * truth[i]));

    const bool pass = worst < 1e-3 && closed_worst <= 4e-15 * (4.0 * amp) && elapsed < 1.0;
    return {pass, fmt("max deviation %.3g, closed-form gap %.3g of %.3g, %.3f s", worst,
                      closed_worst, 4.0 * amp, elapsed)};
}

// --- criterion 2: path sum vs. independent enumeration ------------------------

// Depth-first recursive enumeration, ascending slit index per barrier, i.e.
// the same lexicographic order the library's iterative odometer uses, but
// built from scratch on top of <cmath> and <complex> only.
void oracle_walk(const BarrierStack& stack, std::span<const double> n, std::size_t barrier,
                 double prev_offset, double inv_prod, double phase, Amplitude& acc) {
    const std::size_t barriers = stack.slit_positions.size();
    if (barrier == barriers) {
        const double l = std::hypot(stack.gaps[barrier], stack.detector_position - prev_offset);
        acc += std::polar(inv_prod / l, two_pi / stack.wavelength * (phase + n[barrier] * l));
        return;
    }
    for (double slit : stack.slit_positions[barrier]) {
        const double l = std::hypot(stack.gaps[barrier], slit - prev_offset);
        oracle_walk(stack, n, barrier + 1, slit, inv_prod / l, phase + n[barrier] * l, acc);
    }
}

double oracle_probability(const BarrierStack& stack, std::span<const double> n) {
    Amplitude acc{0.0, 0.0};
    oracle_walk(stack, n, 0, stack.source_position, 1.0, 0.0, acc);
    return acc.real() * acc.real() + acc.imag() * acc.imag();
}

Outcome criterion_2() {
    const auto start = Clock::now();
    double worst_rel = 0.0;
    int violations = 0;
    std::size_t heaviest = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::mt19937_64 gen(split_seed(1002, static_cast<std::uint64_t>(trial)));
        BarrierStack stack;
        stack.wavelength = uniform_range(gen, 0.5, 2.0);
        const std::size_t barriers = uniform_index(gen, 4) + 1;
        stack.slit_positions.resize(barriers);
        for (auto& barrier : stack.slit_positions) {
            barrier.resize(uniform_index(gen, 10) + 1);
            for (double& s : barrier) s = uniform_range(gen, -2.0, 2.0);
        }
        stack.gaps.resize(barriers + 1);
        for (double& g : stack.gaps) g = uniform_range(gen, 0.5, 2.5);
        stack.source_position = uniform_range(gen, -2.0, 2.0);
        stack.detector_position = uniform_range(gen, -2.0, 2.0);

        std::vector<double> n(stack.gaps.size());
        for (double& v : n) v = uniform_range(gen, 1.0, 2.0);

        heaviest = std::max(heaviest, trajectory_count(stack));
        const double lib = detection_probability(stack, n);
        const double ref = oracle_probability(stack, n);
        const double rel = ref == 0.0 ? std::abs(lib) : std::abs(lib - ref) / ref;
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-12) ++violations;
    }
    const double elapsed = seconds_since(start);
    const bool pass = violations == 0 && elapsed < 30.0;
    return {pass, fmt("50 stacks (largest %zu trajectories), worst relative gap %.3g, "
                      "%d violation(s), %.3f s",
                      heaviest, worst_rel, violations, elapsed)};
}

// --- criteria 3 and 6: constructive approximation ------------------------------

double sincos_target(std::span<const double> x) {
    const double s = 1.0 + std::sin(two_pi * x[0]) * std::cos(two_pi * x[1]);
    return s * s / 4.0;
}

double raised_cosine_target(std::span<const double> x) {
    const double c = (1.0 + std::cos(two_pi * x[0])) / 2.0;
    return c * c;
}

bool structurally_sound(const WgmNeuron& neuron) {
    if (neuron.universes.empty()) return false;
    for (const Universe& u : neuron.universes) {
        if (u.multiplicity < 1) return false;
        if (!(u.bias_length > 0.0)) return false;
        for (double l : u.lengths)
            if (!(l > 0.0)) return false;
    }
    return true;
}

Outcome criterion_3() {
    const auto start = Clock::now();
    const RectDomain square{{{0.0, 1.0}, {0.0, 1.0}}};
    const RectDomain line{{{0.0, 1.0}}};

    const BuildResult planar = build(sincos_target, square, 0.1);
    const BuildResult ridge = build(raised_cosine_target, line, 0.02);
    const double elapsed = seconds_since(start);

    const double planar_sup =
        sup_grid_error(sincos_target,
                       [&](std::span<const double> x) { return output(planar.neuron, x); },
                       square, 51);
    const double ridge_sup =
        sup_grid_error(raised_cosine_target,
                       [&](std::span<const double> x) { return output(ridge.neuron, x); },
                       line, 201);

    const bool pass = planar_sup < 0.1 && ridge_sup < 0.02 && structurally_sound(planar.neuron) &&
                      structurally_sound(ridge.neuron) && elapsed < 120.0;
    return {pass, fmt("two-input sup %.3g (budget 0.1, %zu universes), one-input sup %.3g "
                      "(budget 0.02, %zu universes), %.3f s",
                      planar_sup, planar.neuron.universes.size(), ridge_sup,
                      ridge.neuron.universes.size(), elapsed)};
}

ExpSum random_positivized_sum(std::mt19937_64& gen, std::size_t terms, std::size_t arity) {
    ExpSum sum;
    sum.omega = uniform_range(gen, 1.0, 8.0);
    sum.terms.resize(terms);
    for (ExpSumTerm& term : sum.terms) {
        term.amplitude = uniform_range(gen, 0.1, 2.0);
        term.frequencies.resize(arity);
        for (double& f : term.frequencies) f = uniform_range(gen, -3.0, 3.0);
        term.bias = uniform_range(gen, -3.0, 3.0);
    }
    return positivize(sum);
}

Outcome criterion_4() {
    int violations = 0;
    double worst_margin = 0.0;  // largest observed diff / bound ratio
    for (int trial = 0; trial < 100; ++trial) {
        std::mt19937_64 gen(split_seed(1004, static_cast<std::uint64_t>(trial)));
        const std::size_t terms = uniform_index(gen, 6) + 1;
        const std::size_t arity = uniform_index(gen, 3) + 1;
        const ExpSum sum = random_positivized_sum(gen, terms, arity);
        const double L = uniform_range(gen, 0.5, 100.0);

        const WgmNeuron neuron = round_to_wgm(sum, L);
        const double bound = rounding_bound(sum, L);

        double cap = 0.0;
        for (const ExpSumTerm& term : sum.terms) {
            double prod = 1.0;
            for (double f : term.frequencies) prod *= f;
            cap += 1.0 / prod;
        }
        cap /= L;
        if (bound > cap * (1.0 + 1e-12)) ++violations;

        const Amplitude shift = std::polar(1.0, -sum.omega * L);
        std::vector<double> x(arity);
        for (int point = 0; point < 1000; ++point) {
            for (double& v : x) v = uniform_range(gen, -10.0, 10.0);
            const Amplitude gap = evaluate(neuron, x) * shift - evaluate(sum, x);
            const double diff = std::abs(gap);
            if (diff > bound * (1.0 + 1e-9) + 1e-15) ++violations;
            if (bound > 0.0) worst_margin = std::max(worst_margin, diff / bound);
        }
    }
    const bool pass = violations == 0;
    return {pass, fmt("100 sums x 1000 points, %d violation(s), worst diff/bound %.6f",
                      violations, worst_margin)};
}

// --- criterion 5: probability gap bound ---------------------------------------

Outcome criterion_5() {
    std::mt19937_64 gen(1005);
    int violations = 0;
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 100000; ++trial) {
        const Amplitude z{uniform_range(gen, -10.0, 10.0), uniform_range(gen, -10.0, 10.0)};
        const Amplitude z1{uniform_range(gen, -10.0, 10.0), uniform_range(gen, -10.0, 10.0)};
        const double gap = std::abs(probability(z) - probability(z1));
        const double bound = modsq_gap_bound(z, z1);
        const double slack = 1e-12 * (probability(z) + probability(z1));
        if (gap > bound + slack) ++violations;
        if (bound > 0.0) worst_ratio = std::max(worst_ratio, gap / bound);
    }
    const bool pass = violations == 0;
    return {pass,
            fmt("100000 pairs, %d violation(s), worst gap/bound %.6f", violations, worst_ratio)};
}

// --- criterion 6: refining the quantization scale ------------------------------

Outcome criterion_6() {
    const RectDomain line{{{0.0, 1.0}}};
    const BuildResult base = build(raised_cosine_target, line, 0.02);
    const WgmNeuron refined = round_to_wgm(base.approximant, 10.0 * base.report.scale);

    const double sup =
        sup_grid_error(raised_cosine_target,
                       [&](std::span<const double> x) { return output(refined, x); }, line, 201);

    bool lengths_unchanged = refined.universes.size() == base.neuron.universes.size();
    bool grows = true;
    for (std::size_t u = 0; lengths_unchanged && u < refined.universes.size(); ++u) {
        const Universe& before = base.neuron.universes[u];
        const Universe& after = refined.universes[u];
        lengths_unchanged = after.lengths == before.lengths;
        grows = grows && after.multiplicity > before.multiplicity &&
                after.bias_length > before.bias_length;
    }

    const bool pass = sup < 0.02 && lengths_unchanged && grows;
    return {pass, fmt("sup %.3g at tenfold scale (budget 0.02), lengths unchanged %s, "
                      "multiplicities and biases grew %s",
                      sup, lengths_unchanged ? "yes" : "no", grows ? "yes" : "no")};
}

// --- criterion 7: the sixteen boolean functions --------------------------------

Outcome criterion_7() {
    const auto start = Clock::now();
    const BooleanSuiteReport report = run_boolean_suite({});
    const double elapsed = seconds_since(start);

    double worst = 0.0;
    int failed = 0;
    for (const BooleanFunctionResult& result : report.results) {
        worst = std::max(worst, result.best_deviation);
        if (!result.success) ++failed;
    }
    const bool pass = report.all_passed && failed == 0 && worst < 0.1 && elapsed < 300.0;
    return {pass, fmt("16 functions, %d failure(s), worst deviation %.3g, %.1f s", failed,
                      worst, elapsed)};
}

// --- criterion 8: two-photon neuron -------------------------------------------

SlmSpectra gaussian_spectra() {
    SlmSpectra spectra;
    spectra.amplitude = [](double w) { return std::exp(-(w - 1.0) * (w - 1.0)); };
    spectra.base_phase = [](double w) { return 0.3 * std::sin(w); };
    spectra.slm_phase = [](double w) { return 0.5 * w + 0.2 * std::cos(2.0 * w); };
    spectra.transition_frequency = 2.0;
    spectra.half_width = 1.0;
    return spectra;
}

Outcome criterion_8() {
    // (a) quadrature refinement: smooth spectra are already converged at 32 nodes
    const SlmSpectra spectra = gaussian_spectra();
    const SlmNeuron coarse = from_spectra(spectra, 32);
    const SlmNeuron fine = from_spectra(spectra, 64);
    double quad_gap = 0.0;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            const double x1 = -1.0 + 2.0 * i / 20.0;
            const double x2 = -1.0 + 2.0 * j / 20.0;
            quad_gap = std::max(quad_gap, std::abs(excitation_probability(coarse, x1, x2) -
                                                   excitation_probability(fine, x1, x2)));
        }

    // (b) the exponential-sum rewrite is pointwise exact
    std::mt19937_64 gen(1008);
    double rewrite_gap = 0.0;
    bool rewrite_ok = true;
    for (int trial = 0; trial < 5; ++trial) {
        const SlmNeuron neuron = random_slm_neuron(12, 1.0, gen);
        const ExpSum sum = to_exp_sum(neuron);
        for (int point = 0; point < 50; ++point) {
            const double x1 = uniform_range(gen, -3.0, 3.0);
            const double x2 = uniform_range(gen, -3.0, 3.0);
            const double direct = excitation_probability(neuron, x1, x2);
            const std::array<double, 2> x{x1, x2};
            const double via_sum = probability(evaluate(sum, x));
            const double diff = std::abs(direct - via_sum);
            rewrite_gap = std::max(rewrite_gap, diff);
            if (diff > 1e-12 * std::max(1.0, direct)) rewrite_ok = false;
        }
    }

    // (c) trains XOR
    const SlmTrainOutcome outcome = train_slm(boolean_training_set(6), 1);

    const bool pass = quad_gap < 1e-8 && rewrite_ok && outcome.success;
    return {pass, fmt("quadrature gap %.3g, rewrite gap %.3g, XOR deviation %.3g in %d "
                      "restart(s)",
                      quad_gap, rewrite_gap, outcome.max_deviation, outcome.restarts_used)};
}

// --- criterion 9: interference landscape ---------------------------------------

Outcome criterion_9() {
    int wins = 0;
    std::string per_seed;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const SmoothnessComparison comparison = run_smoothness_comparison(seed, 101);
        wins += comparison.smoother ? 1 : 0;
        per_seed += fmt("%s%.2f/%.2f", per_seed.empty() ? "" : ", ",
                        comparison.constrained_metric, comparison.unconstrained_metric);
    }
    const bool pass = wins >= 4;
    return {pass, fmt("constrained metric lower in %d/5 trials (%s)", wins, per_seed.c_str())};
}

// --- criterion 10: CLI determinism ---------------------------------------------

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CliRun {
    std::vector<int> exit_codes;
    std::vector<std::string> outputs;     // stdout per command
    std::map<std::string, std::string> artifacts;  // relative name -> bytes
};

const std::vector<std::string>& cli_command_templates() {
    // {DIR} is the per-run artifact directory, {CSV} the shared dataset.
    static const std::vector<std::string> templates{
        "xor-demo --gap-ratio 10000 --out {DIR}/xor.json",
        "boolean-suite --seed 7 --out {DIR}/suite.json",
        "approximate --target quarter --epsilon 0.05 --out {DIR}/quarter.json --report "
        "{DIR}/quarter-report.json",
        "train --model {DIR}/quarter.json --dataset {CSV} --seed 11 --out {DIR}/trained.json "
        "--report {DIR}/train-report.json",
        "eval --model {DIR}/trained.json --input 0.4",
        "eval --model {DIR}/quarter.json --dataset {CSV}",
        "approximate --target sincos --epsilon 0.1 --out {DIR}/sincos.json",
        "surface --model {DIR}/sincos.json --lo 0 --hi 1 --resolution 41 --out "
        "{DIR}/surface.csv",
        "slm-train --seed 3 --nodes 16 --restarts 20 --out {DIR}/slm.json --report "
        "{DIR}/slm-report.json",
    };
    return templates;
}

std::string substitute(std::string text, const std::string& key, const std::string& value) {
    for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at))
        text.replace(at, key.size(), value), at += value.size();
    return text;
}

CliRun run_cli_once(const std::string& cli, const fs::path& dir, const fs::path& csv) {
    fs::create_directories(dir);
    CliRun run;
    int index = 0;
    for (const std::string& templ : cli_command_templates()) {
        std::string args = substitute(templ, "{DIR}", dir.string());
        args = substitute(args, "{CSV}", csv.string());
        const fs::path stdout_path = dir / fmt("cmd-%02d.stdout", index);
        const std::string command = "env -u QNEURON_SEED \"" + cli + "\" " + args + " > \"" +
                                    stdout_path.string() + "\" 2> \"" +
                                    (dir / fmt("cmd-%02d.stderr", index)).string() + "\"";
        const int status = std::system(command.c_str());
        run.exit_codes.push_back(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
        run.outputs.push_back(read_bytes(stdout_path));
        ++index;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.ends_with(".json") || name == "surface.csv")
            run.artifacts[name] = read_bytes(entry.path());
    }
    return run;
}

Outcome criterion_10() {
    const char* cli = std::getenv("QNEURON_CLI");
    if (cli == nullptr || *cli == '\0')
        return {false, "QNEURON_CLI must point at the command line binary"};

    const fs::path root = fs::temp_directory_path() / "qneuron-acceptance-10";
    std::error_code ignored;
    fs::remove_all(root, ignored);
    fs::create_directories(root);

    const fs::path csv = root / "train.csv";
    {
        std::ofstream out(csv);
        out << "x1,target\n0.1,0.3\n0.5,0.55\n0.9,0.2\n";
    }

    const CliRun first = run_cli_once(cli, root / "first", csv);
    const CliRun second = run_cli_once(cli, root / "second", csv);

    const std::size_t commands = cli_command_templates().size();
    int mismatches = 0;
    int nonzero = 0;
    std::string note;
    for (std::size_t i = 0; i < commands; ++i) {
        if (first.exit_codes[i] != 0 || second.exit_codes[i] != 0) {
            ++nonzero;
            if (note.empty()) note = fmt("; command %zu exited %d", i, first.exit_codes[i]);
        }
        if (first.outputs[i].empty() || first.outputs[i] != second.outputs[i]) {
            ++mismatches;
            if (note.empty()) note = fmt("; command %zu stdout differs or is empty", i);
        }
    }
    if (first.artifacts.size() != second.artifacts.size() || first.artifacts.empty()) {
        ++mismatches;
        if (note.empty()) note = "; artifact sets differ";
    } else {
        for (const auto& [name, bytes] : first.artifacts) {
            const auto other = second.artifacts.find(name);
            if (other == second.artifacts.end() || bytes.empty() || other->second != bytes) {
                ++mismatches;
                if (note.empty()) note = "; artifact " + name + " differs or is empty";
            }
        }
    }

    const bool pass = mismatches == 0 && nonzero == 0;
    return {pass, fmt("%zu commands x 2 runs, %zu artifacts, %d mismatch(es), %d nonzero "
                      "exit(s)%s",
                      commands, first.artifacts.size(), mismatches, nonzero, note.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
    const std::array<Outcome (*)(), 10> criteria{
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int number = std::atoi(argv[i]);
        if (number < 1 || number > 10) {
            std::fprintf(stderr, "unknown criterion '%s' (expected 1..10)\n", argv[i]);
            return 2;
        }
        selected.push_back(number);
    }
    if (selected.empty())
        for (int number = 1; number <= 10; ++number) selected.push_back(number);

    bool all_pass = true;
    for (int number : selected) {
        Outcome outcome;
        try {
            outcome = criteria[static_cast<std::size_t>(number - 1)]();
        } catch (const std::exception& error) {
            outcome = {false, std::string("unexpected exception: ") + error.what()};
        }
        std::printf("criterion %d: %s (%s)\n", number, outcome.pass ? "PASS" : "FAIL",
                    outcome.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
