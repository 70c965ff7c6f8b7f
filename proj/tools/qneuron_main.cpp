// Command line front end: analytic gates, annealing experiments, the
// constructive approximation pipeline, and surface export.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qneuron/builder.hpp"
#include "qneuron/experiments.hpp"
#include "qneuron/serialization.hpp"

namespace {

using qneuron::format_sig12;

using Model = std::variant<qneuron::BarrierStack, qneuron::WgmNeuron, qneuron::SlmNeuron>;

Model load_model(const std::filesystem::path& path) {
    const nlohmann::json j = qneuron::load_json(path);
    if (j.contains("barriers")) return j.get<qneuron::BarrierStack>();
    if (j.contains("universes")) return j.get<qneuron::WgmNeuron>();
    if (j.contains("nodes")) return j.get<qneuron::SlmNeuron>();
    throw std::runtime_error(path.string() +
                             ": unrecognized model (expected barriers/universes/nodes)");
}

nlohmann::json model_to_json(const Model& model) {
    return std::visit([](const auto& m) { return nlohmann::json(m); }, model);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& cli_seed) {
    if (cli_seed) return *cli_seed;
    if (const char* env = std::getenv("QNEURON_SEED")) {
        std::istringstream stream(env);
        std::uint64_t value = 0;
        if (!(stream >> value) || !stream.eof())
            throw std::runtime_error("QNEURON_SEED is not an unsigned integer");
        return value;
    }
    return 1;
}

std::vector<double> parse_input_list(const std::string& text) {
    std::vector<double> values;
    std::istringstream stream(text);
    std::string field;
    while (std::getline(stream, field, ',')) {
        std::size_t consumed = 0;
        values.push_back(std::stod(field, &consumed));
        if (consumed != field.size())
            throw std::runtime_error("cannot parse input component '" + field + "'");
    }
    if (values.empty()) throw std::runtime_error("empty input vector");
    return values;
}

qneuron::AnnealConfig load_anneal_config(const std::string& path) {
    if (path.empty()) return {};
    return qneuron::load_json(path).get<qneuron::AnnealConfig>();
}

struct TargetSpec {
    qneuron::TargetFn fn;
    qneuron::RectDomain domain;
};

TargetSpec named_target(const std::string& name) {
    const double pi2 = qneuron::two_pi;
    if (name == "one")
        return {[](std::span<const double>) { return 1.0; }, {{{0.0, 1.0}}}};
    if (name == "quarter")
        return {[](std::span<const double>) { return 0.25; }, {{{0.0, 1.0}}}};
    if (name == "raised-cosine")
        return {[pi2](std::span<const double> x) {
                    const double c = 0.5 * (1.0 + std::cos(pi2 * x[0]));
                    return c * c;
                },
                {{{0.0, 1.0}}}};
    if (name == "sincos")
        return {[pi2](std::span<const double> x) {
                    const double s = 1.0 + std::sin(pi2 * x[0]) * std::cos(pi2 * x[1]);
                    return s * s / 4.0;
                },
                {{{0.0, 1.0}, {0.0, 1.0}}}};
    throw std::runtime_error("unknown target '" + name +
                             "' (available: one, quarter, raised-cosine, sincos)");
}

int cmd_xor_demo(double gap_ratio, double slit_ratio, double wavelength,
                 const std::string& out) {
    const qneuron::XorDemoReport report =
        qneuron::run_xor_demo(gap_ratio, slit_ratio, wavelength);
    const auto patterns = qneuron::boolean_input_patterns();
    std::cout << "two-slit XOR gate, gap " << format_sig12(gap_ratio)
              << " wavelengths, slit offset " << format_sig12(slit_ratio) << " gaps\n";
    std::cout << "path difference " << format_sig12(report.path_difference)
              << " (ideal " << format_sig12(1.5 * wavelength) << ")\n";
    std::cout << "n1,n2 -> raw, normalized, closed-form\n";
    for (std::size_t i = 0; i < 4; ++i)
        std::cout << format_sig12(patterns[i][0]) << "," << format_sig12(patterns[i][1])
                  << " -> " << format_sig12(report.raw[i]) << ", "
                  << format_sig12(report.normalized[i]) << ", "
                  << format_sig12(report.closed_form[i]) << "\n";
    std::cout << "max deviation from XOR pattern: " << format_sig12(report.max_deviation)
              << " -> " << (report.pattern_ok ? "OK" : "FAILED") << "\n";
    if (!out.empty()) {
        nlohmann::json j{{"wavelength", report.wavelength},
                         {"gap", report.gap},
                         {"slit_offset", report.slit_offset},
                         {"path_difference", report.path_difference},
                         {"raw", report.raw},
                         {"normalized", report.normalized},
                         {"closed_form", report.closed_form},
                         {"max_deviation", report.max_deviation},
                         {"pattern_ok", report.pattern_ok},
                         {"model", report.stack}};
        qneuron::save_json(out, j);
    }
    return report.pattern_ok ? 0 : 1;
}

int cmd_boolean_suite(std::uint64_t seed, int restarts, double threshold,
                      const std::string& config_path, const std::string& out) {
    qneuron::BooleanSuiteConfig config;
    config.seed = seed;
    config.restarts = restarts;
    config.success_threshold = threshold;
    config.anneal = load_anneal_config(config_path);
    const qneuron::BooleanSuiteReport report = qneuron::run_boolean_suite(config);
    for (const auto& result : report.results)
        std::cout << result.index << " " << result.name << ": "
                  << (result.success ? "trained" : "FAILED") << " after "
                  << result.restarts_used << " restart(s), max deviation "
                  << format_sig12(result.best_deviation) << "\n";
    std::cout << (report.all_passed ? "all 16 functions trained"
                                    : "some functions failed")
              << "\n";
    if (!out.empty()) {
        nlohmann::json results = nlohmann::json::array();
        for (const auto& result : report.results)
            results.push_back({{"index", result.index},
                               {"name", result.name},
                               {"success", result.success},
                               {"restarts_used", result.restarts_used},
                               {"best_deviation", result.best_deviation},
                               {"final_error", result.final_error},
                               {"model", result.model}});
        qneuron::save_json(out, nlohmann::json{{"seed", seed},
                                               {"results", results},
                                               {"all_passed", report.all_passed}});
    }
    return report.all_passed ? 0 : 1;
}

int cmd_train(const std::string& model_path, const std::string& dataset,
              const std::string& config_path, std::uint64_t seed, const std::string& out,
              const std::string& report_path) {
    Model model = load_model(model_path);
    const qneuron::TrainingSet set = qneuron::read_training_csv(dataset);
    qneuron::AnnealConfig config = load_anneal_config(config_path);
    config.seed = seed;
    qneuron::TrainReport report;
    std::visit(
        [&](auto& m) {
            auto [trained, train_report] = qneuron::train(m, set, config);
            m = trained;
            report = train_report;
        },
        model);
    std::cout << "final error " << format_sig12(report.final_error) << " after "
              << report.epochs << " epoch(s), " << report.accepted_moves
              << " accepted move(s), "
              << (report.converged ? "converged" : "not converged") << "\n";
    if (!out.empty()) qneuron::save_json(out, model_to_json(model));
    if (!report_path.empty()) qneuron::save_json(report_path, nlohmann::json(report));
    return 0;
}

int cmd_approximate(const std::string& target, double epsilon, double omega,
                    const std::string& out, const std::string& report_path) {
    const TargetSpec spec = named_target(target);
    const qneuron::BuildResult result = qneuron::build(spec.fn, spec.domain, epsilon, omega);
    std::cout << "order " << result.report.order << ", " << result.report.universe_count
              << " universe(s), L " << format_sig12(result.report.scale)
              << ", sup error " << format_sig12(result.report.sup_error) << " (epsilon "
              << format_sig12(epsilon) << ")\n";
    if (!out.empty()) qneuron::save_json(out, nlohmann::json(result.neuron));
    if (!report_path.empty())
        qneuron::save_json(report_path, nlohmann::json(result.report));
    return 0;
}

int cmd_eval(const std::string& model_path, const std::string& input,
             const std::string& dataset) {
    const Model model = load_model(model_path);
    if (input.empty() == dataset.empty())
        throw std::runtime_error("eval needs exactly one of --input or --dataset");
    if (!input.empty()) {
        const std::vector<double> x = parse_input_list(input);
        const double value = std::visit(
            [&](const auto& m) { return qneuron::model_output(m, x); }, model);
        std::cout << format_sig12(value) << "\n";
        return 0;
    }
    const qneuron::TrainingSet set = qneuron::read_training_csv(dataset);
    const double error = std::visit(
        [&](const auto& m) { return qneuron::error_functional(m, set); }, model);
    const double deviation = std::visit(
        [&](const auto& m) { return qneuron::max_deviation(m, set); }, model);
    std::cout << "error " << format_sig12(error) << ", max deviation "
              << format_sig12(deviation) << "\n";
    return 0;
}

int cmd_surface(const std::string& model_path, double lo, double hi, int resolution,
                const std::string& out) {
    const Model model = load_model(model_path);
    const qneuron::Interval range{lo, hi};
    const qneuron::SurfaceGrid grid = std::visit(
        [&](const auto& m) { return qneuron::sample_surface(m, range, range, resolution); },
        model);
    std::cout << "smoothness " << format_sig12(qneuron::smoothness_metric(grid)) << "\n";
    if (!out.empty()) qneuron::write_surface_csv(std::filesystem::path(out), grid);
    return 0;
}

int cmd_slm_train(const std::string& dataset, std::uint64_t seed, int nodes, int restarts,
                  double threshold, const std::string& config_path, const std::string& out,
                  const std::string& report_path) {
    const qneuron::TrainingSet set = dataset.empty()
                                         ? qneuron::boolean_training_set(6)
                                         : qneuron::read_training_csv(dataset);
    const qneuron::AnnealConfig config = load_anneal_config(config_path);
    const qneuron::SlmTrainOutcome outcome =
        qneuron::train_slm(set, seed, nodes, restarts, threshold, config);
    std::cout << "max deviation " << format_sig12(outcome.max_deviation) << " after "
              << outcome.restarts_used << " restart(s): "
              << (outcome.success ? "trained" : "FAILED") << "\n";
    if (!out.empty()) qneuron::save_json(out, nlohmann::json(outcome.model));
    if (!report_path.empty())
        qneuron::save_json(report_path, nlohmann::json(outcome.report));
    return outcome.success ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single quantum neuron toolbox"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;

    // xor-demo
    auto* xor_cmd = app.add_subcommand("xor-demo", "drive the analytic two-slit XOR gate");
    double gap_ratio = 1e4, slit_ratio = 5.0, wavelength = 1.0;
    std::string xor_out;
    xor_cmd->add_option("--gap-ratio", gap_ratio, "barrier gap in wavelengths");
    xor_cmd->add_option("--slit-ratio", slit_ratio, "slit offset in gaps");
    xor_cmd->add_option("--wavelength", wavelength, "wavelength");
    xor_cmd->add_option("--out", xor_out, "write a JSON report");

    // boolean-suite
    auto* suite_cmd =
        app.add_subcommand("boolean-suite", "train all 16 two-variable boolean functions");
    int suite_restarts = 20;
    double suite_threshold = 0.1;
    std::string suite_config, suite_out;
    suite_cmd->add_option("--seed", seed, "random seed (QNEURON_SEED, then 1)");
    suite_cmd->add_option("--restarts", suite_restarts, "random restarts per function");
    suite_cmd->add_option("--threshold", suite_threshold, "success threshold");
    suite_cmd->add_option("--config", suite_config, "annealing config JSON");
    suite_cmd->add_option("--out", suite_out, "write a JSON report");

    // train
    auto* train_cmd = app.add_subcommand("train", "anneal a model against a dataset");
    std::string train_model, train_dataset, train_config, train_out, train_report;
    train_cmd->add_option("--model", train_model, "model JSON")->required();
    train_cmd->add_option("--dataset", train_dataset, "training CSV")->required();
    train_cmd->add_option("--config", train_config, "annealing config JSON");
    train_cmd->add_option("--seed", seed, "random seed (QNEURON_SEED, then 1)");
    train_cmd->add_option("--out", train_out, "write the trained model JSON");
    train_cmd->add_option("--report", train_report, "write the training report JSON");

    // approximate
    auto* approx_cmd =
        app.add_subcommand("approximate", "build a waveguide neuron for a named target");
    std::string approx_target = "raised-cosine", approx_out, approx_report;
    double epsilon = 0.05, omega = qneuron::two_pi;
    approx_cmd->add_option("--target", approx_target,
                           "one, quarter, raised-cosine, or sincos");
    approx_cmd->add_option("--epsilon", epsilon, "sup-norm budget");
    approx_cmd->add_option("--omega", omega, "carrier frequency");
    approx_cmd->add_option("--out", approx_out, "write the neuron JSON");
    approx_cmd->add_option("--report", approx_report, "write the build report JSON");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a model");
    std::string eval_model, eval_input, eval_dataset;
    eval_cmd->add_option("--model", eval_model, "model JSON")->required();
    eval_cmd->add_option("--input", eval_input, "comma-separated input vector");
    eval_cmd->add_option("--dataset", eval_dataset, "training CSV to score");

    // surface
    auto* surface_cmd =
        app.add_subcommand("surface", "sample a two-input model on a square grid");
    std::string surface_model, surface_out;
    double surface_lo = qneuron::boolean_low, surface_hi = qneuron::boolean_high;
    int resolution = 101;
    surface_cmd->add_option("--model", surface_model, "model JSON")->required();
    surface_cmd->add_option("--lo", surface_lo, "lower edge of both axes");
    surface_cmd->add_option("--hi", surface_hi, "upper edge of both axes");
    surface_cmd->add_option("--resolution", resolution, "points per axis");
    surface_cmd->add_option("--out", surface_out, "write the surface CSV");

    // slm-train
    auto* slm_cmd =
        app.add_subcommand("slm-train", "train the two-photon neuron on a dataset");
    std::string slm_dataset, slm_config, slm_out, slm_report;
    int slm_nodes = 32, slm_restarts = 20;
    double slm_threshold = 0.1;
    slm_cmd->add_option("--dataset", slm_dataset, "training CSV (default: XOR patterns)");
    slm_cmd->add_option("--seed", seed, "random seed (QNEURON_SEED, then 1)");
    slm_cmd->add_option("--nodes", slm_nodes, "quadrature nodes");
    slm_cmd->add_option("--restarts", slm_restarts, "random restarts");
    slm_cmd->add_option("--threshold", slm_threshold, "success threshold");
    slm_cmd->add_option("--config", slm_config, "annealing config JSON");
    slm_cmd->add_option("--out", slm_out, "write the trained model JSON");
    slm_cmd->add_option("--report", slm_report, "write the training report JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (xor_cmd->parsed())
            return cmd_xor_demo(gap_ratio, slit_ratio, wavelength, xor_out);
        if (suite_cmd->parsed())
            return cmd_boolean_suite(resolve_seed(seed), suite_restarts, suite_threshold,
                                     suite_config, suite_out);
        if (train_cmd->parsed())
            return cmd_train(train_model, train_dataset, train_config, resolve_seed(seed),
                             train_out, train_report);
        if (approx_cmd->parsed())
            return cmd_approximate(approx_target, epsilon, omega, approx_out, approx_report);
        if (eval_cmd->parsed()) return cmd_eval(eval_model, eval_input, eval_dataset);
        if (surface_cmd->parsed())
            return cmd_surface(surface_model, surface_lo, surface_hi, resolution,
                               surface_out);
        if (slm_cmd->parsed())
            return cmd_slm_train(slm_dataset, resolve_seed(seed), slm_nodes, slm_restarts,
                                 slm_threshold, slm_config, slm_out, slm_report);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
