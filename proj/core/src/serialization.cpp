#include "qneuron/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qneuron {

void to_json(nlohmann::json& j, const BarrierStack& stack) {
    j = nlohmann::json{{"wavelength", stack.wavelength},
                       {"gaps", stack.gaps},
                       {"barriers", stack.slit_positions},
                       {"source", stack.source_position},
                       {"detector", stack.detector_position}};
}

void from_json(const nlohmann::json& j, BarrierStack& stack) {
    j.at("wavelength").get_to(stack.wavelength);
    j.at("gaps").get_to(stack.gaps);
    j.at("barriers").get_to(stack.slit_positions);
    j.at("source").get_to(stack.source_position);
    j.at("detector").get_to(stack.detector_position);
    validate(stack);
}

void to_json(nlohmann::json& j, const Universe& universe) {
    j = nlohmann::json{{"k", universe.multiplicity},
                       {"lengths", universe.lengths},
                       {"theta", universe.bias_length}};
}

void from_json(const nlohmann::json& j, Universe& universe) {
    j.at("k").get_to(universe.multiplicity);
    j.at("lengths").get_to(universe.lengths);
    j.at("theta").get_to(universe.bias_length);
}

void to_json(nlohmann::json& j, const WgmNeuron& neuron) {
    j = nlohmann::json{{"omega", neuron.omega}, {"universes", neuron.universes}};
}

void from_json(const nlohmann::json& j, WgmNeuron& neuron) {
    j.at("omega").get_to(neuron.omega);
    j.at("universes").get_to(neuron.universes);
    validate(neuron);
}

void to_json(nlohmann::json& j, const SlmNode& node) {
    j = nlohmann::json{{"omega_offset", node.offset}, {"weight", node.quad_weight},
                       {"a", node.a},                 {"theta", node.theta},
                       {"w1", node.w1},               {"w2", node.w2}};
}

void from_json(const nlohmann::json& j, SlmNode& node) {
    j.at("omega_offset").get_to(node.offset);
    j.at("weight").get_to(node.quad_weight);
    j.at("a").get_to(node.a);
    j.at("theta").get_to(node.theta);
    j.at("w1").get_to(node.w1);
    j.at("w2").get_to(node.w2);
}

void to_json(nlohmann::json& j, const SlmNeuron& neuron) {
    j = nlohmann::json{{"half_width", neuron.half_width},
                       {"norm", neuron.norm},
                       {"nodes", neuron.nodes}};
}

void from_json(const nlohmann::json& j, SlmNeuron& neuron) {
    j.at("half_width").get_to(neuron.half_width);
    j.at("norm").get_to(neuron.norm);
    j.at("nodes").get_to(neuron.nodes);
    validate(neuron);
}

void to_json(nlohmann::json& j, const AnnealConfig& config) {
    j = nlohmann::json{{"steps_per_epoch", config.steps_per_epoch},
                       {"beta", config.beta},
                       {"gamma", config.gamma},
                       {"step_scale", config.step_scale},
                       {"max_epochs", config.max_epochs},
                       {"stability_window", config.stability_window},
                       {"stability_tolerance", config.stability_tolerance},
                       {"seed", config.seed},
                       {"perturb_all", config.perturb_all}};
    if (config.initial_temperature)
        j["initial_temperature"] = *config.initial_temperature;
    else
        j["initial_temperature"] = nullptr;
}

void from_json(const nlohmann::json& j, AnnealConfig& config) {
    AnnealConfig defaults;
    config = defaults;
    if (j.contains("initial_temperature") && !j.at("initial_temperature").is_null())
        config.initial_temperature = j.at("initial_temperature").get<double>();
    if (j.contains("steps_per_epoch")) j.at("steps_per_epoch").get_to(config.steps_per_epoch);
    if (j.contains("beta")) j.at("beta").get_to(config.beta);
    if (j.contains("gamma")) j.at("gamma").get_to(config.gamma);
    if (j.contains("step_scale")) j.at("step_scale").get_to(config.step_scale);
    if (j.contains("max_epochs")) j.at("max_epochs").get_to(config.max_epochs);
    if (j.contains("stability_window")) j.at("stability_window").get_to(config.stability_window);
    if (j.contains("stability_tolerance"))
        j.at("stability_tolerance").get_to(config.stability_tolerance);
    if (j.contains("seed")) j.at("seed").get_to(config.seed);
    if (j.contains("perturb_all")) j.at("perturb_all").get_to(config.perturb_all);
    validate(config);
}

void to_json(nlohmann::json& j, const TrainReport& report) {
    j = nlohmann::json{{"final_error", report.final_error},
                       {"error_trace", report.error_trace},
                       {"accepted_moves", report.accepted_moves},
                       {"epochs", report.epochs},
                       {"converged", report.converged}};
}

void from_json(const nlohmann::json& j, TrainReport& report) {
    j.at("final_error").get_to(report.final_error);
    j.at("error_trace").get_to(report.error_trace);
    j.at("accepted_moves").get_to(report.accepted_moves);
    j.at("epochs").get_to(report.epochs);
    j.at("converged").get_to(report.converged);
}

void to_json(nlohmann::json& j, const BuildReport& report) {
    j = nlohmann::json{{"order", report.order},   {"U", report.universe_count},
                       {"L", report.scale},       {"epsilon", report.epsilon},
                       {"sup_error", report.sup_error},
                       {"grid", report.grid_points_per_dim}};
}

void from_json(const nlohmann::json& j, BuildReport& report) {
    j.at("order").get_to(report.order);
    j.at("U").get_to(report.universe_count);
    j.at("L").get_to(report.scale);
    j.at("epsilon").get_to(report.epsilon);
    j.at("sup_error").get_to(report.sup_error);
    j.at("grid").get_to(report.grid_points_per_dim);
}

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& error) {
        throw std::runtime_error(path.string() + ": " + error.what());
    }
    return j;
}

void save_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string format_sig12(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        const auto begin = field.find_first_not_of(" \t\r");
        const auto end = field.find_last_not_of(" \t\r");
        fields.push_back(begin == std::string::npos
                             ? std::string{}
                             : field.substr(begin, end - begin + 1));
    }
    return fields;
}

double parse_double(const std::string& field, std::size_t line_number) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &consumed);
    } catch (const std::exception&) {
        throw std::runtime_error("training CSV line " + std::to_string(line_number) +
                                 ": cannot parse '" + field + "'");
    }
    if (consumed != field.size())
        throw std::runtime_error("training CSV line " + std::to_string(line_number) +
                                 ": trailing characters in '" + field + "'");
    return value;
}

}  // namespace

TrainingSet read_training_csv(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;
    // Header row is mandatory; its column count fixes the arity.
    if (!std::getline(in, line))
        throw std::runtime_error("training CSV: missing header row");
    ++line_number;
    const std::size_t columns = split_csv_line(line).size();
    if (columns < 2)
        throw std::runtime_error("training CSV: need at least one input column and a target");

    TrainingSet set;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != columns)
            throw std::runtime_error("training CSV line " + std::to_string(line_number) +
                                     ": expected " + std::to_string(columns) + " fields");
        TrainingPair pair;
        pair.input.resize(columns - 1);
        for (std::size_t i = 0; i + 1 < columns; ++i)
            pair.input[i] = parse_double(fields[i], line_number);
        pair.target = parse_double(fields.back(), line_number);
        set.pairs.push_back(std::move(pair));
    }
    validate(set);
    return set;
}

TrainingSet read_training_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_training_csv(in);
}

void write_training_csv(std::ostream& out, const TrainingSet& set) {
    validate(set);
    const std::size_t arity = input_arity(set);
    for (std::size_t i = 0; i < arity; ++i) out << "x" << (i + 1) << ",";
    out << "target\n";
    for (const TrainingPair& pair : set.pairs) {
        for (double v : pair.input) out << format_sig12(v) << ",";
        out << format_sig12(pair.target) << "\n";
    }
}

void write_training_csv(const std::filesystem::path& path, const TrainingSet& set) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_training_csv(out, set);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_surface_csv(std::ostream& out, const SurfaceGrid& grid) {
    validate(grid);
    out << "x1,x2,p\n";
    for (std::size_t i = 0; i < grid.axis1.size(); ++i)
        for (std::size_t j = 0; j < grid.axis2.size(); ++j)
            out << format_sig12(grid.axis1[i]) << "," << format_sig12(grid.axis2[j]) << ","
                << format_sig12(grid.values[i * grid.axis2.size() + j]) << "\n";
}

void write_surface_csv(const std::filesystem::path& path, const SurfaceGrid& grid) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_surface_csv(out, grid);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace qneuron
