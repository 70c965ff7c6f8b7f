#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qneuron/anneal.hpp"
#include "qneuron/builder.hpp"
#include "qneuron/slit_system.hpp"
#include "qneuron/slm.hpp"
#include "qneuron/surface.hpp"
#include "qneuron/wgm.hpp"

namespace qneuron {

// JSON layouts:
//   BarrierStack  {"wavelength", "gaps", "barriers", "source", "detector"}
//   WgmNeuron     {"omega", "universes": [{"k", "lengths", "theta"}]}
//   SlmNeuron     {"half_width", "norm",
//                  "nodes": [{"omega_offset", "weight", "a", "theta", "w1", "w2"}]}
// from_json re-validates, so loading malformed data throws.

void to_json(nlohmann::json& j, const BarrierStack& stack);
void from_json(const nlohmann::json& j, BarrierStack& stack);

void to_json(nlohmann::json& j, const Universe& universe);
void from_json(const nlohmann::json& j, Universe& universe);
void to_json(nlohmann::json& j, const WgmNeuron& neuron);
void from_json(const nlohmann::json& j, WgmNeuron& neuron);

void to_json(nlohmann::json& j, const SlmNode& node);
void from_json(const nlohmann::json& j, SlmNode& node);
void to_json(nlohmann::json& j, const SlmNeuron& neuron);
void from_json(const nlohmann::json& j, SlmNeuron& neuron);

void to_json(nlohmann::json& j, const AnnealConfig& config);
void from_json(const nlohmann::json& j, AnnealConfig& config);

void to_json(nlohmann::json& j, const TrainReport& report);
void from_json(const nlohmann::json& j, TrainReport& report);

void to_json(nlohmann::json& j, const BuildReport& report);
void from_json(const nlohmann::json& j, BuildReport& report);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Shortest-of-12-significant-digits decimal rendering used by all CSV output.
std::string format_sig12(double value);

/// Training data CSV: required header row, then one row per pair with the
/// input components followed by the target.
TrainingSet read_training_csv(std::istream& in);
TrainingSet read_training_csv(const std::filesystem::path& path);
void write_training_csv(std::ostream& out, const TrainingSet& set);
void write_training_csv(const std::filesystem::path& path, const TrainingSet& set);

/// Surface CSV: header "x1,x2,p", one row per grid point, outer loop over the
/// first axis.
void write_surface_csv(std::ostream& out, const SurfaceGrid& grid);
void write_surface_csv(const std::filesystem::path& path, const SurfaceGrid& grid);

}  // namespace qneuron
