// scenario.hpp — JSON scenario configs, figure presets and the trace/figure runners

#pragma once

#include "qdeph/bath.hpp"
#include "qdeph/dynamics.hpp"
#include "qdeph/errors.hpp"
#include "qdeph/preparation.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace qdeph {

// Validation error tied to a config field, e.g. "temperature.beta_omega0".
class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& field, const std::string& message)
        : ValidationError("config field '" + field + "': " + message), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

enum class Spacing { Linear, Log };

struct GridSpec {
    double t_max = 10.0;
    int n_points = 101;
    Spacing spacing = Spacing::Linear;
    // Log spacing only: first nonzero time. Defaults to 1e-5 t_max.
    double t_min = 0.0;

    // Linear: n_points uniform samples of [0, t_max]. Log: t = 0 followed by
    // n_points - 1 log-uniform samples of [t_min, t_max].
    std::vector<double> times() const;
};

struct ScenarioConfig {
    PreparationScheme scheme = scheme::i(BlochDirection{});
    BathSpec bath = BathSpec::ohmic(1.0, 1.0);
    QubitParams qubit;
    GridSpec grid;
};

ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::filesystem::path& path);
// Canonical form: radians, selective states as amplitudes, every field explicit.
nlohmann::json to_json(const ScenarioConfig& c);

struct PresetCurve {
    std::string label;
    ScenarioConfig config;
};

struct FigurePreset {
    std::string name;
    std::string description;
    std::vector<PresetCurve> curves;
};

std::vector<std::string> preset_names();
// Throws ValidationError listing the available names.
FigurePreset figure_preset(const std::string& name);

// 400 points: t = 0 plus log-spaced omega_c t in [1e-2, 1e3].
GridSpec default_figure_grid();

DephasingTrajectory run_config(const ScenarioConfig& c);

void run_trace(const std::filesystem::path& config_path, const std::filesystem::path& out_csv);
// Writes <preset>_<label>.csv per curve; returns the written paths.
std::vector<std::filesystem::path> run_figure(const std::string& preset, const std::filesystem::path& out_dir);
// Writes <preset>_<label>.json per curve instead of computing.
std::vector<std::filesystem::path> dump_figure_configs(const std::string& preset,
                                                       const std::filesystem::path& out_dir);

}  // namespace qdeph
