#pragma once

#include "qcorr/classify.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/metric.hpp"
#include "qcorr/noise.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace qcorr {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double horizon = 10.0;
    int samples = 2048;
};

struct ScenarioConfig {
    std::uint64_t seed = 0;
    InitialStateSpec state{};
    HamiltonianSpec hamiltonian{};
    std::optional<NoiseSpec> noise{};
    TimeGrid time{};
};

// Strict JSON parsing: a versioned schema, unknown keys rejected.
ScenarioConfig parse_scenario_config(const std::string& json_text);

// {"version":1, "state": {...}} for the measure command.
InitialStateSpec parse_state_config(const std::string& json_text);

Trajectory run_trajectory(const ScenarioConfig& cfg);

// CSV with '.' decimals, 17 significant digits, fixed header
// t,N01,...,N33,D,DG,C and an absN column for noisy runs.
std::string trajectory_csv(const Trajectory& traj, bool with_norm);

std::string scenario_label(const ScenarioConfig& cfg);

std::string verdict_json(const ScenarioConfig& cfg, const Trajectory& traj);

std::string report_json(const CorrelationReport& r);

std::string integration_json(const IntegrationResult& r, const std::string& fn_name);

// Runs the scenario once per sweep value (config key "sweep": {"path", "values"}),
// emitting one verdict JSON line per grid point in grid order.
void run_sweep(const std::string& config_text, std::ostream& out);

}  // namespace qcorr
