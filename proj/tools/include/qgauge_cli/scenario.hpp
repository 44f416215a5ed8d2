#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qgauge/gauge.hpp"
#include "qgauge/grid.hpp"
#include "qgauge/params.hpp"
#include "qgauge/propagator.hpp"
#include "qgauge/solutions.hpp"

namespace qgauge::cli {

/// Invalid, incomplete or unreadable configuration (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GaussianInit {
    double x0 = 0.0;
    double p0 = 0.0;
    double sigma = 1.0;
};

using InitialState = std::variant<GaussianInit, SolutionId>;

enum class OutputFormat { Csv, Json };
enum class OutputContent { Trace, Snapshots };

struct OutputSpec {
    std::filesystem::path path;
    OutputFormat format = OutputFormat::Csv;
    OutputContent content = OutputContent::Trace;
};

struct ScenarioConfig {
    PhysicalParams params;
    SpatialGrid grid;
    GaugeSpec gauge;
    InitialState initial;
    PropagatorConfig propagator;
    std::vector<OutputSpec> outputs;
};

/// Strict schema: unknown keys, wrong types, missing required fields and
/// invalid values all throw ConfigError naming the offending field.
/// Relative output paths are resolved against `base_dir`.
ScenarioConfig parse_scenario(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

/// Reads and parses a config file. An empty file is treated as `{}`.
ScenarioConfig load_scenario(const std::filesystem::path& path);

GaugeSpec parse_gauge_name(const std::string& name);

}  // namespace qgauge::cli
