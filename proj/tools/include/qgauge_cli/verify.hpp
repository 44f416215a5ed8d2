#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qgauge/transforms.hpp"

namespace qgauge::cli {

/// One verified property: passes when measured <= tolerance.
struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

enum class Suite { Solutions, Theorem, Pde, All };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view suite_name(Suite suite) noexcept;

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Deliberate corruption for negative-control runs; empty for none.
    std::string fault;
};

/// Names accepted by VerifyOptions::fault.
const std::vector<std::string>& known_faults();

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string fault;
    std::vector<Check> checks;
    /// Worst double-EGT vs gauge-transform comparison (theorem suite only).
    std::optional<PhaseMapReport> phase_map;

    bool passed() const noexcept;
};

/// Throws InvalidArgument for an unknown fault name.
VerifyReport run_verify(Suite suite, const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace qgauge::cli
