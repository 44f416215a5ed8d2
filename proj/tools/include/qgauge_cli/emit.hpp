#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgauge/propagator.hpp"

namespace qgauge::cli {

/// 17 significant digits; negative zero is printed as 0.
std::string format_number(double value);

void write_trace_csv(std::ostream& out, const ObservableTrace& trace);
void write_snapshots_csv(std::ostream& out, const std::vector<WaveField>& snapshots);

nlohmann::json trace_json(const ObservableTrace& trace);
nlohmann::json snapshots_json(const std::vector<WaveField>& snapshots);

}  // namespace qgauge::cli
