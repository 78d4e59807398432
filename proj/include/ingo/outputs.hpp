#pragma once

#include <filesystem>
#include <iosfwd>

#include "ingo/experiment.hpp"

namespace ingo {

// Shortest round-trip decimal representation, locale independent.
std::string format_double(double value);

// Writes stats.csv, raw.csv, curves.csv, report.json, config.json and, for
// the wsn experiment, deployment.csv plus SVG renders. Returns the written
// paths. Values are fitness for benchmark campaigns and coverage for wsn.
std::vector<std::filesystem::path> emit_outputs(const ExperimentReport& report,
                                                const std::filesystem::path& directory);

// Human-readable result table on the given stream.
void print_summary(const ExperimentReport& report, std::ostream& os);

} // namespace ingo
