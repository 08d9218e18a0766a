#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "liftform/analysis.hpp"

namespace liftform {

// Structured report objects, schema_version "1". ordered_json keeps field
// order deterministic; numeric fields carry units in their names.
using Report = nlohmann::ordered_json;

Report make_report(const std::string& mode, Report inputs, Report results);

Report pose_match_results(const PoseMatchResult& result);
Report rom_results(const RomReport& report);
Report balance_results(const BalanceReport& report);
Report compare_results(const CompareOutcome& outcome);
Report score_results(const PerformanceScore& score);

Report validation_results(const ValidationReport& report);

void write_report(const Report& report, const std::filesystem::path& path);

}  // namespace liftform
