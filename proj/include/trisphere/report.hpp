#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "trisphere/continuity.hpp"
#include "trisphere/error_metrics.hpp"
#include "trisphere/optimal_params.hpp"
#include "trisphere/tables.hpp"

namespace trisphere {

inline constexpr const char* kToolVersion = "1.0.0";

/// x rounded to 12 significant digits.
double sig12(double x);

nlohmann::json to_json(const ErrorReport& report);
nlohmann::json to_json(const OptimalSolution& solution);
nlohmann::json to_json(const ContinuityCertificate& cert, bool with_samples = false);
nlohmann::json to_json(const TableResult& table);

/// Report file body: tool, version, tables and (optionally) timing.
nlohmann::json tables_report(const std::vector<TableResult>& tables, bool with_timing);

// key=value text blocks.
std::string format_error_report(const ErrorReport& report);
std::string format_solution(const OptimalSolution& solution);
std::string format_certificate(const ContinuityCertificate& cert, bool with_samples = false);

}  // namespace trisphere
