#pragma once

#include "staticflow/expansion.hpp"
#include "staticflow/flow.hpp"

#include <filesystem>
#include <string>

namespace staticflow {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double x);

/// Writes through a temp file in the same directory, then renames.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// CSV with header t,weighted_dev,min_lapse,as_defect_2,residual_sup and one
/// row per monitor sample.
std::string flow_csv(const FlowReport& report);
void emit_flow_csv(const FlowReport& report, const std::filesystem::path& path);

/// JSON object with keys n, scal, max_order, c, u, determinants, parity_ok.
std::string expansion_json(const ExpansionResult& res);
void emit_expansion_json(const ExpansionResult& res, const std::filesystem::path& path);

/// Inverse of emit_expansion_json; exact double round trip.
ExpansionResult parse_expansion_json(const std::filesystem::path& path);

} // namespace staticflow
