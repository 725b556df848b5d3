#pragma once

// File ingestion and result export. Traces and spatial models travel as
// JSON; monitor output is written as CSV (location,t,value) or JSON. All
// loaders validate before handing objects to the engine and report precise
// diagnostics.

#include <iosfwd>
#include <string>
#include <variant>

#include "strel/monitor.hpp"
#include "strel/signal.hpp"
#include "strel/space.hpp"

namespace strel {

using AnyLocationService = std::variant<LocationService<double>, LocationService<Vec2>>;

Trace load_trace(const std::string& path);
Trace parse_trace_json(const std::string& text);
void save_trace(const Trace& trace, const std::string& path);

AnyLocationService load_space(const std::string& path);
AnyLocationService parse_space_json(const std::string& text);
void save_space(const LocationService<double>& service, const std::string& path);
void save_space(const LocationService<Vec2>& service, const std::string& path);

inline int service_location_count(const AnyLocationService& s) {
  return std::visit([](const auto& svc) { return svc.location_count(); }, s);
}

// Result export. Values render as true/false (boolean), shortest-roundtrip
// decimals, or inf/-inf.
void write_result_csv(const MonitorResult<BooleanDomain>& result, std::ostream& os);
void write_result_csv(const MonitorResult<MaxMinDomain>& result, std::ostream& os);
void write_result_json(const MonitorResult<BooleanDomain>& result, std::ostream& os);
void write_result_json(const MonitorResult<MaxMinDomain>& result, std::ostream& os);

/// Reads a previously exported verdict CSV back as a single-channel trace
/// named "value"; the horizon is not stored in the CSV, so it is supplied.
Trace import_result_csv(const std::string& path, double horizon);

}  // namespace strel
