#include "strel/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace strel {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return j;
}

double require_finite(const json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": expected a number");
  double v = j.get<double>();
  if (std::isnan(v) || std::isinf(v)) throw SchemaError(where + ": non-finite value");
  return v;
}

Trace trace_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("trace: expected an object");
  Trace out;
  out.horizon = require_finite(j.at("horizon"), "trace horizon");
  if (out.horizon <= 0) throw SchemaError("trace horizon must be positive");
  if (!j.contains("channels") || !j.at("channels").is_array())
    throw SchemaError("trace: missing channels array");
  for (const auto& c : j.at("channels")) out.channels.push_back(c.get<std::string>());
  const std::size_t width = out.channels.size();
  if (width == 0) throw SchemaError("trace: needs at least one channel");

  const auto& locs = j.at("locations");
  if (!locs.is_array() || locs.empty()) throw SchemaError("trace: needs locations");
  const int n = static_cast<int>(locs.size());
  out.locations.resize(static_cast<std::size_t>(n));
  out.kinds.assign(width, ChannelKind::kBool);
  std::vector<bool> kind_fixed(width, false);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);

  for (const auto& lj : locs) {
    int id = lj.at("id").get<int>();
    if (id < 0 || id >= n)
      throw SchemaError("trace: location id " + std::to_string(id) +
                        " outside 0.." + std::to_string(n - 1));
    if (seen[static_cast<std::size_t>(id)])
      throw SchemaError("trace: duplicate location id " + std::to_string(id));
    seen[static_cast<std::size_t>(id)] = true;

    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    const auto& segs = lj.at("segments");
    if (!segs.is_array() || segs.empty())
      throw SchemaError("trace: location " + std::to_string(id) + " has no segments");
    int index = 0;
    for (const auto& seg : segs) {
      double t = require_finite(seg.at("t"), "trace segment time");
      if (!times.empty() && t <= times.back())
        throw SchemaError("trace: location " + std::to_string(id) + " segment " +
                          std::to_string(index) + " time not increasing");
      if (t > out.horizon)
        throw SchemaError("trace: location " + std::to_string(id) +
                          " segment beyond the horizon");
      const auto& vals = seg.at("values");
      if (!vals.is_array() || vals.size() != width)
        throw SchemaError("trace: location " + std::to_string(id) + " segment " +
                          std::to_string(index) + " has wrong value count");
      times.push_back(t);
      std::vector<double> row;
      for (std::size_t c = 0; c < width; ++c) {
        const auto& v = vals[c];
        ChannelKind k;
        double d;
        if (v.is_boolean()) {
          k = ChannelKind::kBool;
          d = v.get<bool>() ? 1.0 : 0.0;
        } else {
          k = ChannelKind::kReal;
          d = require_finite(v, "channel '" + out.channels[c] + "'");
        }
        if (!kind_fixed[c]) {
          out.kinds[c] = k;
          kind_fixed[c] = true;
        } else if (out.kinds[c] != k) {
          throw SchemaError("trace: channel '" + out.channels[c] +
                            "' mixes booleans and numbers");
        }
        row.push_back(d);
      }
      rows.push_back(std::move(row));
      ++index;
    }
    out.locations[static_cast<std::size_t>(id)] =
        PiecewiseSignal<std::vector<double>>(times, rows, out.horizon);
  }
  return out;
}

template <class W>
W weight_from_json(const json& j);

template <>
double weight_from_json<double>(const json& j) {
  return require_finite(j, "edge weight");
}

template <>
Vec2 weight_from_json<Vec2>(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError("vec2 edge weight must be [x, y]");
  return {require_finite(j[0], "edge weight x"), require_finite(j[1], "edge weight y")};
}

template <class W>
SpatialModel<W> snapshot_from_json(const json& sj, int n) {
  if (sj.contains("positions")) {
    if constexpr (std::is_same_v<W, Vec2>) {
      EuclideanModel m;
      for (const auto& p : sj.at("positions"))
        m.positions.push_back(weight_from_json<Vec2>(p));
      if (static_cast<int>(m.positions.size()) != n)
        throw SchemaError("space: positions count differs from the universe size");
      for (const auto& r : sj.at("relation")) {
        if (!r.is_array() || r.size() != 2) throw SchemaError("space: relation pair");
        m.relation.push_back({r[0].get<LocId>(), r[1].get<LocId>()});
      }
      try {
        return build_euclidean(m);
      } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("space: ") + e.what());
      }
    } else {
      throw SchemaError("space: positions snapshots need weightKind vec2");
    }
  }
  std::vector<Edge<W>> edges;
  for (const auto& ej : sj.at("edges")) {
    if (!ej.is_array() || ej.size() != 3)
      throw SchemaError("space: edges are [src, w, dst] triples");
    edges.push_back(
        {ej[0].get<LocId>(), ej[2].get<LocId>(), weight_from_json<W>(ej[1])});
  }
  try {
    return SpatialModel<W>(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("space: ") + e.what());
  }
}

template <class W>
LocationService<W> service_from_json(const json& j, int n) {
  std::vector<double> bps;
  std::vector<SpatialModel<W>> models;
  for (const auto& sj : j.at("snapshots")) {
    double t = require_finite(sj.at("t"), "snapshot time");
    if (!bps.empty() && t <= bps.back())
      throw SchemaError("space: snapshot times must increase");
    bps.push_back(t);
    models.push_back(snapshot_from_json<W>(sj, n));
  }
  if (bps.empty()) throw SchemaError("space: needs at least one snapshot");
  return LocationService<W>(std::move(bps), std::move(models));
}

AnyLocationService space_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("space: expected an object");
  int n = j.at("locations").get<int>();
  if (n <= 0) throw SchemaError("space: needs a positive location count");
  std::string kind = j.value("weightKind", "scalar");
  if (kind == "scalar") return service_from_json<double>(j, n);
  if (kind == "vec2") return service_from_json<Vec2>(j, n);
  throw SchemaError("space: weightKind must be scalar or vec2");
}

json trace_to_json(const Trace& trace) {
  json j;
  j["horizon"] = trace.horizon;
  j["channels"] = trace.channels;
  json locs = json::array();
  for (int l = 0; l < trace.location_count(); ++l) {
    const auto& sig = trace.locations[static_cast<std::size_t>(l)];
    json segs = json::array();
    for (std::size_t i = 0; i < sig.times.size(); ++i) {
      json vals = json::array();
      for (std::size_t c = 0; c < trace.channels.size(); ++c) {
        if (trace.kinds[c] == ChannelKind::kBool)
          vals.push_back(sig.values[i][c] != 0.0);
        else
          vals.push_back(sig.values[i][c]);
      }
      segs.push_back({{"t", sig.times[i]}, {"values", vals}});
    }
    locs.push_back({{"id", l}, {"segments", segs}});
  }
  j["locations"] = locs;
  return j;
}

json weight_to_json(double w) { return json(w); }
json weight_to_json(const Vec2& w) { return json::array({w.x, w.y}); }

template <class W>
json space_to_json(const LocationService<W>& svc) {
  json j;
  j["locations"] = svc.location_count();
  j["weightKind"] = std::is_same_v<W, Vec2> ? "vec2" : "scalar";
  json snaps = json::array();
  for (std::size_t i = 0; i < svc.breakpoints.size(); ++i) {
    json edges = json::array();
    const auto& m = svc.models[i];
    for (LocId u = 0; u < m.location_count(); ++u)
      for (const auto& e : m.out_edges(u))
        edges.push_back(json::array({u, weight_to_json(e.weight), e.dst}));
    snaps.push_back({{"t", svc.breakpoints[i]}, {"edges", edges}});
  }
  j["snapshots"] = snaps;
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <class D>
void csv_impl(const MonitorResult<D>& result, std::ostream& os) {
  os << "location,t,value\n";
  for (int l = 0; l < result.signal.location_count(); ++l) {
    const auto& sig = result.signal.locations[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < sig.times.size(); ++i) {
      os << l << "," << format_double(sig.times[i]) << ",";
      if constexpr (std::is_same_v<typename D::value_type, bool>)
        os << bool_text(sig.values[i]);
      else
        os << format_double(sig.values[i]);
      os << "\n";
    }
  }
}

template <class D>
void json_impl(const MonitorResult<D>& result, std::ostream& os) {
  json j;
  j["formula"] = result.formula_text;
  j["semantics"] = result.semantics;
  j["horizon"] = result.signal.horizon;
  json locs = json::array();
  for (int l = 0; l < result.signal.location_count(); ++l) {
    const auto& sig = result.signal.locations[static_cast<std::size_t>(l)];
    if (sig.times.empty()) continue;  // filtered out
    json segs = json::array();
    for (std::size_t i = 0; i < sig.times.size(); ++i) {
      json v;
      if constexpr (std::is_same_v<typename D::value_type, bool>) {
        v = static_cast<bool>(sig.values[i]);
      } else {
        double d = sig.values[i];
        if (std::isinf(d))
          v = d > 0 ? "inf" : "-inf";  // JSON numbers cannot express infinities
        else
          v = d;
      }
      segs.push_back({{"t", sig.times[i]}, {"value", v}});
    }
    locs.push_back({{"id", l}, {"segments", segs}});
  }
  j["locations"] = locs;
  os << j.dump(2) << "\n";
}

}  // namespace

Trace load_trace(const std::string& path) { return trace_from_json(read_json_file(path)); }

Trace parse_trace_json(const std::string& text) {
  try {
    return trace_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw SchemaError(e.what());
  }
}

void save_trace(const Trace& trace, const std::string& path) {
  write_json_file(trace_to_json(trace), path);
}

AnyLocationService load_space(const std::string& path) {
  return space_from_json(read_json_file(path));
}

AnyLocationService parse_space_json(const std::string& text) {
  try {
    return space_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw SchemaError(e.what());
  }
}

void save_space(const LocationService<double>& service, const std::string& path) {
  write_json_file(space_to_json(service), path);
}

void save_space(const LocationService<Vec2>& service, const std::string& path) {
  write_json_file(space_to_json(service), path);
}

void write_result_csv(const MonitorResult<BooleanDomain>& result, std::ostream& os) {
  csv_impl(result, os);
}
void write_result_csv(const MonitorResult<MaxMinDomain>& result, std::ostream& os) {
  csv_impl(result, os);
}
void write_result_json(const MonitorResult<BooleanDomain>& result, std::ostream& os) {
  json_impl(result, os);
}
void write_result_json(const MonitorResult<MaxMinDomain>& result, std::ostream& os) {
  json_impl(result, os);
}

Trace import_result_csv(const std::string& path, double horizon) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "location,t,value")
    throw SchemaError(path + ": missing location,t,value header");

  std::vector<std::vector<double>> times;
  std::vector<std::vector<std::vector<double>>> rows;
  bool any_bool = false, any_real = false;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string loc_s, t_s, v_s;
    if (!std::getline(ls, loc_s, ',') || !std::getline(ls, t_s, ',') ||
        !std::getline(ls, v_s))
      throw SchemaError(path + ":" + std::to_string(lineno) + ": malformed row");
    int l = std::stoi(loc_s);
    double t = std::stod(t_s);
    double v;
    if (v_s == "true") {
      v = 1.0;
      any_bool = true;
    } else if (v_s == "false") {
      v = 0.0;
      any_bool = true;
    } else if (v_s == "inf") {
      v = kInf;
      any_real = true;
    } else if (v_s == "-inf") {
      v = -kInf;
      any_real = true;
    } else {
      v = std::stod(v_s);
      any_real = true;
    }
    if (l < 0) throw SchemaError(path + ": negative location id");
    if (static_cast<std::size_t>(l) >= times.size()) {
      times.resize(static_cast<std::size_t>(l) + 1);
      rows.resize(static_cast<std::size_t>(l) + 1);
    }
    times[static_cast<std::size_t>(l)].push_back(t);
    rows[static_cast<std::size_t>(l)].push_back({v});
  }
  if (any_bool && any_real)
    throw SchemaError(path + ": mixed boolean and numeric values");

  Trace out;
  out.channels = {"value"};
  out.kinds = {any_bool ? ChannelKind::kBool : ChannelKind::kReal};
  out.horizon = horizon;
  for (std::size_t l = 0; l < times.size(); ++l) {
    if (times[l].empty()) throw SchemaError(path + ": location without rows");
    out.locations.emplace_back(times[l], rows[l], horizon);
  }
  return out;
}

}  // namespace strel
