#include "strel/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strel/io.hpp"
#include "strel/logic.hpp"
#include "strel/monitor.hpp"
#include "strel/scenarios.hpp"

namespace strel::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kError = 2;

struct MonitorArgs {
  std::string formula_file;
  std::string formula_text;
  std::string trace_path;
  std::string space_path;
  std::string semantics = "boolean";
  std::string output;
  std::string format = "csv";
  bool assert_all = false;
  double at_time = kInf;  // kInf = no filter
  std::vector<int> locations;
};

std::string read_formula_source(const MonitorArgs& a) {
  if (!a.formula_text.empty()) return a.formula_text;
  std::ifstream in(a.formula_file);
  if (!in) throw IoError("cannot open formula file '" + a.formula_file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Locations outside the filter become empty signals; writers skip those.
/// A time filter reduces each signal to the single sampled value.
template <class D>
void apply_filters(MonitorResult<D>& res, const MonitorArgs& a) {
  using V = typename D::value_type;
  if (!a.locations.empty()) {
    for (int l = 0; l < res.signal.location_count(); ++l)
      if (std::find(a.locations.begin(), a.locations.end(), l) == a.locations.end())
        res.signal.locations[static_cast<std::size_t>(l)] = PiecewiseSignal<V>();
  }
  if (!std::isinf(a.at_time)) {
    if (a.at_time < 0.0 || a.at_time > res.signal.horizon)
      throw ValidationError("--at-time outside [0, " +
                            format_double(res.signal.horizon) + "]");
    for (auto& sig : res.signal.locations) {
      if (sig.times.empty()) continue;
      V v = sig.value_at(a.at_time);
      sig = PiecewiseSignal<V>({a.at_time}, {v},
                               std::max(a.at_time, res.signal.horizon));
    }
  }
}

template <class D>
int emit(MonitorResult<D> res, const MonitorArgs& a) {
  bool violated = false;
  if (a.assert_all) {
    for (const auto& sig : res.signal.locations) {
      if constexpr (std::is_same_v<typename D::value_type, bool>)
        violated = violated || !sig.value_at(0.0);
      else
        violated = violated || !(sig.value_at(0.0) > 0.0);
    }
  }

  apply_filters(res, a);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw IoError("cannot write '" + a.output + "'");
    os = &file;
  }
  if (a.format == "csv")
    write_result_csv(res, *os);
  else if (a.format == "json")
    write_result_json(res, *os);
  else
    throw ValidationError("unknown output format '" + a.format + "'");

  return violated ? kViolation : kOk;
}

int run_monitor(const MonitorArgs& a) {
  FormulaPtr formula = parse_formula(read_formula_source(a));
  Trace trace = load_trace(a.trace_path);
  AnyLocationService space = load_space(a.space_path);
  if (trace.location_count() != service_location_count(space))
    throw ValidationError("trace and space universes differ");
  InterpretationContext ctx{trace.schema()};
  validate(*formula, ctx);

  return std::visit(
      [&](const auto& svc) -> int {
        if (a.semantics == "boolean")
          return emit(monitor<BooleanDomain>(svc, trace, formula, ctx), a);
        if (a.semantics == "maxmin")
          return emit(monitor<MaxMinDomain>(svc, trace, formula, ctx), a);
        throw ValidationError("semantics must be boolean or maxmin");
      },
      space);
}

int run_check(const MonitorArgs& a) {
  FormulaPtr formula = parse_formula(read_formula_source(a));
  if (!a.trace_path.empty()) {
    Trace trace = load_trace(a.trace_path);
    validate(*formula, InterpretationContext{trace.schema()});
  }
  std::cout << to_text(formula) << "\n";
  return kOk;
}

struct SimulateArgs {
  ManetConfig config;
  std::string graph = "radius";
  std::string fixture = "manet";
  std::string out_dir = ".";
};

int run_simulate(SimulateArgs& a) {
  if (a.fixture == "zigbee") {
    ZigBeeFixture fx = zigbee_fixture();
    save_trace(fx.trace, a.out_dir + "/trace.json");
    save_space(fx.service, a.out_dir + "/space.json");
  } else if (a.fixture == "manet") {
    if (a.graph == "radius")
      a.config.graph = ManetConfig::Graph::kRadius;
    else if (a.graph == "delaunay")
      a.config.graph = ManetConfig::Graph::kDelaunay;
    else
      throw ValidationError("graph must be radius or delaunay");
    ManetScenario sc = manet_generate(a.config);
    save_trace(sc.trace, a.out_dir + "/trace.json");
    save_space(sc.service, a.out_dir + "/space.json");
  } else {
    throw ValidationError("fixture must be manet or zigbee");
  }
  std::cout << "wrote " << a.out_dir << "/trace.json and " << a.out_dir
            << "/space.json\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Offline monitor for spatio-temporal reach/escape properties"};
  app.require_subcommand(1);

  MonitorArgs margs;
  auto* mon = app.add_subcommand("monitor", "evaluate a formula over a trace");
  mon->add_option("--formula", margs.formula_file, "formula file");
  mon->add_option("--formula-text", margs.formula_text, "formula given inline");
  mon->add_option("--trace", margs.trace_path, "trace JSON")->required();
  mon->add_option("--space", margs.space_path, "space JSON")->required();
  mon->add_option("--semantics", margs.semantics, "boolean | maxmin");
  mon->add_option("--output", margs.output, "output path (default stdout)");
  mon->add_option("--format", margs.format, "csv | json");
  mon->add_option("--at-time", margs.at_time, "report a single evaluation time");
  mon->add_option("--location", margs.locations, "restrict output to these locations");
  mon->add_flag("--assert-all", margs.assert_all,
                "exit 1 unless every location satisfies the formula at time 0");

  MonitorArgs cargs;
  auto* chk = app.add_subcommand("check", "parse and validate a formula");
  chk->add_option("--formula", cargs.formula_file, "formula file");
  chk->add_option("--formula-text", cargs.formula_text, "formula given inline");
  chk->add_option("--trace", cargs.trace_path, "validate against this trace's schema");

  SimulateArgs sargs;
  auto* sim = app.add_subcommand("simulate", "generate a mobile network scenario");
  sim->add_option("--nodes", sargs.config.nodes, "node count");
  sim->add_option("--steps", sargs.config.steps, "time steps");
  sim->add_option("--dt", sargs.config.dt, "seconds per step");
  sim->add_option("--arena", sargs.config.arena, "arena side length");
  sim->add_option("--walk-sigma", sargs.config.walk_sigma, "walk step deviation");
  sim->add_option("--radius", sargs.config.radius, "communication radius");
  sim->add_option("--graph", sargs.graph, "radius | delaunay");
  sim->add_option("--router-fraction", sargs.config.router_fraction,
                  "fraction of router nodes");
  sim->add_option("--seed", sargs.config.seed, "RNG seed");
  sim->add_option("--fixture", sargs.fixture,
                  "manet (generated) | zigbee (the stock 16-node network)");
  sim->add_option("--out-dir", sargs.out_dir, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (mon->parsed()) {
      if (margs.formula_file.empty() == margs.formula_text.empty())
        throw ValidationError("give exactly one of --formula / --formula-text");
      return run_monitor(margs);
    }
    if (chk->parsed()) {
      if (cargs.formula_file.empty() == cargs.formula_text.empty())
        throw ValidationError("give exactly one of --formula / --formula-text");
      return run_check(cargs);
    }
    if (sim->parsed()) return run_simulate(sargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace strel::cli
