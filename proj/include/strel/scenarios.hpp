#pragma once

// Reproducible fixtures and generators: the 16-node ZigBee network used
// throughout the examples, a MANET trace generator (reflected random walk,
// radius or Delaunay connectivity), and the stock property library.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "strel/signal.hpp"
#include "strel/space.hpp"

namespace strel {

struct ZigBeeFixture {
  LocationService<double> service;
  Trace trace;
};

/// Static 16-location network with unit edge weights and boolean role
/// channels coord / router / end_dev; exactly one coordinator.
ZigBeeFixture zigbee_fixture();

struct ManetConfig {
  int nodes = 20;
  int steps = 20;
  double dt = 1.0;            // seconds per step
  double arena = 4.0;         // arena side length, unit-square multiples
  double walk_sigma = 0.25;   // per-step walk deviation
  double radius = 1.0;        // communication radius for the radius rule
  enum class Graph { kRadius, kDelaunay };
  Graph graph = Graph::kRadius;
  double router_fraction = 0.3;  // remaining nodes are end devices
  std::uint64_t seed = 1;
};

struct ManetScenario {
  LocationService<Vec2> service;
  Trace trace;
};

/// Deterministic for a fixed seed. Positions follow a reflected Gaussian
/// random walk inside the arena; the spatial model is rebuilt every step
/// from the current positions; channels are piecewise constant per step.
ManetScenario manet_generate(const ManetConfig& config);

/// Delaunay triangulation edges (Bowyer-Watson) of a point set. Degenerate
/// cocircular quadruples resolve deterministically: points are inserted in
/// index order and the in-circle test uses a 1e-9 relative tolerance.
std::vector<std::pair<LocId, LocId>> delaunay_edges(const std::vector<Vec2>& points);

struct NamedFormula {
  std::string name;
  std::string text;
};

struct PropertyParams {
  double horizon = 10.0;        // outer G windows
  double restore_within = 2.0;  // how fast a broken connection must heal
  double safe_distance = 1.0;   // escape lower bound in phi_Safe
  LocId cycle_location = 0;     // the probed location in phi_cycle/phi_acyclic
};

/// The stock MANET properties as DSL text, parseable and valid against the
/// generated traces.
std::vector<NamedFormula> property_library(const PropertyParams& params = {});

}  // namespace strel
