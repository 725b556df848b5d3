#include "strel/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace strel {

ZigBeeFixture zigbee_fixture() {
  const int n = 16;
  // 1-based pairs as drawn in the network diagram.
  static const int pairs[][2] = {{1, 8},  {2, 7},   {8, 6},   {8, 7},  {7, 10},
                                 {7, 5},  {3, 10},  {6, 5},   {10, 11}, {10, 9},
                                 {11, 15}, {11, 12}, {9, 14},  {10, 14}, {10, 16},
                                 {11, 16}, {13, 16}, {8, 4}};
  std::vector<Edge<double>> edges;
  for (const auto& p : pairs)
    add_undirected(edges, static_cast<LocId>(p[0] - 1), static_cast<LocId>(p[1] - 1),
                   1.0);
  SpatialModel<double> model(n, std::move(edges));

  static const int coord_nodes[] = {10};
  static const int router_nodes[] = {5, 7, 8, 9, 11, 16};

  Trace trace;
  trace.channels = {"coord", "router", "end_dev"};
  trace.kinds = {ChannelKind::kBool, ChannelKind::kBool, ChannelKind::kBool};
  trace.horizon = 1.0;
  for (int l = 1; l <= n; ++l) {
    bool is_coord = std::find(std::begin(coord_nodes), std::end(coord_nodes), l) !=
                    std::end(coord_nodes);
    bool is_router = std::find(std::begin(router_nodes), std::end(router_nodes), l) !=
                     std::end(router_nodes);
    std::vector<double> row{is_coord ? 1.0 : 0.0, is_router ? 1.0 : 0.0,
                            (!is_coord && !is_router) ? 1.0 : 0.0};
    trace.locations.emplace_back(std::vector<double>{0.0},
                                 std::vector<std::vector<double>>{row}, 1.0);
  }
  return {LocationService<double>::constant(std::move(model)), std::move(trace)};
}

// --------------------------------------------------------------------------
// Delaunay triangulation (Bowyer-Watson)

namespace {

struct Tri {
  int a, b, c;
};

// Positive orientation; swaps two vertices when clockwise.
void orient(Tri& t, const std::vector<Vec2>& pts) {
  const Vec2 &pa = pts[t.a], &pb = pts[t.b], &pc = pts[t.c];
  double cross = (pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x);
  if (cross < 0) std::swap(t.b, t.c);
}

// In-circle predicate with a relative tolerance; strictly-inside only, so
// cocircular quadruples keep the triangulation of the insertion order.
bool in_circumcircle(const Tri& t, const std::vector<Vec2>& pts, Vec2 p) {
  const Vec2 &a = pts[t.a], &b = pts[t.b], &c = pts[t.c];
  double ax = a.x - p.x, ay = a.y - p.y;
  double bx = b.x - p.x, by = b.y - p.y;
  double cx = c.x - p.x, cy = c.y - p.y;
  double d = (ax * ax + ay * ay) * (bx * cy - cx * by) -
             (bx * bx + by * by) * (ax * cy - cx * ay) +
             (cx * cx + cy * cy) * (ax * by - bx * ay);
  double scale = std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by),
                           std::abs(cx), std::abs(cy), 1.0});
  return d > 1e-9 * scale * scale * scale * scale;
}

}  // namespace

std::vector<std::pair<LocId, LocId>> delaunay_edges(const std::vector<Vec2>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::pair<LocId, LocId>> out;
  if (n < 2) return out;
  if (n == 2) {
    out.push_back({0, 1});
    return out;
  }

  std::vector<Vec2> pts = points;
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  for (const Vec2& p : pts) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
  // Super-triangle comfortably containing every point.
  pts.push_back({cx - 30 * span, cy - span});
  pts.push_back({cx + 30 * span, cy - span});
  pts.push_back({cx, cy + 30 * span});
  const int s0 = n, s1 = n + 1, s2 = n + 2;

  std::vector<Tri> tris{{s0, s1, s2}};
  orient(tris[0], pts);

  for (int i = 0; i < n; ++i) {
    const Vec2 p = pts[i];
    std::vector<Tri> bad, keep;
    for (const Tri& t : tris)
      (in_circumcircle(t, pts, p) ? bad : keep).push_back(t);

    // Boundary of the cavity: edges belonging to exactly one bad triangle.
    std::vector<std::pair<int, int>> boundary;
    auto consider = [&boundary](int u, int v) {
      auto rev = std::make_pair(v, u);
      auto it = std::find(boundary.begin(), boundary.end(), rev);
      if (it != boundary.end())
        boundary.erase(it);
      else
        boundary.push_back({u, v});
    };
    for (const Tri& t : bad) {
      consider(t.a, t.b);
      consider(t.b, t.c);
      consider(t.c, t.a);
    }
    tris = std::move(keep);
    for (auto [u, v] : boundary) {
      Tri t{u, v, i};
      orient(t, pts);
      tris.push_back(t);
    }
  }

  std::set<std::pair<LocId, LocId>> seen;
  for (const Tri& t : tris) {
    const int vs[3] = {t.a, t.b, t.c};
    for (int k = 0; k < 3; ++k) {
      int u = vs[k], v = vs[(k + 1) % 3];
      if (u >= n || v >= n) continue;  // super-triangle vertex
      auto e = std::minmax(u, v);
      if (seen.insert({e.first, e.second}).second)
        out.push_back({static_cast<LocId>(e.first), static_cast<LocId>(e.second)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------------------
// MANET generator

namespace {

void check_config(const ManetConfig& c) {
  if (c.nodes < 1 || c.steps < 1) throw std::invalid_argument("nodes and steps must be positive");
  if (!(c.dt > 0) || !(c.arena > 0) || !(c.radius > 0) || c.walk_sigma < 0)
    throw std::invalid_argument("dt, arena and radius must be positive");
  if (c.router_fraction < 0 || c.router_fraction > 1)
    throw std::invalid_argument("router fraction must lie in [0, 1]");
}

double reflect_into(double v, double hi) {
  // Fold the real line into [0, hi].
  v = std::fmod(std::abs(v), 2 * hi);
  return v <= hi ? v : 2 * hi - v;
}

SpatialModel<Vec2> radius_graph(const std::vector<Vec2>& pos, double radius) {
  std::vector<Edge<Vec2>> edges;
  const int n = static_cast<int>(pos.size());
  for (LocId i = 0; i < n; ++i)
    for (LocId j = static_cast<LocId>(i + 1); j < n; ++j)
      if (norm2(pos[j] - pos[i]) <= radius)
        add_undirected(edges, i, j, pos[j] - pos[i]);
  return SpatialModel<Vec2>(n, std::move(edges));
}

SpatialModel<Vec2> delaunay_graph(const std::vector<Vec2>& pos) {
  std::vector<Edge<Vec2>> edges;
  for (auto [i, j] : delaunay_edges(pos)) add_undirected(edges, i, j, pos[j] - pos[i]);
  return SpatialModel<Vec2>(static_cast<int>(pos.size()), std::move(edges));
}

}  // namespace

ManetScenario manet_generate(const ManetConfig& config) {
  check_config(config);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> uniform(0.0, config.arena);
  std::normal_distribution<double> step(0.0, config.walk_sigma);

  const int n = config.nodes;
  std::vector<Vec2> pos(static_cast<std::size_t>(n));
  for (Vec2& p : pos) p = {uniform(rng), uniform(rng)};

  // Roles: node 0 is the unique coordinator, then routers, then end devices.
  int routers = static_cast<int>(std::lround(config.router_fraction * n));
  routers = std::min(routers, n - 1);
  std::vector<int> role(static_cast<std::size_t>(n), 2);  // 0 coord, 1 router, 2 end
  role[0] = 0;
  std::vector<int> order;
  for (int i = 1; i < n; ++i) order.push_back(i);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < routers; ++i) role[static_cast<std::size_t>(order[i])] = 1;
  LocId target = n == 1 ? 0 : static_cast<LocId>(1 + rng() % (n - 1));

  std::vector<double> battery(static_cast<std::size_t>(n));
  std::vector<double> humidity(static_cast<std::size_t>(n));
  std::vector<double> pollution(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> b0(40.0, 100.0);
  std::uniform_real_distribution<double> h0(0.0, 200.0);
  for (int i = 0; i < n; ++i) {
    battery[i] = b0(rng);
    humidity[i] = h0(rng);
    pollution[i] = h0(rng);
  }
  std::normal_distribution<double> drift(0.0, 8.0);

  Trace trace;
  trace.channels = {"coord", "router", "end_dev", "X_B", "X_H", "X_P", "X_S"};
  trace.kinds = {ChannelKind::kBool, ChannelKind::kBool, ChannelKind::kBool,
                 ChannelKind::kReal, ChannelKind::kReal, ChannelKind::kReal,
                 ChannelKind::kReal};
  trace.horizon = config.steps * config.dt;

  std::vector<double> breakpoints;
  std::vector<SpatialModel<Vec2>> models;
  std::vector<std::vector<double>> times(static_cast<std::size_t>(n));
  std::vector<std::vector<std::vector<double>>> rows(static_cast<std::size_t>(n));

  for (int k = 0; k < config.steps; ++k) {
    const double t = k * config.dt;
    if (k > 0) {
      for (Vec2& p : pos)
        p = {reflect_into(p.x + step(rng), config.arena),
             reflect_into(p.y + step(rng), config.arena)};
      for (int i = 0; i < n; ++i) {
        battery[i] = std::clamp(battery[i] + drift(rng) / 4 - 0.5, 0.0, 100.0);
        humidity[i] = std::clamp(humidity[i] + drift(rng), 0.0, 200.0);
        pollution[i] = std::clamp(pollution[i] + drift(rng), 0.0, 200.0);
      }
    }
    breakpoints.push_back(t);
    models.push_back(config.graph == ManetConfig::Graph::kRadius
                         ? radius_graph(pos, config.radius)
                         : delaunay_graph(pos));
    for (int i = 0; i < n; ++i) {
      times[i].push_back(t);
      rows[i].push_back({role[i] == 0 ? 1.0 : 0.0, role[i] == 1 ? 1.0 : 0.0,
                         role[i] == 2 ? 1.0 : 0.0, battery[i], humidity[i],
                         pollution[i], i == target ? 1.0 : 0.0});
    }
  }

  for (int i = 0; i < n; ++i)
    trace.locations.emplace_back(times[i], rows[i], trace.horizon);

  return {LocationService<Vec2>(std::move(breakpoints), std::move(models)),
          std::move(trace)};
}

// --------------------------------------------------------------------------

std::vector<NamedFormula> property_library(const PropertyParams& p) {
  const std::string connect =
      "end_dev reach(hops)[<= 1] (router reach(hops)[< infinity] coord)";
  const std::string reliable_router =
      "(X_B > 30 & router) reach(hops)[< infinity] coord";
  const std::string at = "@" + std::to_string(p.cycle_location);
  const std::string cycle = at + " reach(hops)[<= 1] (!" + at +
                            " & somewhere(hops)[< infinity] " + at + ")";
  const std::string safe = "G[0," + format_double(p.horizon) + "] escape(euclid)[>= " +
                           format_double(p.safe_distance) +
                           "] (X_H < 90 & X_P < 150)";
  return {
      {"phi_connect", connect},
      {"phi_reliable_connect",
       "end_dev reach(hops)[<= 1] (" + reliable_router + ")"},
      {"phi_connect_restore",
       "G[0," + format_double(p.horizon) + "] ((" + connect + ") | (F[0," +
           format_double(p.restore_within) + "] (" + connect + ")))"},
      {"phi_cycle", cycle},
      {"phi_acyclic", "!(" + cycle + ")"},
      {"phi_PH", "!(X_P > 150) | (F[0," + format_double(p.horizon) + "] (X_H > 100))"},
      {"phi_Safe", safe},
      {"phi_some", "somewhere(euclid)[<= 5] (" + safe + ")"},
      {"phi_target", "everywhere(hops)[< infinity] somewhere(hops)[< 10] X_S >= 1"},
  };
}

}  // namespace strel
