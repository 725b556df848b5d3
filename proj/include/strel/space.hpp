#pragma once

// Spatial models: weighted directed graphs over a dense location universe,
// Euclidean constructions, routes, distance accumulation, and the
// piecewise-constant location service that makes graphs time-dependent.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strel/semiring.hpp"
#include "strel/util.hpp"

namespace strel {

using LocId = std::int32_t;

template <class W>
struct Edge {
  LocId src;
  LocId dst;
  W weight;
};

/// Weighted directed graph with at most one weight per ordered (src, dst)
/// pair. Immutable after construction; stored as CSR adjacency.
template <class W>
class SpatialModel {
 public:
  struct OutEdge {
    LocId dst;
    W weight;
  };

  SpatialModel() = default;

  SpatialModel(int location_count, std::vector<Edge<W>> edges)
      : n_(location_count) {
    if (location_count < 0) throw std::invalid_argument("negative universe");
    std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      return a.src != b.src ? a.src < b.src : a.dst < b.dst;
    });
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    out_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_)
        throw std::invalid_argument("edge endpoint outside location universe");
      if (i > 0 && edges[i - 1].src == e.src && edges[i - 1].dst == e.dst)
        throw std::invalid_argument(
            "at most one weight per (source, target) pair; duplicate " +
            std::to_string(e.src) + "->" + std::to_string(e.dst));
      offsets_[static_cast<std::size_t>(e.src) + 1]++;
      out_.push_back(OutEdge{e.dst, e.weight});
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  }

  int location_count() const { return n_; }
  std::size_t edge_count() const { return out_.size(); }

  std::span<const OutEdge> out_edges(LocId l) const {
    return {out_.data() + offsets_[static_cast<std::size_t>(l)],
            out_.data() + offsets_[static_cast<std::size_t>(l) + 1]};
  }

  std::optional<W> weight(LocId src, LocId dst) const {
    for (const auto& e : out_edges(src))
      if (e.dst == dst) return e.weight;
    return std::nullopt;
  }

  friend bool operator==(const SpatialModel& a, const SpatialModel& b) {
    if (a.n_ != b.n_ || a.out_.size() != b.out_.size()) return false;
    if (a.offsets_ != b.offsets_) return false;
    for (std::size_t i = 0; i < a.out_.size(); ++i)
      if (a.out_[i].dst != b.out_[i].dst || !(a.out_[i].weight == b.out_[i].weight))
        return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<OutEdge> out_;
};

/// Undirected helper: each pair is stored as two directed edges. Vector
/// weights are negated on the reverse edge, scalar weights repeated.
inline void add_undirected(std::vector<Edge<double>>& edges, LocId a, LocId b,
                           double w) {
  edges.push_back({a, b, w});
  edges.push_back({b, a, w});
}
inline void add_undirected(std::vector<Edge<Vec2>>& edges, LocId a, LocId b,
                           Vec2 w) {
  edges.push_back({a, b, w});
  edges.push_back({b, a, -w});
}

// --------------------------------------------------------------------------
// Euclidean models

struct EuclideanModel {
  std::vector<Vec2> positions;                    // location -> plane point
  std::vector<std::pair<LocId, LocId>> relation;  // connected ordered pairs
};

/// Induced spatial model: edge weight is the displacement that moves the
/// source onto the target, so positions(src) + w == positions(dst).
inline SpatialModel<Vec2> build_euclidean(const EuclideanModel& m) {
  const int n = static_cast<int>(m.positions.size());
  std::vector<Edge<Vec2>> edges;
  edges.reserve(m.relation.size());
  for (auto [a, b] : m.relation) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("relation references unknown location");
    edges.push_back({a, b, m.positions[b] - m.positions[a]});
  }
  return SpatialModel<Vec2>(n, std::move(edges));
}

/// Plane isometry: optional reflection across the x axis, then rotation by
/// angle, then translation. |det| = 1 by construction.
inline EuclideanModel apply_isometry(const EuclideanModel& m, double angle,
                                     Vec2 translation, bool reflect) {
  EuclideanModel out = m;
  const double c = std::cos(angle), s = std::sin(angle);
  for (Vec2& p : out.positions) {
    Vec2 q = reflect ? Vec2{p.x, -p.y} : p;
    p = Vec2{c * q.x - s * q.y + translation.x, s * q.x + c * q.y + translation.y};
  }
  return out;
}

// --------------------------------------------------------------------------
// Routes and distances

/// Finite prefix of a route: consecutive pairs must be model edges.
using Route = std::vector<LocId>;

inline std::optional<std::size_t> first_occurrence(const Route& route, LocId l) {
  for (std::size_t i = 0; i < route.size(); ++i)
    if (route[i] == l) return i;
  return std::nullopt;
}

/// Hop counting in the tropical semiring over N u {inf}.
struct HopsDistance {
  using value_type = std::int64_t;
  static constexpr const char* name = "hops";
  static constexpr value_type zero() { return 0; }
  static constexpr value_type unreachable() { return TropicalIntSemiring::bottom(); }
  template <class W>
  static value_type accumulate(value_type v, const W&) {
    return v == kIntInf ? kIntInf : v + 1;
  }
  static value_type choose(value_type a, value_type b) { return a < b ? a : b; }
  static double as_real(value_type v) {
    return v == kIntInf ? kInf : static_cast<double>(v);
  }
};

/// Accumulated Euclidean length in the tropical semiring over R>=0 u {inf}.
struct EuclidDistance {
  using value_type = double;
  static constexpr const char* name = "euclid";
  static constexpr value_type zero() { return 0.0; }
  static constexpr value_type unreachable() { return TropicalSemiring::bottom(); }
  static value_type accumulate(value_type v, const Vec2& w) { return v + norm2(w); }
  static value_type accumulate(value_type v, double w) { return v + std::abs(w); }
  static value_type choose(value_type a, value_type b) { return a < b ? a : b; }
  static double as_real(value_type v) { return v; }
};

/// Fold of the distance function over a route prefix, front to back.
/// d[0] is the function's zero element; index i adds the first i edges.
template <class DF, class W>
typename DF::value_type route_distance(const SpatialModel<W>& g,
                                       std::span<const LocId> route) {
  typename DF::value_type d = DF::zero();
  for (std::size_t i = 0; i + 1 < route.size(); ++i) {
    auto w = g.weight(route[i], route[i + 1]);
    if (!w)
      throw std::invalid_argument("route step " + std::to_string(route[i]) + "->" +
                                  std::to_string(route[i + 1]) + " is not an edge");
    d = DF::accumulate(d, *w);
  }
  return d;
}

/// Distances from src to every location: choose over the accumulated
/// distances of all routes, computed by relaxation sweeps. Terminates because
/// accumulation is monotone and choose is selective; a sweep count beyond the
/// universe size would indicate a broken distance function.
template <class DF, class W>
std::vector<typename DF::value_type> distances_from(const SpatialModel<W>& g,
                                                    LocId src,
                                                    int* sweeps_out = nullptr) {
  using B = typename DF::value_type;
  const int n = g.location_count();
  std::vector<B> dist(static_cast<std::size_t>(n), DF::unreachable());
  dist[static_cast<std::size_t>(src)] = DF::zero();
  int sweeps = 0;
  for (bool changed = true; changed; ++sweeps) {
    changed = false;
    for (LocId u = 0; u < n; ++u) {
      const B du = dist[static_cast<std::size_t>(u)];
      if (du == DF::unreachable()) continue;
      for (const auto& e : g.out_edges(u)) {
        B cand = DF::accumulate(du, e.weight);
        B& dv = dist[static_cast<std::size_t>(e.dst)];
        B merged = DF::choose(cand, dv);
        if (!(merged == dv)) {
          dv = merged;
          changed = true;
        }
      }
    }
  }
  if (sweeps_out != nullptr) *sweeps_out = sweeps;
  return dist;
}

template <class DF, class W>
typename DF::value_type pairwise_distance(const SpatialModel<W>& g, LocId src,
                                          LocId dst) {
  return distances_from<DF>(g, src)[static_cast<std::size_t>(dst)];
}

// --------------------------------------------------------------------------

/// Piecewise-constant, graph-valued function of time. All models share one
/// location universe; the model at time t is the one at the greatest
/// breakpoint <= t.
template <class W>
struct LocationService {
  std::vector<double> breakpoints;
  std::vector<SpatialModel<W>> models;

  LocationService() = default;
  LocationService(std::vector<double> bps, std::vector<SpatialModel<W>> ms)
      : breakpoints(std::move(bps)), models(std::move(ms)) {
    if (breakpoints.size() != models.size() || breakpoints.empty())
      throw std::invalid_argument("location service needs one model per breakpoint");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i]))
        throw std::invalid_argument("location service breakpoints must increase");
    for (const auto& m : models)
      if (m.location_count() != models.front().location_count())
        throw std::invalid_argument("location service models must share the universe");
  }

  static LocationService constant(SpatialModel<W> m) {
    return LocationService({0.0}, {std::move(m)});
  }

  int location_count() const { return models.front().location_count(); }

  const SpatialModel<W>& model_at(double t) const {
    if (t < breakpoints.front())
      throw std::out_of_range("time precedes the first spatial snapshot");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
    return models[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
  }
};

}  // namespace strel
