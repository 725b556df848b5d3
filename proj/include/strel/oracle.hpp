#pragma once

// Brute-force reference monitor. Evaluates the semantics literally:
// temporal operators by direct folds over a candidate-time set that provably
// contains every discontinuity (all input breakpoints, closed under the
// formula's window shifts, plus a coarse grid), spatial operators by
// exhaustive enumeration of simple paths. Deliberately shares no code with
// the fixpoint/sweep engine; guard rails keep instances small.

#include <cstdint>
#include <cstring>
#include <unordered_map>
#include <vector>

#include "strel/logic.hpp"
#include "strel/monitor.hpp"
#include "strel/signal.hpp"
#include "strel/space.hpp"

namespace strel {

struct OracleLimits {
  int max_locations = 9;
  int max_breakpoints = 8;  // per signal / per service
};

namespace detail {

template <class D, class W>
class OracleEngine {
 public:
  using V = typename D::value_type;

  OracleEngine(const LocationService<W>& service, const Trace& trace,
               const FormulaPtr& root, OracleLimits limits)
      : service_(service), trace_(trace) {
    if (trace.location_count() > limits.max_locations)
      throw std::invalid_argument("oracle: instance too large (locations)");
    for (const auto& sig : trace.locations)
      if (static_cast<int>(sig.times.size()) > limits.max_breakpoints)
        throw std::invalid_argument("oracle: instance too large (trace breakpoints)");
    if (static_cast<int>(service.breakpoints.size()) > limits.max_breakpoints)
      throw std::invalid_argument("oracle: instance too large (service snapshots)");
    root_ = expand_derived(root);
    index(root_.get());
  }

  double horizon(const Formula* f) const { return info_.at(f).horizon; }
  const std::vector<double>& candidates(const Formula* f) const {
    return info_.at(f).candidates;
  }

  const Formula* root() const { return root_.get(); }

  /// Verdicts for every location at time t.
  const std::vector<V>& values(const Formula* f, double t) {
    auto key = std::make_pair(info_.at(f).id, t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, compute(f, t)).first->second;
  }

 private:
  struct NodeInfo {
    int id = 0;
    double horizon = 0.0;
    std::vector<double> candidates;  // discontinuity superset for this node
  };

  struct KeyHash {
    std::size_t operator()(const std::pair<int, double>& k) const {
      std::uint64_t bits;
      static_assert(sizeof(double) == sizeof(bits));
      std::memcpy(&bits, &k.second, sizeof(bits));
      return std::hash<std::uint64_t>()(bits * 1000003u + static_cast<std::uint64_t>(k.first));
    }
  };

  static void merge_into(std::vector<double>& dst, const std::vector<double>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  }

  static void finish(std::vector<double>& v, double horizon) {
    std::vector<double> kept;
    for (double t : v)
      if (t >= 0.0 && t <= horizon) kept.push_back(t);
    kept.push_back(0.0);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    v = std::move(kept);
  }

  std::vector<double> base_times() const {
    std::vector<double> out{0.0, trace_.horizon};
    for (const auto& sig : trace_.locations)
      merge_into(out, sig.times);
    merge_into(out, service_.breakpoints);
    // Coarse grid; breakpoints above are what make the set exact.
    for (int k = 1; k < 16; ++k) out.push_back(trace_.horizon * k / 16.0);
    return out;
  }

  void index(const Formula* f) {
    NodeInfo info;
    info.id = next_id_++;
    switch (f->kind) {
      case FormulaKind::kTrue:
      case FormulaKind::kAtomic:
      case FormulaKind::kCmp:
      case FormulaKind::kAt:
        info.horizon = trace_.horizon;
        info.candidates = base_times();
        break;
      case FormulaKind::kNot:
        index(f->left.get());
        info.horizon = horizon(f->left.get());
        info.candidates = candidates(f->left.get());
        break;
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        index(f->left.get());
        index(f->right.get());
        info.horizon = std::min(horizon(f->left.get()), horizon(f->right.get()));
        info.candidates = candidates(f->left.get());
        merge_into(info.candidates, candidates(f->right.get()));
        break;
      case FormulaKind::kUntil: {
        index(f->left.get());
        index(f->right.get());
        double h = std::min(horizon(f->left.get()), horizon(f->right.get()));
        info.horizon = std::max(0.0, h - f->interval.lo);
        std::vector<double> sub = candidates(f->left.get());
        merge_into(sub, candidates(f->right.get()));
        info.candidates = sub;
        for (double c : sub) {
          info.candidates.push_back(c - f->interval.lo);
          info.candidates.push_back(c - f->interval.hi);
        }
        info.candidates.push_back(h - f->interval.hi);
        break;
      }
      case FormulaKind::kSince: {
        index(f->left.get());
        index(f->right.get());
        info.horizon = std::min(horizon(f->left.get()), horizon(f->right.get()));
        std::vector<double> sub = candidates(f->left.get());
        merge_into(sub, candidates(f->right.get()));
        info.candidates = sub;
        for (double c : sub) {
          info.candidates.push_back(c + f->interval.lo);
          info.candidates.push_back(c + f->interval.hi);
        }
        info.candidates.push_back(f->interval.lo);
        break;
      }
      case FormulaKind::kReach: {
        index(f->left.get());
        index(f->right.get());
        info.horizon = std::min(horizon(f->left.get()), horizon(f->right.get()));
        info.candidates = candidates(f->left.get());
        merge_into(info.candidates, candidates(f->right.get()));
        merge_into(info.candidates, service_.breakpoints);
        break;
      }
      case FormulaKind::kEscape:
        index(f->left.get());
        info.horizon = horizon(f->left.get());
        info.candidates = candidates(f->left.get());
        merge_into(info.candidates, service_.breakpoints);
        break;
      default:
        throw std::logic_error("oracle expects core formulas only");
    }
    finish(info.candidates, info.horizon);
    info_[f] = std::move(info);
  }

  std::vector<V> compute(const Formula* f, double t) {
    const int n = trace_.location_count();
    std::vector<V> out(static_cast<std::size_t>(n), D::bottom());
    switch (f->kind) {
      case FormulaKind::kTrue:
        out.assign(out.size(), D::top());
        break;
      case FormulaKind::kAtomic: {
        int ch = trace_.channel_index(f->name);
        for (int l = 0; l < n; ++l)
          out[l] = detail::embed_bool<D>(
              trace_.locations[l].value_at(t)[static_cast<std::size_t>(ch)] != 0.0);
        break;
      }
      case FormulaKind::kCmp: {
        int ch = trace_.channel_index(f->name);
        for (int l = 0; l < n; ++l)
          out[l] = detail::interpret_cmp<D>(
              f->cmp, trace_.locations[l].value_at(t)[static_cast<std::size_t>(ch)],
              f->threshold);
        break;
      }
      case FormulaKind::kAt:
        out[static_cast<std::size_t>(f->location)] = D::top();
        break;
      case FormulaKind::kNot: {
        const auto& sub = values(f->left.get(), t);
        for (int l = 0; l < n; ++l) out[l] = D::negate(sub[l]);
        break;
      }
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        // Copies: values() may rehash the memo while evaluating the sibling.
        const std::vector<V> a = values(f->left.get(), t);
        const std::vector<V> b = values(f->right.get(), t);
        for (int l = 0; l < n; ++l)
          out[l] = f->kind == FormulaKind::kAnd ? D::combine(a[l], b[l])
                                                : D::choose(a[l], b[l]);
        break;
      }
      case FormulaKind::kUntil: {
        const double h = std::min(horizon(f->left.get()), horizon(f->right.get()));
        const double x1 = t + f->interval.lo;
        const double x2 = std::min(t + f->interval.hi, h);
        if (x1 > x2 || x1 > h) break;
        std::vector<double> probes = window_probes(f, x1, x2);
        std::vector<V> prefix(static_cast<std::size_t>(n), D::top());
        // combine of the left operand over [t, x1]
        for (double u : between(f, t, x1)) {
          const auto& a = values(f->left.get(), u);
          for (int l = 0; l < n; ++l) prefix[l] = D::combine(prefix[l], a[l]);
        }
        for (double tp : probes) {
          const std::vector<V> a = values(f->left.get(), tp);
          const std::vector<V> b = values(f->right.get(), tp);
          for (int l = 0; l < n; ++l) {
            prefix[l] = D::combine(prefix[l], a[l]);
            out[l] = D::choose(out[l], D::combine(b[l], prefix[l]));
          }
        }
        break;
      }
      case FormulaKind::kSince: {
        const double hi = t - f->interval.lo;
        if (hi < 0.0) break;
        const double lo = std::max(0.0, t - f->interval.hi);
        std::vector<double> probes = window_probes(f, lo, hi);
        std::vector<V> suffix(static_cast<std::size_t>(n), D::top());
        for (double u : between(f, hi, t)) {
          const auto& a = values(f->left.get(), u);
          for (int l = 0; l < n; ++l) suffix[l] = D::combine(suffix[l], a[l]);
        }
        for (auto it = probes.rbegin(); it != probes.rend(); ++it) {
          const std::vector<V> a = values(f->left.get(), *it);
          const std::vector<V> b = values(f->right.get(), *it);
          for (int l = 0; l < n; ++l) {
            suffix[l] = D::combine(suffix[l], a[l]);
            out[l] = D::choose(out[l], D::combine(b[l], suffix[l]));
          }
        }
        break;
      }
      case FormulaKind::kReach: {
        const std::vector<V> s1 = values(f->left.get(), t);
        const std::vector<V> s2 = values(f->right.get(), t);
        const SpatialModel<W>& g = service_.model_at(t);
        auto kind = distance_kind_from_name(f->name);
        for (LocId l = 0; l < n; ++l)
          out[l] = *kind == DistanceKind::kHops
                       ? reach_from<HopsDistance>(g, f->dist, s1, s2, l)
                       : reach_from<EuclidDistance>(g, f->dist, s1, s2, l);
        break;
      }
      case FormulaKind::kEscape: {
        const std::vector<V> s1 = values(f->left.get(), t);
        const SpatialModel<W>& g = service_.model_at(t);
        auto kind = distance_kind_from_name(f->name);
        for (LocId l = 0; l < n; ++l)
          out[l] = *kind == DistanceKind::kHops
                       ? escape_from<HopsDistance>(g, f->dist, s1, l)
                       : escape_from<EuclidDistance>(g, f->dist, s1, l);
        break;
      }
      default:
        throw std::logic_error("oracle expects core formulas only");
    }
    return out;
  }

  /// Candidate probe times inside the closed window [lo, hi], edges included.
  std::vector<double> window_probes(const Formula* f, double lo, double hi) const {
    std::vector<double> out{lo};
    const auto& c1 = candidates(f->left.get());
    const auto& c2 = candidates(f->right.get());
    for (const auto* set : {&c1, &c2})
      for (double c : *set)
        if (c > lo && c < hi) out.push_back(c);
    out.push_back(hi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Candidate times in [lo, hi] for the left operand's running prefix.
  std::vector<double> between(const Formula* f, double lo, double hi) const {
    std::vector<double> out{lo};
    for (double c : candidates(f->left.get()))
      if (c > lo && c <= hi) out.push_back(c);
    if (hi >= lo) out.push_back(hi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Simple-path reach: choose over all simple paths l = v0..vk and all
  // targets vk, of s2(vk) combined with s1 over v0..v(k-1), filtered by the
  // predicate on the accumulated distance. The zero-length case requires s1
  // at the origin as well.
  template <class DF>
  V reach_from(const SpatialModel<W>& g, const DistancePredicate& pred,
               const std::vector<V>& s1, const std::vector<V>& s2, LocId origin) {
    V acc = D::bottom();
    if (pred.eval(DF::as_real(DF::zero())))
      acc = D::choose(acc, D::combine(s1[origin], s2[origin]));
    dfs_reach<DF>(g, pred, s1, s2, origin, 1u << origin, DF::zero(), D::top(), acc);
    return acc;
  }

  template <class DF>
  void dfs_reach(const SpatialModel<W>& g, const DistancePredicate& pred,
                 const std::vector<V>& s1, const std::vector<V>& s2, LocId u,
                 std::uint32_t visited, typename DF::value_type d, V prefix, V& acc) {
    // prefix covers s1 over the path up to and including u's predecessor;
    // extend with s1(u) before stepping onward.
    V through = D::combine(prefix, s1[u]);
    for (const auto& e : g.out_edges(u)) {
      if (visited & (1u << e.dst)) continue;
      auto nd = DF::accumulate(d, e.weight);
      if (pred.eval(DF::as_real(nd)))
        acc = D::choose(acc, D::combine(s2[e.dst], through));
      dfs_reach<DF>(g, pred, s1, s2, e.dst, visited | (1u << e.dst), nd, through, acc);
    }
  }

  // Simple-path escape: first the model distances from the origin (choose
  // over simple-path accumulations), then choose over simple paths and path
  // prefixes ending at l' with the model distance of (origin, l') passing
  // the predicate, of the combine of s1 over the whole prefix incl. l'.
  template <class DF>
  V escape_from(const SpatialModel<W>& g, const DistancePredicate& pred,
                const std::vector<V>& s1, LocId origin) {
    const int n = g.location_count();
    std::vector<typename DF::value_type> dist(static_cast<std::size_t>(n),
                                              DF::unreachable());
    dfs_dist<DF>(g, origin, 1u << origin, DF::zero(), dist);
    V acc = D::bottom();
    dfs_escape<DF>(g, pred, s1, dist, origin, 1u << origin, D::top(), acc);
    return acc;
  }

  template <class DF>
  void dfs_dist(const SpatialModel<W>& g, LocId u, std::uint32_t visited,
                typename DF::value_type d, std::vector<typename DF::value_type>& best) {
    best[u] = DF::choose(best[u], d);
    for (const auto& e : g.out_edges(u)) {
      if (visited & (1u << e.dst)) continue;
      dfs_dist<DF>(g, e.dst, visited | (1u << e.dst), DF::accumulate(d, e.weight), best);
    }
  }

  template <class DF>
  void dfs_escape(const SpatialModel<W>& g, const DistancePredicate& pred,
                  const std::vector<V>& s1,
                  const std::vector<typename DF::value_type>& dist, LocId u,
                  std::uint32_t visited, V product, V& acc) {
    V full = D::combine(product, s1[u]);
    if (pred.eval(DF::as_real(dist[u]))) acc = D::choose(acc, full);
    for (const auto& e : g.out_edges(u)) {
      if (visited & (1u << e.dst)) continue;
      dfs_escape<DF>(g, pred, s1, dist, e.dst, visited | (1u << e.dst), full, acc);
    }
  }

  const LocationService<W>& service_;
  const Trace& trace_;
  FormulaPtr root_;
  int next_id_ = 0;
  std::unordered_map<const Formula*, NodeInfo> info_;
  std::unordered_map<std::pair<int, double>, std::vector<V>, KeyHash> memo_;
};

}  // namespace detail

/// Reference monitoring result, comparable against the main engine. The
/// formula is expanded to the core fragment first; instances beyond the
/// guard rails are rejected.
template <class D, class W>
MonitorResult<D> oracle_monitor(const LocationService<W>& service, const Trace& trace,
                                const FormulaPtr& formula,
                                OracleLimits limits = OracleLimits{}) {
  using V = typename D::value_type;
  detail::OracleEngine<D, W> engine(service, trace, formula, limits);
  const Formula* root = engine.root();
  const double h = engine.horizon(root);

  std::vector<double> times;
  for (double c : engine.candidates(root))
    if (c <= h) times.push_back(c);
  if (times.empty() || times.front() != 0.0)
    times.insert(times.begin(), 0.0);

  MonitorResult<D> result;
  result.formula_text = to_text(formula);
  result.semantics = D::name;
  result.signal.horizon = h;
  const int n = trace.location_count();
  std::vector<std::vector<V>> frames;
  frames.reserve(times.size());
  for (double t : times) frames.push_back(engine.values(root, t));
  for (int l = 0; l < n; ++l) {
    PiecewiseSignal<V> sig;
    sig.horizon = h;
    sig.times = times;
    for (const auto& frame : frames) sig.values.push_back(frame[static_cast<std::size_t>(l)]);
    result.signal.locations.push_back(sig.normalized());
  }
  return result;
}

}  // namespace strel
