#pragma once

// The monitoring engine: evaluates a formula over a location service and a
// trace, producing one piecewise-constant verdict signal per location.
// Boolean and temporal operators work pointwise per location; reach and
// escape run a triple-set fixpoint per evaluation time, where an evaluation
// time is any breakpoint of the operand signals or of the location service.

#include <chrono>
#include <string>
#include <type_traits>
#include <vector>

#include "strel/logic.hpp"
#include "strel/semiring.hpp"
#include "strel/signal.hpp"
#include "strel/space.hpp"
#include "strel/util.hpp"

namespace strel {

struct MonitorStats {
  int max_fixpoint_iterations = 0;  // changed sweeps, max over all evaluations
  int spatial_evaluations = 0;
  double wall_seconds = 0.0;
};

template <class D>
struct MonitorResult {
  SpatioTemporalSignal<typename D::value_type> signal;
  std::string formula_text;
  std::string semantics;
  MonitorStats stats;
};

// --------------------------------------------------------------------------
// Spatial fixpoints

namespace detail {

template <class D, class DF>
struct Triple {
  LocId target;
  typename D::value_type value;
  typename DF::value_type dist;
};

template <class D, class DF>
bool triple_key_less(const Triple<D, DF>& a, const Triple<D, DF>& b) {
  if (a.target != b.target) return a.target < b.target;
  return a.value < b.value;
}

}  // namespace detail

/// Reach fixpoint. Working sets hold triples (target, value, distance), at
/// most one per (target, value) pair; a merge keeps the preferred distance.
/// Propagation walks every edge l1 -> l2 backwards: triples of l2 extend
/// through l1, combining in s1(l1) and accumulating the edge weight, pruned
/// as soon as the accumulated distance already violates the (upper bound)
/// predicate. The aggregation keeps path triples whose distance satisfies
/// the predicate; the zero-length self case additionally requires s1 at the
/// origin (a route of length zero still starts there).
template <class D, class DF, class W>
SpatialSignal<typename D::value_type> reach_fix(
    const SpatialModel<W>& g, const DistancePredicate& pred,
    const SpatialSignal<typename D::value_type>& s1,
    const SpatialSignal<typename D::value_type>& s2, int* iterations = nullptr) {
  using V = typename D::value_type;
  using B = typename DF::value_type;
  using Tr = detail::Triple<D, DF>;
  const int n = g.location_count();
  auto pred_ok = [&pred](B w) { return pred.eval(DF::as_real(w)); };

  std::vector<std::vector<Tr>> r(static_cast<std::size_t>(n));
  for (LocId l = 0; l < n; ++l)
    if (!(s2[static_cast<std::size_t>(l)] == D::bottom()))
      r[static_cast<std::size_t>(l)].push_back({l, s2[static_cast<std::size_t>(l)], DF::zero()});

  int sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Tr>> next = r;
    for (LocId l1 = 0; l1 < n; ++l1) {
      const V via = s1[static_cast<std::size_t>(l1)];
      if (via == D::bottom()) continue;  // bottom absorbs: nothing to propagate
      auto& bucket = next[static_cast<std::size_t>(l1)];
      for (const auto& e : g.out_edges(l1)) {
        for (const Tr& tr : r[static_cast<std::size_t>(e.dst)]) {
          B w = DF::accumulate(tr.dist, e.weight);
          if (!pred_ok(w)) continue;  // monotone accumulation keeps violating
          V v = D::combine(tr.value, via);
          if (v == D::bottom()) continue;
          Tr cand{tr.target, v, w};
          auto it = std::lower_bound(bucket.begin(), bucket.end(), cand,
                                     detail::triple_key_less<D, DF>);
          if (it != bucket.end() && it->target == cand.target && it->value == cand.value) {
            B merged = DF::choose(it->dist, cand.dist);
            if (!(merged == it->dist)) {
              it->dist = merged;
              changed = true;
            }
          } else {
            bucket.insert(it, cand);
            changed = true;
          }
        }
      }
    }
    if (changed) {
      r = std::move(next);
      ++sweeps;
    }
  }
  if (iterations != nullptr) *iterations = sweeps;

  SpatialSignal<V> out(static_cast<std::size_t>(n), D::bottom());
  const bool zero_ok = pred_ok(DF::zero());
  for (LocId l = 0; l < n; ++l) {
    V acc = zero_ok ? D::combine(s1[static_cast<std::size_t>(l)],
                                 s2[static_cast<std::size_t>(l)])
                    : D::bottom();
    for (const Tr& tr : r[static_cast<std::size_t>(l)])
      if (tr.target != l && pred_ok(tr.dist)) acc = D::choose(acc, tr.value);
    out[static_cast<std::size_t>(l)] = acc;
  }
  return out;
}

/// Escape fixpoint. Exactly one triple per (origin, target), so the working
/// sets live in dense n*n matrices: the value merges by choose over all
/// routes and the distance merges by the distance semiring's choose, which
/// converges to the spatial-model distance between origin and target. No
/// pruning here: routes with poor values still carry distance information,
/// and the (lower bound) predicate is applied only at the end, on the
/// converged distances. An absent triple is the neutral (bottom,
/// unreachable) pair.
template <class D, class DF, class W>
SpatialSignal<typename D::value_type> escape_fix(
    const SpatialModel<W>& g, const DistancePredicate& pred,
    const SpatialSignal<typename D::value_type>& s1, int* iterations = nullptr) {
  using V = typename D::value_type;
  using B = typename DF::value_type;
  const int n = g.location_count();
  const std::size_t nn = static_cast<std::size_t>(n);
  auto at = [nn](std::size_t l, std::size_t tgt) { return l * nn + tgt; };

  std::vector<V> val(nn * nn, D::bottom());
  std::vector<B> dist(nn * nn, DF::unreachable());
  for (std::size_t l = 0; l < nn; ++l) {
    val[at(l, l)] = s1[l];
    dist[at(l, l)] = DF::zero();
  }

  int sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<V> next_val = val;
    std::vector<B> next_dist = dist;
    for (LocId l1 = 0; l1 < n; ++l1) {
      const V via = s1[static_cast<std::size_t>(l1)];
      for (const auto& e : g.out_edges(l1)) {
        const std::size_t src_row = static_cast<std::size_t>(e.dst) * nn;
        const std::size_t dst_row = static_cast<std::size_t>(l1) * nn;
        for (std::size_t tgt = 0; tgt < nn; ++tgt) {
          const B w_in = dist[src_row + tgt];
          if (w_in == DF::unreachable()) continue;  // no route recorded yet
          V mv = D::choose(next_val[dst_row + tgt], D::combine(val[src_row + tgt], via));
          B mw = DF::choose(next_dist[dst_row + tgt], DF::accumulate(w_in, e.weight));
          if (!(mv == next_val[dst_row + tgt]) || !(mw == next_dist[dst_row + tgt])) {
            next_val[dst_row + tgt] = mv;
            next_dist[dst_row + tgt] = mw;
            changed = true;
          }
        }
      }
    }
    if (changed) {
      val = std::move(next_val);
      dist = std::move(next_dist);
      ++sweeps;
    }
  }
  if (iterations != nullptr) *iterations = sweeps;

  SpatialSignal<V> out(nn, D::bottom());
  for (std::size_t l = 0; l < nn; ++l)
    for (std::size_t tgt = 0; tgt < nn; ++tgt)
      if (pred.eval(DF::as_real(dist[at(l, tgt)])))
        out[l] = D::choose(out[l], val[at(l, tgt)]);
  return out;
}

// --------------------------------------------------------------------------
// Temporal sweeps

/// Until: out(t) = choose over t' in [t+a, min(t+b, T)] of
/// s2(t') combine (combine of s1 over the closed interval [t, t']).
/// Exact on breakpoints; the result lives on [0, max(0, T-a)].
template <class D>
PiecewiseSignal<typename D::value_type> monitor_until(
    const PiecewiseSignal<typename D::value_type>& s1,
    const PiecewiseSignal<typename D::value_type>& s2, double a, double b) {
  using V = typename D::value_type;
  if (a < 0 || a > b) throw std::invalid_argument("until needs 0 <= a <= b");
  if (s1.horizon != s2.horizon)
    throw std::invalid_argument("until operands must share a horizon");
  const double T = s1.horizon;
  const double out_h = std::max(0.0, T - a);

  std::vector<double> merged = time_steps_union(s1, s2);
  std::vector<double> crit{0.0, out_h};
  if (T - b > 0.0) crit.push_back(T - b);
  for (double c : merged) {
    for (double shifted : {c - a, c - b, c})
      if (shifted > 0.0 && shifted < out_h) crit.push_back(shifted);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  PiecewiseSignal<V> out;
  out.horizon = out_h;
  for (double t : crit) {
    V acc = D::bottom();
    const double x1 = t + a;
    const double x2 = std::min(t + b, T);
    if (x1 <= x2 && x1 <= T) {
      // combine-prefix of s1 over [t, x1]
      V prefix = D::top();
      for (std::size_t i = s1.segment_index(t); i < s1.times.size() && s1.times[i] <= x1;
           ++i)
        prefix = D::combine(prefix, s1.values[i]);
      // walk candidate times t' = x1, breakpoints inside, x2
      auto lo_it = std::upper_bound(merged.begin(), merged.end(), x1);
      std::vector<double> pts{x1};
      for (auto it = lo_it; it != merged.end() && *it <= x2; ++it) pts.push_back(*it);
      if (pts.back() != x2) pts.push_back(x2);
      for (double tp : pts) {
        prefix = D::combine(prefix, s1.value_at(tp));
        acc = D::choose(acc, D::combine(s2.value_at(tp), prefix));
      }
    }
    if (out.times.empty() || !(out.values.back() == acc)) {
      out.times.push_back(t);
      out.values.push_back(acc);
    }
  }
  if (out.times.empty()) {
    out.times.push_back(0.0);
    out.values.push_back(D::bottom());
  }
  return out;
}

/// Since: the time mirror of until. out(t) = choose over
/// t' in [max(0, t-b), t-a] of s2(t') combine (combine of s1 over [t', t]);
/// an empty window (t < a) yields bottom. The horizon is unchanged.
template <class D>
PiecewiseSignal<typename D::value_type> monitor_since(
    const PiecewiseSignal<typename D::value_type>& s1,
    const PiecewiseSignal<typename D::value_type>& s2, double a, double b) {
  using V = typename D::value_type;
  if (a < 0 || a > b) throw std::invalid_argument("since needs 0 <= a <= b");
  if (s1.horizon != s2.horizon)
    throw std::invalid_argument("since operands must share a horizon");
  const double T = s1.horizon;

  std::vector<double> merged = time_steps_union(s1, s2);
  std::vector<double> crit{0.0, T};
  if (a > 0.0 && a < T) crit.push_back(a);
  for (double c : merged) {
    for (double shifted : {c + a, c + b, c})
      if (shifted > 0.0 && shifted < T) crit.push_back(shifted);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  PiecewiseSignal<V> out;
  out.horizon = T;
  for (double t : crit) {
    V acc = D::bottom();
    const double hi = t - a;
    if (hi >= 0.0) {
      const double lo = std::max(0.0, t - b);
      std::vector<double> pts{lo};
      auto lo_it = std::upper_bound(merged.begin(), merged.end(), lo);
      for (auto it = lo_it; it != merged.end() && *it <= hi; ++it) pts.push_back(*it);
      if (pts.back() != hi) pts.push_back(hi);
      // combine-suffix of s1 over [hi, t]
      V suffix = D::top();
      for (std::size_t i = s1.segment_index(hi); i < s1.times.size() && s1.times[i] <= t;
           ++i)
        suffix = D::combine(suffix, s1.values[i]);
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        suffix = D::combine(suffix, s1.value_at(*it));
        acc = D::choose(acc, D::combine(s2.value_at(*it), suffix));
      }
    }
    if (out.times.empty() || !(out.values.back() == acc)) {
      out.times.push_back(t);
      out.values.push_back(acc);
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Engine

namespace detail {

template <class D>
typename D::value_type embed_bool(bool b) {
  return b ? D::top() : D::bottom();
}

/// Atomic interpretation of a comparison. Boolean semantics evaluates the
/// comparison; quantitative semantics returns the signed margin, with strict
/// and non-strict forms numerically identical.
template <class D>
typename D::value_type interpret_cmp(CmpOp op, double value, double threshold) {
  if constexpr (std::is_same_v<typename D::value_type, bool>) {
    switch (op) {
      case CmpOp::kLt: return value < threshold;
      case CmpOp::kLe: return value <= threshold;
      case CmpOp::kGt: return value > threshold;
      case CmpOp::kGe: return value >= threshold;
    }
    return false;
  } else {
    switch (op) {
      case CmpOp::kLt:
      case CmpOp::kLe:
        return threshold - value;
      case CmpOp::kGt:
      case CmpOp::kGe:
        return value - threshold;
    }
    return D::bottom();
  }
}

template <class V>
std::vector<double> all_breakpoints(const SpatioTemporalSignal<V>& s) {
  std::vector<double> out;
  for (const auto& sig : s.locations)
    out.insert(out.end(), sig.times.begin(), sig.times.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class D, class W>
class MonitorEngine {
 public:
  using V = typename D::value_type;
  using Sig = PiecewiseSignal<V>;
  using Sts = SpatioTemporalSignal<V>;

  MonitorEngine(const LocationService<W>& service, const Trace& trace,
                MonitorStats* stats)
      : service_(service), trace_(trace), stats_(stats) {}

  Sts eval(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::kTrue:
        return constant(D::top());
      case FormulaKind::kAtomic: {
        int ch = trace_.channel_index(f.name);
        return project([&](const std::vector<double>& row) {
          return embed_bool<D>(row[static_cast<std::size_t>(ch)] != 0.0);
        });
      }
      case FormulaKind::kCmp: {
        int ch = trace_.channel_index(f.name);
        return project([&](const std::vector<double>& row) {
          return interpret_cmp<D>(f.cmp, row[static_cast<std::size_t>(ch)], f.threshold);
        });
      }
      case FormulaKind::kAt: {
        Sts out = constant(D::bottom());
        out.locations[static_cast<std::size_t>(f.location)] =
            Sig::constant(D::top(), trace_.horizon);
        return out;
      }
      case FormulaKind::kNot:
        return map1(eval(*f.left), [](V v) { return D::negate(v); });
      case FormulaKind::kAnd:
        return map2(eval(*f.left), eval(*f.right),
                    [](V a, V b) { return D::combine(a, b); });
      case FormulaKind::kOr:
        return map2(eval(*f.left), eval(*f.right),
                    [](V a, V b) { return D::choose(a, b); });
      case FormulaKind::kUntil:
        return temporal2(f, [&](const Sig& a, const Sig& b) {
          return monitor_until<D>(a, b, f.interval.lo, f.interval.hi);
        });
      case FormulaKind::kSince:
        return temporal2(f, [&](const Sig& a, const Sig& b) {
          return monitor_since<D>(a, b, f.interval.lo, f.interval.hi);
        });
      case FormulaKind::kEventually:
        return temporal1(f, [&](const Sig& s) {
          return window_choose<D>(s, f.interval.lo, f.interval.hi);
        });
      case FormulaKind::kGlobally:
        return temporal1(f, [&](const Sig& s) {
          return window_combine<D>(s, f.interval.lo, f.interval.hi);
        });
      case FormulaKind::kOnce:
        return temporal1(f, [&](const Sig& s) {
          return monitor_since<D>(Sig::constant(D::top(), s.horizon), s,
                                  f.interval.lo, f.interval.hi);
        });
      case FormulaKind::kHistorically:
        return temporal1(f, [&](const Sig& s) {
          auto neg = pointwise_unary([](V v) { return D::negate(v); }, s);
          auto once = monitor_since<D>(Sig::constant(D::top(), s.horizon), neg,
                                       f.interval.lo, f.interval.hi);
          return pointwise_unary([](V v) { return D::negate(v); }, once);
        });
      case FormulaKind::kReach:
      case FormulaKind::kSurround:
        return spatial2(f, eval(*f.left), eval(*f.right));
      case FormulaKind::kEscape:
      case FormulaKind::kSomewhere:
      case FormulaKind::kEverywhere:
        return spatial1(f, eval(*f.left));
    }
    throw std::logic_error("unhandled formula kind");
  }

 private:
  Sts constant(V v) const {
    Sts out;
    out.horizon = trace_.horizon;
    out.locations.assign(static_cast<std::size_t>(trace_.location_count()),
                         Sig::constant(v, trace_.horizon));
    return out;
  }

  template <class Fn>
  Sts project(Fn fn) const {
    Sts out;
    out.horizon = trace_.horizon;
    out.locations.resize(trace_.locations.size());
    for (std::size_t l = 0; l < trace_.locations.size(); ++l) {
      const auto& src = trace_.locations[l];
      Sig sig;
      sig.horizon = trace_.horizon;
      sig.times = src.times;
      sig.values.reserve(src.values.size());
      for (const auto& row : src.values) sig.values.push_back(fn(row));
      out.locations[l] = sig.normalized();
    }
    return out;
  }

  template <class Fn>
  Sts map1(Sts a, Fn fn) const {
    Sts out;
    out.horizon = a.horizon;
    out.locations.resize(a.locations.size());
    for (std::size_t l = 0; l < a.locations.size(); ++l)
      out.locations[l] = pointwise_unary(fn, a.locations[l]);
    return out;
  }

  template <class Fn>
  Sts map2(Sts a, Sts b, Fn fn) const {
    const double h = std::min(a.horizon, b.horizon);
    Sts out;
    out.horizon = h;
    out.locations.resize(a.locations.size());
    for (std::size_t l = 0; l < a.locations.size(); ++l)
      out.locations[l] = pointwise(fn, a.locations[l].clipped(h), b.locations[l].clipped(h));
    return out;
  }

  template <class Fn>
  Sts temporal1(const Formula& f, Fn op) {
    Sts sub = eval(*f.left);
    Sts out;
    out.locations.resize(sub.locations.size());
    parallel_for(sub.locations.size(),
                 [&](std::size_t l) { out.locations[l] = op(sub.locations[l]); });
    out.horizon = out.locations.front().horizon;
    return out;
  }

  template <class Fn>
  Sts temporal2(const Formula& f, Fn op) {
    Sts a = eval(*f.left);
    Sts b = eval(*f.right);
    const double h = std::min(a.horizon, b.horizon);
    Sts out;
    out.locations.resize(a.locations.size());
    parallel_for(a.locations.size(), [&](std::size_t l) {
      out.locations[l] = op(a.locations[l].clipped(h), b.locations[l].clipped(h));
    });
    out.horizon = out.locations.front().horizon;
    return out;
  }

  /// Evaluates a spatial operator at every breakpoint of its operands and of
  /// the location service; both are constant in between, so the result is
  /// exact. Evaluation times are independent and run in parallel.
  Sts spatial_eval(const Formula& f, const Sts& m1, const Sts& m2, bool binary) {
    const double h = binary ? std::min(m1.horizon, m2.horizon) : m1.horizon;
    std::vector<double> times = all_breakpoints(m1);
    if (binary) {
      auto more = all_breakpoints(m2);
      times.insert(times.end(), more.begin(), more.end());
    }
    for (double bp : service_.breakpoints)
      if (bp >= 0.0 && bp <= h) times.push_back(bp);
    times.push_back(0.0);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    while (!times.empty() && times.back() > h) times.pop_back();

    const int n = trace_.location_count();
    std::vector<SpatialSignal<V>> frames(times.size());
    std::vector<int> iters(times.size(), 0);
    parallel_for(times.size(), [&](std::size_t i) {
      const double t = times[i];
      const SpatialModel<W>& g = service_.model_at(t);
      SpatialSignal<V> v1 = m1.at(t);
      frames[i] = dispatch_spatial(f, g, v1, binary ? m2.at(t) : SpatialSignal<V>{},
                                   &iters[i]);
    });
    if (stats_ != nullptr) {
      stats_->spatial_evaluations += static_cast<int>(times.size());
      for (int it : iters)
        stats_->max_fixpoint_iterations = std::max(stats_->max_fixpoint_iterations, it);
    }

    Sts out;
    out.horizon = h;
    out.locations.resize(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      Sig sig;
      sig.horizon = h;
      sig.times = times;
      sig.values.reserve(times.size());
      for (const auto& frame : frames) sig.values.push_back(frame[static_cast<std::size_t>(l)]);
      out.locations[static_cast<std::size_t>(l)] = sig.normalized();
    }
    return out;
  }

  SpatialSignal<V> dispatch_spatial(const Formula& f, const SpatialModel<W>& g,
                                    const SpatialSignal<V>& v1,
                                    const SpatialSignal<V>& v2, int* iters) {
    auto kind = distance_kind_from_name(f.name);
    if (!kind) throw ValidationError("unknown distance function '" + f.name + "'");
    if (*kind == DistanceKind::kHops)
      return run_spatial<HopsDistance>(f, g, v1, v2, iters);
    return run_spatial<EuclidDistance>(f, g, v1, v2, iters);
  }

  template <class DF>
  SpatialSignal<V> run_spatial(const Formula& f, const SpatialModel<W>& g,
                               const SpatialSignal<V>& v1, const SpatialSignal<V>& v2,
                               int* iters) {
    const std::size_t n = v1.size();
    switch (f.kind) {
      case FormulaKind::kReach:
        return reach_fix<D, DF>(g, f.dist, v1, v2, iters);
      case FormulaKind::kEscape:
        return escape_fix<D, DF>(g, f.dist, v1, iters);
      case FormulaKind::kSomewhere: {
        SpatialSignal<V> top(n, D::top());
        return reach_fix<D, DF>(g, f.dist, top, v1, iters);
      }
      case FormulaKind::kEverywhere: {
        SpatialSignal<V> top(n, D::top());
        SpatialSignal<V> neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = D::negate(v1[i]);
        SpatialSignal<V> r = reach_fix<D, DF>(g, f.dist, top, neg, iters);
        for (std::size_t i = 0; i < n; ++i) r[i] = D::negate(r[i]);
        return r;
      }
      case FormulaKind::kSurround: {
        // v1 and not(v1 reach[d] not(v1 or v2)) and not(escape[not d] v1)
        SpatialSignal<V> blocker(n);
        for (std::size_t i = 0; i < n; ++i)
          blocker[i] = D::negate(D::choose(v1[i], v2[i]));
        int it1 = 0, it2 = 0;
        SpatialSignal<V> leak = reach_fix<D, DF>(g, f.dist, v1, blocker, &it1);
        SpatialSignal<V> esc =
            escape_fix<D, DF>(g, f.dist.complement(), v1, &it2);
        if (iters != nullptr) *iters = std::max(it1, it2);
        SpatialSignal<V> out(n);
        for (std::size_t i = 0; i < n; ++i)
          out[i] = D::combine(v1[i],
                              D::combine(D::negate(leak[i]), D::negate(esc[i])));
        return out;
      }
      default:
        throw std::logic_error("not a spatial operator");
    }
  }

  Sts spatial1(const Formula& f, Sts sub) {
    return spatial_eval(f, sub, Sts{}, false);
  }

  Sts spatial2(const Formula& f, Sts l, Sts r) { return spatial_eval(f, l, r, true); }

  const LocationService<W>& service_;
  const Trace& trace_;
  MonitorStats* stats_;
};

}  // namespace detail

/// Offline monitor: evaluates the formula pointwise at every location and
/// every time in [0, adjusted horizon], where nested until/eventually
/// windows shrink the horizon by their lower offsets.
template <class D, class W>
MonitorResult<D> monitor(const LocationService<W>& service, const Trace& trace,
                         const FormulaPtr& formula, const InterpretationContext& ctx) {
  if (trace.location_count() == 0) throw ValidationError("empty trace");
  if (trace.location_count() != service.location_count())
    throw ValidationError("trace and location service universes differ");
  validate(*formula, ctx);

  auto start = std::chrono::steady_clock::now();
  MonitorResult<D> result;
  detail::MonitorEngine<D, W> engine(service, trace, &result.stats);
  result.signal = engine.eval(*formula);
  result.formula_text = to_text(formula);
  result.semantics = D::name;
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <class D, class W>
MonitorResult<D> monitor(const LocationService<W>& service, const Trace& trace,
                         const FormulaPtr& formula) {
  return monitor<D, W>(service, trace, formula,
                       InterpretationContext{trace.schema()});
}

}  // namespace strel
