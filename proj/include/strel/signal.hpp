#pragma once

// Piecewise-constant temporal signals and their algebra. A signal is a
// sorted breakpoint list (t_i, d_i) over [start, horizon]; the value on
// [t_i, t_{i+1}) is d_i, the last value extends to the horizon, and the
// signal is bottom before its first breakpoint. All operations here are
// exact: breakpoints are never sampled, only merged and shifted.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <vector>

#include "strel/semiring.hpp"
#include "strel/util.hpp"

namespace strel {

template <class V>
struct PiecewiseSignal {
  std::vector<double> times;   // strictly increasing, non-empty once built
  std::vector<V> values;       // same length as times
  double horizon = 0.0;

  PiecewiseSignal() = default;
  PiecewiseSignal(std::vector<double> t, std::vector<V> v, double T)
      : times(std::move(t)), values(std::move(v)), horizon(T) {
    if (times.size() != values.size() || times.empty())
      throw std::invalid_argument("signal needs matching, non-empty breakpoints");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (!(times[i - 1] < times[i]))
        throw std::invalid_argument("signal breakpoints must be strictly increasing");
    if (times.back() > horizon)
      throw std::invalid_argument("signal breakpoint beyond horizon");
  }

  static PiecewiseSignal constant(V v, double T) {
    return PiecewiseSignal({0.0}, {std::move(v)}, T);
  }

  double start() const { return times.front(); }
  std::size_t segment_count() const { return times.size(); }

  /// Index of the segment whose left edge is the greatest breakpoint <= t.
  std::size_t segment_index(double t) const {
    assert(t >= times.front());
    auto it = std::upper_bound(times.begin(), times.end(), t);
    return static_cast<std::size_t>(it - times.begin()) - 1;
  }

  /// Piecewise lookup; t must lie in [start, horizon].
  V value_at(double t) const {
    if (t < times.front()) throw std::out_of_range("time before signal start");
    return values[segment_index(t)];
  }

  /// Lookup with the bottom-before-start rule.
  V value_at_or(double t, V before_start) const {
    if (t < times.front()) return before_start;
    return values[segment_index(t)];
  }

  /// Minimal form: no two consecutive equal values.
  PiecewiseSignal normalized() const {
    PiecewiseSignal out;
    out.horizon = horizon;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (!out.values.empty() && out.values.back() == values[i]) continue;
      out.times.push_back(times[i]);
      out.values.push_back(values[i]);
    }
    return out;
  }

  /// Same values with redundant breakpoints inserted at the given times
  /// (times outside [start, horizon] are ignored).
  PiecewiseSignal refined(const std::vector<double>& extra) const {
    PiecewiseSignal out = *this;
    for (double t : extra) {
      if (t < times.front() || t > horizon) continue;
      auto it = std::lower_bound(out.times.begin(), out.times.end(), t);
      if (it != out.times.end() && *it == t) continue;
      std::size_t pos = static_cast<std::size_t>(it - out.times.begin());
      out.times.insert(it, t);
      out.values.insert(out.values.begin() + pos, out.values[pos - 1]);
    }
    return out;
  }

  /// Restriction to [start, h]; h must be positive and within the horizon.
  PiecewiseSignal clipped(double h) const {
    if (h >= horizon) return *this;
    PiecewiseSignal out;
    out.horizon = h;
    for (std::size_t i = 0; i < times.size() && times[i] <= h; ++i) {
      out.times.push_back(times[i]);
      out.values.push_back(values[i]);
    }
    if (out.times.empty())
      throw std::invalid_argument("clip horizon precedes signal start");
    return out;
  }
};

/// Sorted union of the breakpoint sets of two signals.
template <class V>
std::vector<double> time_steps_union(const PiecewiseSignal<V>& a,
                                     const PiecewiseSignal<V>& b) {
  std::vector<double> out;
  out.reserve(a.times.size() + b.times.size());
  std::merge(a.times.begin(), a.times.end(), b.times.begin(), b.times.end(),
             std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class V, class Op>
PiecewiseSignal<V> pointwise_unary(Op op, const PiecewiseSignal<V>& s) {
  PiecewiseSignal<V> out;
  out.horizon = s.horizon;
  out.times = s.times;
  out.values.reserve(s.values.size());
  for (const V& v : s.values) out.values.push_back(op(v));
  return out.normalized();
}

template <class V, class Op>
PiecewiseSignal<V> pointwise(Op op, const PiecewiseSignal<V>& a,
                             const PiecewiseSignal<V>& b) {
  if (a.horizon != b.horizon)
    throw std::invalid_argument("pointwise: signal horizons differ");
  std::vector<double> ts = time_steps_union(a, b);
  PiecewiseSignal<V> out;
  out.horizon = a.horizon;
  out.times = ts;
  out.values.reserve(ts.size());
  std::size_t ia = 0, ib = 0;
  for (double t : ts) {
    while (ia + 1 < a.times.size() && a.times[ia + 1] <= t) ++ia;
    while (ib + 1 < b.times.size() && b.times[ib + 1] <= t) ++ib;
    if (t < a.times.front() || t < b.times.front())
      throw std::invalid_argument("pointwise: signals start at different times");
    out.values.push_back(op(a.values[ia], b.values[ib]));
  }
  return out.normalized();
}

namespace detail {

// Window fold over [t+lo_off, min(t+hi_off, T)] for every t in [0, T-lo_off],
// computed on breakpoints with a monotone deque (needs a total derived
// order). Fold picks either choose or combine of the domain.
template <class D, bool kChoose>
PiecewiseSignal<typename D::value_type> window_fold(
    const PiecewiseSignal<typename D::value_type>& s, double lo_off,
    double hi_off) {
  using V = typename D::value_type;
  static_assert(D::is_total, "window fold needs a totally ordered domain");
  if (lo_off < 0 || lo_off > hi_off)
    throw std::invalid_argument("window bounds must satisfy 0 <= a <= b");
  if (s.start() != 0.0)
    throw std::invalid_argument("window fold expects signals starting at 0");
  const double T = s.horizon;
  const double out_horizon = std::max(0.0, T - lo_off);

  // Output value changes only where a window edge crosses a breakpoint or
  // the right edge saturates at the horizon.
  std::vector<double> crit{0.0, out_horizon};
  if (T - hi_off > 0.0) crit.push_back(T - hi_off);
  for (double bp : s.times) {
    double c1 = bp - lo_off;
    double c2 = bp - hi_off;
    if (c1 > 0.0 && c1 < out_horizon) crit.push_back(c1);
    if (c2 > 0.0 && c2 < out_horizon) crit.push_back(c2);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  // "a absorbs b": keeping a makes b irrelevant for this fold.
  auto absorbs = [](const V& a, const V& b) {
    return kChoose ? D::preceq(b, a) : D::preceq(a, b);
  };
  const std::size_t n = s.times.size();
  std::deque<std::size_t> win;  // segment indices, best at front
  std::size_t lo = 0, next = 0; // segments [lo, next) have been offered

  PiecewiseSignal<V> out;
  out.horizon = out_horizon;
  for (double t : crit) {
    const double x1 = t + lo_off;
    const double x2 = std::min(t + hi_off, T);
    V value;
    if (x1 > T) {
      value = kChoose ? D::bottom() : D::top();  // empty window: fold identity
    } else {
      const std::size_t new_lo = s.segment_index(x1);
      const std::size_t new_hi = s.segment_index(x2);
      while (next <= new_hi && next < n) {
        while (!win.empty() && absorbs(s.values[next], s.values[win.back()]))
          win.pop_back();
        win.push_back(next);
        ++next;
      }
      lo = new_lo;
      while (!win.empty() && win.front() < lo) win.pop_front();
      assert(!win.empty());
      value = s.values[win.front()];
    }
    if (out.times.empty() || out.values.back() != value) {
      out.times.push_back(t);
      out.values.push_back(value);
    }
  }
  if (out.times.empty()) {
    out.times.push_back(0.0);
    out.values.push_back(kChoose ? D::bottom() : D::top());
  }
  return out;
}

}  // namespace detail

/// choose-fold of s over the sliding window [t+a, min(t+b, T)].
template <class D>
PiecewiseSignal<typename D::value_type> window_choose(
    const PiecewiseSignal<typename D::value_type>& s, double a, double b) {
  return detail::window_fold<D, true>(s, a, b);
}

/// combine-fold of s over the sliding window [t+a, min(t+b, T)].
template <class D>
PiecewiseSignal<typename D::value_type> window_combine(
    const PiecewiseSignal<typename D::value_type>& s, double a, double b) {
  return detail::window_fold<D, false>(s, a, b);
}

// --------------------------------------------------------------------------

/// Per-location values at one instant.
template <class V>
using SpatialSignal = std::vector<V>;

/// Per-location piecewise-constant signals over a shared horizon.
template <class V>
struct SpatioTemporalSignal {
  std::vector<PiecewiseSignal<V>> locations;
  double horizon = 0.0;

  int location_count() const { return static_cast<int>(locations.size()); }

  SpatialSignal<V> at(double t) const {
    SpatialSignal<V> s;
    s.reserve(locations.size());
    for (const auto& sig : locations) s.push_back(sig.value_at(t));
    return s;
  }
};

// --------------------------------------------------------------------------

enum class ChannelKind { kBool, kReal };

struct TraceSchema {
  std::vector<std::string> channels;
  std::vector<ChannelKind> kinds;
  int location_count = 0;
  double horizon = 0.0;

  int channel_index(const std::string& name) const {
    for (std::size_t i = 0; i < channels.size(); ++i)
      if (channels[i] == name) return static_cast<int>(i);
    return -1;
  }
};

/// Observation trace: one vector-valued piecewise signal per location, with
/// shared named channels. Boolean channels store 0/1.
struct Trace {
  std::vector<std::string> channels;
  std::vector<ChannelKind> kinds;
  double horizon = 0.0;
  std::vector<PiecewiseSignal<std::vector<double>>> locations;

  int location_count() const { return static_cast<int>(locations.size()); }

  TraceSchema schema() const {
    return TraceSchema{channels, kinds, location_count(), horizon};
  }

  int channel_index(const std::string& name) const {
    return schema().channel_index(name);
  }
};

}  // namespace strel
