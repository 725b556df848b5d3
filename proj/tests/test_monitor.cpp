#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strel/monitor.hpp"
#include "strel/oracle.hpp"
#include "strel/scenarios.hpp"
#include "testutil.hpp"

using namespace strel;

namespace {

// 1-based node label -> location id, matching the fixture's drawing.
LocId loc(int label) { return static_cast<LocId>(label - 1); }

template <class D>
typename D::value_type grid_until(const PiecewiseSignal<typename D::value_type>& s1,
                                  const PiecewiseSignal<typename D::value_type>& s2,
                                  double a, double b, double t) {
  using V = typename D::value_type;
  const double T = s1.horizon;
  const double x1 = t + a;
  const double x2 = std::min(t + b, T);
  V acc = D::bottom();
  if (x1 > T || x1 > x2) return acc;
  const double step = 0.0078125;
  V prefix = D::top();
  for (int k = 0; t + k * step < x1; ++k) prefix = D::combine(prefix, s1.value_at(t + k * step));
  prefix = D::combine(prefix, s1.value_at(x1));
  for (int k = 0;; ++k) {
    double tp = x1 + k * step;
    bool last = tp >= x2;
    if (last) tp = x2;
    prefix = D::combine(prefix, s1.value_at(tp));
    acc = D::choose(acc, D::combine(s2.value_at(tp), prefix));
    if (last) break;
  }
  return acc;
}

template <class D>
typename D::value_type grid_since(const PiecewiseSignal<typename D::value_type>& s1,
                                  const PiecewiseSignal<typename D::value_type>& s2,
                                  double a, double b, double t) {
  using V = typename D::value_type;
  V acc = D::bottom();
  const double hi = t - a;
  if (hi < 0.0) return acc;
  const double lo = std::max(0.0, t - b);
  const double step = 0.0078125;
  for (int k = 0;; ++k) {
    double tp = lo + k * step;
    bool last = tp >= hi;
    if (last) tp = hi;
    V suffix = D::top();
    for (int j = 0;; ++j) {
      double u = tp + j * step;
      bool ulast = u >= t;
      if (ulast) u = t;
      suffix = D::combine(suffix, s1.value_at(u));
      if (ulast) break;
    }
    acc = D::choose(acc, D::combine(s2.value_at(tp), suffix));
    if (last) break;
  }
  return acc;
}

PiecewiseSignal<bool> rand_bool_sig(std::mt19937_64& rng, double T, int max_bp) {
  std::vector<double> ts{0.0};
  for (int k = 1; k < static_cast<int>(T / 0.5); ++k)
    if (rng() % 3 == 0 && static_cast<int>(ts.size()) < max_bp) ts.push_back(k * 0.5);
  std::vector<bool> vs;
  for (std::size_t i = 0; i < ts.size(); ++i) vs.push_back(rng() % 2 == 0);
  return PiecewiseSignal<bool>(ts, vs, T);
}

PiecewiseSignal<double> rand_real_sig(std::mt19937_64& rng, double T, int max_bp) {
  auto b = rand_bool_sig(rng, T, max_bp);
  std::uniform_real_distribution<double> val(-8.0, 8.0);
  std::vector<double> vs;
  for (std::size_t i = 0; i < b.times.size(); ++i) vs.push_back(0.25 * std::round(val(rng) * 4));
  return PiecewiseSignal<double>(b.times, vs, T);
}

template <class V>
void check_signals_equal(const SpatioTemporalSignal<V>& a,
                         const SpatioTemporalSignal<V>& b, double tol = 0.0) {
  REQUIRE(a.locations.size() == b.locations.size());
  CHECK(a.horizon == doctest::Approx(b.horizon).epsilon(1e-12));
  double h = std::min(a.horizon, b.horizon);
  for (std::size_t l = 0; l < a.locations.size(); ++l) {
    std::vector<double> probes = time_steps_union(a.locations[l], b.locations[l]);
    std::vector<double> extra;
    for (std::size_t i = 0; i + 1 < probes.size(); ++i)
      extra.push_back((probes[i] + probes[i + 1]) / 2);
    probes.insert(probes.end(), extra.begin(), extra.end());
    probes.push_back(h);
    for (double t : probes) {
      if (t > h) continue;
      V va = a.locations[l].value_at(t);
      V vb = b.locations[l].value_at(t);
      CAPTURE(l);
      CAPTURE(t);
      if constexpr (std::is_same_v<V, bool>) {
        CHECK(va == vb);
      } else {
        if (std::isinf(va) || std::isinf(vb)) {
          CHECK(va == vb);
        } else {
          CHECK(va == doctest::Approx(vb).epsilon(tol == 0.0 ? 1e-12 : tol));
        }
      }
    }
  }
}

}  // namespace

// --------------------------------------------------------------------------
// Stock network verdicts

TEST_CASE("zigbee: reach verdict at l6 true, l8 false") {
  auto fx = zigbee_fixture();
  auto f = parse_formula("end_dev reach(hops)[<= 1] router");
  auto res = monitor<BooleanDomain>(fx.service, fx.trace, f);
  CHECK(res.signal.locations[loc(6)].value_at(0.0) == true);
  CHECK(res.signal.locations[loc(8)].value_at(0.0) == false);

  // Full vector: exactly the end devices with a router one hop away.
  std::vector<int> expected_true{1, 2, 4, 6, 12, 13, 14, 15};
  for (int label = 1; label <= 16; ++label) {
    bool want = std::find(expected_true.begin(), expected_true.end(), label) !=
                expected_true.end();
    CAPTURE(label);
    CHECK(res.signal.locations[loc(label)].value_at(0.0) == want);
  }
}

TEST_CASE("zigbee: escape verdict at l10") {
  auto fx = zigbee_fixture();
  auto res = monitor<BooleanDomain>(fx.service, fx.trace,
                                    parse_formula("escape(hops)[>= 2] !end_dev"));
  CHECK(res.signal.locations[loc(10)].value_at(0.0) == true);
}

TEST_CASE("zigbee: somewhere coordinator within four hops, everywhere router fails") {
  auto fx = zigbee_fixture();
  auto some = monitor<BooleanDomain>(fx.service, fx.trace,
                                     parse_formula("somewhere(hops)[<= 4] coord"));
  auto every = monitor<BooleanDomain>(fx.service, fx.trace,
                                      parse_formula("everywhere(hops)[<= 2] router"));
  for (int label = 1; label <= 16; ++label) {
    CAPTURE(label);
    CHECK(some.signal.locations[loc(label)].value_at(0.0) == true);
    CHECK(every.signal.locations[loc(label)].value_at(0.0) == false);
  }
}

TEST_CASE("zigbee: surround verdict at l10") {
  auto fx = zigbee_fixture();
  auto res = monitor<BooleanDomain>(
      fx.service, fx.trace,
      parse_formula("(coord | router) surround(hops)[<= 3] end_dev"));
  CHECK(res.signal.locations[loc(10)].value_at(0.0) == true);
}

TEST_CASE("monitor: constant true formula") {
  auto fx = zigbee_fixture();
  auto res = monitor<BooleanDomain>(fx.service, fx.trace, f_true());
  for (const auto& sig : res.signal.locations) {
    CHECK(sig.values == std::vector<bool>{true});
  }
}

// --------------------------------------------------------------------------
// Temporal operators against the dense-grid reference

TEST_CASE("until/since agree with the dense-grid reference") {
  std::mt19937_64 rng(301);
  for (int iter = 0; iter < 60; ++iter) {
    double a = 0.25 * static_cast<double>(rng() % 8);
    double b = a + 0.25 * static_cast<double>(rng() % 8);

    auto s1 = rand_bool_sig(rng, 8.0, 6);
    auto s2 = rand_bool_sig(rng, 8.0, 6);
    auto u = monitor_until<BooleanDomain>(s1, s2, a, b);
    auto s = monitor_since<BooleanDomain>(s1, s2, a, b);
    for (double t = 0.0; t <= u.horizon; t += 0.125)
      CHECK(u.value_at(t) == (grid_until<BooleanDomain>(s1, s2, a, b, t)));
    for (double t = 0.0; t <= 8.0; t += 0.125)
      CHECK(s.value_at(t) == (grid_since<BooleanDomain>(s1, s2, a, b, t)));

    auto r1 = rand_real_sig(rng, 8.0, 6);
    auto r2 = rand_real_sig(rng, 8.0, 6);
    auto ur = monitor_until<MaxMinDomain>(r1, r2, a, b);
    for (double t = 0.0; t <= ur.horizon; t += 0.125)
      CHECK(ur.value_at(t) == (grid_until<MaxMinDomain>(r1, r2, a, b, t)));
  }
}

TEST_CASE("until with constant-true left operand reduces to window_choose") {
  std::mt19937_64 rng(307);
  for (int iter = 0; iter < 40; ++iter) {
    double a = 0.25 * static_cast<double>(rng() % 6);
    double b = a + 0.25 * static_cast<double>(rng() % 6);
    auto s = rand_real_sig(rng, 8.0, 8);
    auto top = PiecewiseSignal<double>::constant(MaxMinDomain::top(), 8.0);
    auto u = monitor_until<MaxMinDomain>(top, s, a, b);
    auto w = window_choose<MaxMinDomain>(s, a, b);
    CHECK(u.horizon == w.horizon);
    for (double t = 0.0; t <= u.horizon; t += 0.125) CHECK(u.value_at(t) == w.value_at(t));
  }
}

TEST_CASE("until with constant-bottom right operand is bottom") {
  std::mt19937_64 rng(311);
  auto s1 = rand_bool_sig(rng, 8.0, 6);
  auto bot = PiecewiseSignal<bool>::constant(false, 8.0);
  auto u = monitor_until<BooleanDomain>(s1, bot, 0.5, 2.0);
  CHECK(u.values == std::vector<bool>{false});
}

TEST_CASE("until rejects bad windows and mismatched horizons") {
  auto s = PiecewiseSignal<bool>::constant(true, 5.0);
  auto s9 = PiecewiseSignal<bool>::constant(true, 9.0);
  CHECK_THROWS_AS(monitor_until<BooleanDomain>(s, s, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(monitor_until<BooleanDomain>(s, s9, 0.0, 1.0), std::invalid_argument);
}

// --------------------------------------------------------------------------
// Spatial fixpoints, small hand-checked cases

TEST_CASE("reach_fix on an edgeless model: staying put needs both operands") {
  SpatialModel<double> g(3, {});
  DistancePredicate le1{CmpOp::kLe, 1.0};
  SpatialSignal<bool> s1{true, false, true};
  SpatialSignal<bool> s2{true, true, false};
  auto out = reach_fix<BooleanDomain, HopsDistance>(g, le1, s1, s2);
  CHECK(out == SpatialSignal<bool>{true, false, false});

  DistancePredicate lt0{CmpOp::kLt, 0.0};
  auto none = reach_fix<BooleanDomain, HopsDistance>(g, lt0, s1, s2);
  CHECK(none == SpatialSignal<bool>{false, false, false});
}

TEST_CASE("reach_fix with unsatisfiable target is bottom everywhere") {
  auto fx = zigbee_fixture();
  const auto& g = fx.service.models.front();
  SpatialSignal<bool> s1(16, true);
  SpatialSignal<bool> s2(16, false);
  auto out =
      reach_fix<BooleanDomain, HopsDistance>(g, DistancePredicate{CmpOp::kLe, 5.0}, s1, s2);
  CHECK(out == SpatialSignal<bool>(16, false));
}

TEST_CASE("escape_fix: top signal with >= 0 bound is top everywhere") {
  auto fx = zigbee_fixture();
  const auto& g = fx.service.models.front();
  SpatialSignal<bool> s1(16, true);
  auto out =
      escape_fix<BooleanDomain, HopsDistance>(g, DistancePredicate{CmpOp::kGe, 0.0}, s1);
  CHECK(out == SpatialSignal<bool>(16, true));
}

TEST_CASE("escape_fix distances converge to model distances") {
  auto fx = zigbee_fixture();
  const auto& g = fx.service.models.front();
  // escape(hops)[>= k] true is satisfied at l exactly when some location sits
  // at model distance >= k, i.e. eccentricity(l) >= k.
  SpatialSignal<bool> top(16, true);
  for (double k : {1.0, 2.0, 3.0, 4.0}) {
    auto out = escape_fix<BooleanDomain, HopsDistance>(
        g, DistancePredicate{CmpOp::kGe, k}, top);
    for (LocId l = 0; l < 16; ++l) {
      auto dist = distances_from<HopsDistance>(g, l);
      std::int64_t ecc = 0;
      for (auto d : dist)
        if (d != kIntInf) ecc = std::max(ecc, d);
      CHECK(out[l] == (static_cast<double>(ecc) >= k));
    }
  }
}

TEST_CASE("monitor: spatial verdicts change at service breakpoints") {
  // Two locations; the edge 0 -> 1 exists only from t = 5 on.
  SpatialModel<double> g1(2, {});
  SpatialModel<double> g2b(2, {Edge<double>{0, 1, 1.0}, Edge<double>{1, 0, 1.0}});
  LocationService<double> svc({0.0, 5.0}, {g1, g2b});

  Trace tr;
  tr.channels = {"p"};
  tr.kinds = {ChannelKind::kBool};
  tr.horizon = 10.0;
  tr.locations.emplace_back(std::vector<double>{0.0},
                            std::vector<std::vector<double>>{{0.0}}, 10.0);
  tr.locations.emplace_back(std::vector<double>{0.0},
                            std::vector<std::vector<double>>{{1.0}}, 10.0);

  auto res = monitor<BooleanDomain>(svc, tr, parse_formula("somewhere(hops)[<= 1] p"));
  CHECK(res.signal.locations[0].value_at(0.0) == false);
  CHECK(res.signal.locations[0].value_at(4.999) == false);
  CHECK(res.signal.locations[0].value_at(5.0) == true);
  CHECK(res.signal.locations[1].value_at(0.0) == true);
}

// --------------------------------------------------------------------------
// Differential smoke against the brute-force reference (full corpus runs in
// the acceptance suite)

TEST_CASE("monitor equals oracle on random instances, boolean and maxmin") {
  std::mt19937_64 rng(401);
  testutil::FormulaGenConfig cfg;
  cfg.location_count = 5;
  int checked = 0;
  for (int iter = 0; iter < 120; ++iter) {
    int n = 2 + static_cast<int>(rng() % 4);
    cfg.location_count = n;
    auto svc = testutil::random_service(rng, n, 8.0);
    auto tr = testutil::random_trace(rng, n, 8.0, 5);
    auto f = testutil::random_formula(rng, cfg);
    auto fb = monitor<BooleanDomain>(svc, tr, f);
    auto ob = oracle_monitor<BooleanDomain>(svc, tr, f);
    check_signals_equal(fb.signal, ob.signal);
    auto fm = monitor<MaxMinDomain>(svc, tr, f);
    auto om = oracle_monitor<MaxMinDomain>(svc, tr, f);
    check_signals_equal(fm.signal, om.signal, 1e-9);
    CHECK(fb.stats.max_fixpoint_iterations <= n);
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("monitor: locality - verdicts ignore unreachable locations") {
  std::mt19937_64 rng(409);
  testutil::FormulaGenConfig cfg;
  cfg.derived = true;
  for (int iter = 0; iter < 60; ++iter) {
    int n = 4 + static_cast<int>(rng() % 3);
    cfg.location_count = n;
    auto svc = testutil::random_service(rng, n, 8.0);
    auto tr = testutil::random_trace(rng, n, 8.0, 4);
    auto f = testutil::random_formula(rng, cfg);

    // Forward reachability union over all snapshots.
    std::vector<bool> reach(n, false);
    LocId probe = static_cast<LocId>(rng() % n);
    reach[probe] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& m : svc.models)
        for (LocId u = 0; u < n; ++u)
          if (reach[u])
            for (const auto& e : m.out_edges(u))
              if (!reach[e.dst]) {
                reach[e.dst] = true;
                grew = true;
              }
    }
    Trace perturbed = tr;
    bool any = false;
    for (LocId l = 0; l < n; ++l) {
      if (reach[l]) continue;
      any = true;
      for (auto& row : perturbed.locations[l].values)
        for (double& v : row) v = v == 0.0 ? 1.0 : -v;
    }
    if (!any) continue;
    auto before = monitor<BooleanDomain>(svc, tr, f);
    auto after = monitor<BooleanDomain>(svc, perturbed, f);
    std::vector<double> probes = time_steps_union(before.signal.locations[probe],
                                                  after.signal.locations[probe]);
    for (double t : probes)
      CHECK(before.signal.locations[probe].value_at(t) ==
            after.signal.locations[probe].value_at(t));
  }
}

TEST_CASE("oracle agrees with the monitor on the fixture's five verdicts") {
  auto fx = zigbee_fixture();
  OracleLimits limits{16, 8};
  for (const char* text :
       {"end_dev reach(hops)[<= 1] router", "escape(hops)[>= 2] !end_dev",
        "somewhere(hops)[<= 4] coord", "everywhere(hops)[<= 2] router",
        "(coord | router) surround(hops)[<= 3] end_dev"}) {
    CAPTURE(text);
    auto f = parse_formula(text);
    auto mon = monitor<BooleanDomain>(fx.service, fx.trace, f);
    auto ora = oracle_monitor<BooleanDomain>(fx.service, fx.trace, f, limits);
    check_signals_equal(mon.signal, ora.signal);
  }
}

TEST_CASE("oracle rejects instances beyond its guard rails") {
  auto fx = zigbee_fixture();
  CHECK_THROWS_AS(oracle_monitor<BooleanDomain>(fx.service, fx.trace, f_true()),
                  std::invalid_argument);

  std::mt19937_64 rng(5);
  auto svc = testutil::random_service(rng, 3, 8.0);
  Trace tr = testutil::random_trace(rng, 3, 8.0, 3);
  std::vector<double> many_times;
  std::vector<std::vector<double>> rows;
  for (int k = 0; k < 12; ++k) {
    many_times.push_back(k * 0.5);
    rows.push_back({1.0, 0.0, 0.0, 0.0});
  }
  tr.locations[0] = PiecewiseSignal<std::vector<double>>(many_times, rows, 8.0);
  CHECK_THROWS_AS(oracle_monitor<BooleanDomain>(svc, tr, f_true()),
                  std::invalid_argument);
}

TEST_CASE("monitor: results identical with internal parallelism enabled") {
  std::mt19937_64 rng(421);
  testutil::FormulaGenConfig cfg;
  cfg.location_count = 6;
  auto svc = testutil::random_service(rng, 6, 8.0);
  auto tr = testutil::random_trace(rng, 6, 8.0, 5);
  for (int i = 0; i < 10; ++i) {
    auto f = testutil::random_formula(rng, cfg);
    unsetenv("STREL_THREADS");
    auto seq = monitor<MaxMinDomain>(svc, tr, f);
    setenv("STREL_THREADS", "2", 1);
    auto par = monitor<MaxMinDomain>(svc, tr, f);
    unsetenv("STREL_THREADS");
    REQUIRE(seq.signal.locations.size() == par.signal.locations.size());
    for (std::size_t l = 0; l < seq.signal.locations.size(); ++l) {
      CHECK(seq.signal.locations[l].times == par.signal.locations[l].times);
      CHECK(seq.signal.locations[l].values == par.signal.locations[l].values);
    }
  }
}

TEST_CASE("monitor: universe mismatch and empty trace are rejected") {
  auto fx = zigbee_fixture();
  Trace empty;
  empty.horizon = 1.0;
  CHECK_THROWS_AS(monitor<BooleanDomain>(fx.service, empty, f_true()), ValidationError);

  Trace small = fx.trace;
  small.locations.resize(3);
  CHECK_THROWS_AS(monitor<BooleanDomain>(fx.service, small, f_true()), ValidationError);
}
