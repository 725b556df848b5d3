#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "strel/cli.hpp"
#include "strel/io.hpp"
#include "strel/monitor.hpp"
#include "strel/scenarios.hpp"

using namespace strel;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("strel_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("trace round-trip: serialize then load equals the fixture") {
  TempDir dir;
  auto fx = zigbee_fixture();
  save_trace(fx.trace, dir.file("t.json"));
  Trace back = load_trace(dir.file("t.json"));
  CHECK(back.channels == fx.trace.channels);
  CHECK(back.kinds == fx.trace.kinds);
  CHECK(back.horizon == fx.trace.horizon);
  REQUIRE(back.location_count() == fx.trace.location_count());
  for (int l = 0; l < back.location_count(); ++l) {
    CHECK(back.locations[l].times == fx.trace.locations[l].times);
    CHECK(back.locations[l].values == fx.trace.locations[l].values);
  }
}

TEST_CASE("space round-trip: scalar and vec2") {
  TempDir dir;
  auto fx = zigbee_fixture();
  save_space(fx.service, dir.file("s.json"));
  auto back = load_space(dir.file("s.json"));
  REQUIRE(std::holds_alternative<LocationService<double>>(back));
  const auto& svc = std::get<LocationService<double>>(back);
  CHECK(svc.breakpoints == fx.service.breakpoints);
  CHECK(svc.models.front() == fx.service.models.front());

  ManetConfig cfg;
  cfg.nodes = 8;
  cfg.steps = 3;
  auto sc = manet_generate(cfg);
  save_space(sc.service, dir.file("v.json"));
  auto vback = load_space(dir.file("v.json"));
  REQUIRE(std::holds_alternative<LocationService<Vec2>>(vback));
  const auto& vsvc = std::get<LocationService<Vec2>>(vback);
  CHECK(vsvc.breakpoints == sc.service.breakpoints);
  for (std::size_t i = 0; i < vsvc.models.size(); ++i)
    CHECK(vsvc.models[i] == sc.service.models[i]);
}

TEST_CASE("trace loader diagnostics") {
  CHECK_THROWS_WITH_AS(
      parse_trace_json(R"({"horizon": 5, "channels": ["p"], "locations":
        [{"id": 0, "segments": [{"t": 0, "values": [true]},
                                {"t": 0, "values": [false]}]}]})"),
      doctest::Contains("location 0 segment 1 time not increasing"), SchemaError);

  CHECK_THROWS_AS(
      parse_trace_json(R"({"horizon": 5, "channels": ["p"], "locations":
        [{"id": 0, "segments": [{"t": 0, "values": [true, false]}]}]})"),
      SchemaError);

  // Channels must not mix booleans and numbers.
  CHECK_THROWS_AS(
      parse_trace_json(R"({"horizon": 5, "channels": ["p"], "locations":
        [{"id": 0, "segments": [{"t": 0, "values": [true]},
                                {"t": 1, "values": [3.5]}]}]})"),
      SchemaError);

  CHECK_THROWS_AS(parse_trace_json(R"({"horizon": -1, "channels": ["p"],
                                       "locations": []})"),
                  SchemaError);
}

TEST_CASE("space loader diagnostics") {
  CHECK_THROWS_WITH_AS(
      parse_space_json(R"({"locations": 2, "weightKind": "scalar",
        "snapshots": [{"t": 0, "edges": [[0, 1.0, 1], [0, 2.0, 1]]}]})"),
      doctest::Contains("at most one weight"), SchemaError);

  CHECK_THROWS_AS(parse_space_json(R"({"locations": 2, "weightKind": "rope",
                                       "snapshots": []})"),
                  SchemaError);

  CHECK_THROWS_AS(parse_space_json(R"({"locations": 2, "weightKind": "scalar",
        "snapshots": [{"t": 0, "edges": [[0, 1.0, 5]]}]})"),
                  SchemaError);

  // Euclidean snapshots induce displacement weights.
  auto svc = parse_space_json(R"({"locations": 2, "weightKind": "vec2",
      "snapshots": [{"t": 0, "positions": [[0, 0], [3, 4]],
                     "relation": [[0, 1], [1, 0]]}]})");
  const auto& v = std::get<LocationService<Vec2>>(svc);
  CHECK(*v.models.front().weight(0, 1) == Vec2{3.0, 4.0});
  CHECK(*v.models.front().weight(1, 0) == Vec2{-3.0, -4.0});
}

TEST_CASE("verdict CSV export re-imports to the same signal") {
  TempDir dir;
  auto fx = zigbee_fixture();
  auto res = monitor<BooleanDomain>(fx.service, fx.trace,
                                    parse_formula("somewhere(hops)[<= 1] router"));
  {
    std::ofstream out(dir.file("out.csv"));
    write_result_csv(res, out);
  }
  Trace back = import_result_csv(dir.file("out.csv"), res.signal.horizon);
  REQUIRE(back.location_count() == res.signal.location_count());
  CHECK(back.kinds.front() == ChannelKind::kBool);
  for (int l = 0; l < back.location_count(); ++l) {
    const auto& sig = res.signal.locations[l];
    for (std::size_t i = 0; i < sig.times.size(); ++i)
      CHECK((back.locations[l].value_at(sig.times[i])[0] != 0.0) == sig.values[i]);
    CHECK(back.locations[l].times == sig.times);
  }

  // Quantitative verdicts round-trip bit-exactly through the 17-digit form.
  auto resm = monitor<MaxMinDomain>(fx.service, fx.trace,
                                    parse_formula("somewhere(hops)[<= 1] router"));
  {
    std::ofstream out(dir.file("outm.csv"));
    write_result_csv(resm, out);
  }
  Trace backm = import_result_csv(dir.file("outm.csv"), resm.signal.horizon);
  CHECK(backm.kinds.front() == ChannelKind::kReal);
  for (int l = 0; l < backm.location_count(); ++l)
    for (std::size_t i = 0; i < resm.signal.locations[l].times.size(); ++i)
      CHECK(backm.locations[l].value_at(resm.signal.locations[l].times[i])[0] ==
            resm.signal.locations[l].values[i]);
}

TEST_CASE("cli: monitor smoke path writes one row per location breakpoint") {
  TempDir dir;
  auto fx = zigbee_fixture();
  save_trace(fx.trace, dir.file("trace.json"));
  save_space(fx.service, dir.file("space.json"));
  {
    std::ofstream f(dir.file("f.strel"));
    f << "end_dev reach(hops)[<= 1] router\n";
  }
  int code = cli::run({"monitor", "--formula", dir.file("f.strel"), "--trace",
                       dir.file("trace.json"), "--space", dir.file("space.json"),
                       "--semantics", "boolean", "--output", dir.file("out.csv")});
  CHECK(code == 0);
  std::ifstream in(dir.file("out.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "location,t,value");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 16);  // static fixture: one breakpoint per location
}

TEST_CASE("cli: determinism - identical runs produce identical bytes") {
  TempDir dir;
  ManetConfig cfg;
  cfg.nodes = 9;
  cfg.steps = 4;
  cfg.seed = 5;
  auto sc = manet_generate(cfg);
  save_trace(sc.trace, dir.file("trace.json"));
  save_space(sc.service, dir.file("space.json"));
  auto props = property_library();
  {
    std::ofstream f(dir.file("f.strel"));
    f << props[0].text;
  }
  auto run_once = [&](const std::string& out) {
    return cli::run({"monitor", "--formula", dir.file("f.strel"), "--trace",
                     dir.file("trace.json"), "--space", dir.file("space.json"),
                     "--semantics", "maxmin", "--output", dir.file(out)});
  };
  CHECK(run_once("a.csv") == run_once("b.csv"));
  std::ifstream a(dir.file("a.csv")), b(dir.file("b.csv"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("cli: check reports parse errors with exit 2") {
  TempDir dir;
  {
    std::ofstream f(dir.file("bad.strel"));
    f << "p U[1, 0] q";
  }
  CHECK(cli::run({"check", "--formula", dir.file("bad.strel")}) == 2);
  CHECK(cli::run({"check", "--formula-text", "p U[0,1] q"}) == 0);
  CHECK(cli::run({"check", "--formula-text", "escape(hops)[<= 1] p"}) == 0);
}

TEST_CASE("cli: assert-all flags violations with exit 1") {
  TempDir dir;
  auto fx = zigbee_fixture();
  save_trace(fx.trace, dir.file("trace.json"));
  save_space(fx.service, dir.file("space.json"));
  int code = cli::run({"monitor", "--formula-text", "everywhere(hops)[<= 2] router",
                       "--trace", dir.file("trace.json"), "--space",
                       dir.file("space.json"), "--semantics", "maxmin", "--assert-all",
                       "--output", dir.file("out.csv")});
  CHECK(code == 1);
  code = cli::run({"monitor", "--formula-text", "somewhere(hops)[<= 4] coord",
                   "--trace", dir.file("trace.json"), "--space", dir.file("space.json"),
                   "--assert-all", "--output", dir.file("out2.csv")});
  CHECK(code == 0);
}

TEST_CASE("cli: simulate then monitor the generated scenario") {
  TempDir dir;
  int code = cli::run({"simulate", "--nodes", "10", "--steps", "4", "--seed", "3",
                       "--graph", "delaunay", "--out-dir", dir.path.string()});
  REQUIRE(code == 0);
  REQUIRE(fs::exists(dir.file("trace.json")));
  REQUIRE(fs::exists(dir.file("space.json")));
  code = cli::run({"monitor", "--formula-text", "somewhere(euclid)[<= 2.5] X_B > 20",
                   "--trace", dir.file("trace.json"), "--space", dir.file("space.json"),
                   "--semantics", "maxmin", "--format", "json", "--output",
                   dir.file("out.json")});
  CHECK(code == 0);
  CHECK(fs::exists(dir.file("out.json")));
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(cli::run({"monitor", "--trace", "x.json"}) == 2);
  CHECK(cli::run({"frobnicate"}) == 2);
  CHECK(cli::run({"monitor", "--formula-text", "p", "--trace", "/nonexistent.json",
                  "--space", "/nonexistent.json"}) == 2);
}

TEST_CASE("cli: at-time and location filters restrict rows") {
  TempDir dir;
  ManetConfig cfg;
  cfg.nodes = 6;
  cfg.steps = 5;
  auto sc = manet_generate(cfg);
  save_trace(sc.trace, dir.file("trace.json"));
  save_space(sc.service, dir.file("space.json"));
  int code = cli::run({"monitor", "--formula-text", "X_B > 20", "--trace",
                       dir.file("trace.json"), "--space", dir.file("space.json"),
                       "--semantics", "maxmin", "--at-time", "2.0", "--location", "1",
                       "--location", "3", "--output", dir.file("out.csv")});
  REQUIRE(code == 0);
  std::ifstream in(dir.file("out.csv"));
  std::string line;
  std::getline(in, line);
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(line);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].substr(0, 4) == "1,2,");
  CHECK(rows[1].substr(0, 4) == "3,2,");
}
