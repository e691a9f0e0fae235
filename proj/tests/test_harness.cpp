#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "sgn/config.hpp"
#include "sgn/diagnostics_io.hpp"
#include "sgn/errors.hpp"
#include "sgn/experiment.hpp"
#include "sgn/initdata.hpp"
#include "sgn/snapshot.hpp"
#include "sgn/spectral.hpp"

using namespace sgn;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sgn_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

bool bitwise_equal(const RealField2D& a, const RealField2D& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a.values()[i]) != std::bit_cast<std::uint64_t>(b.values()[i])) return false;
  }
  return true;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("settings text parsing") {
  const Settings s = parse_settings("# comment\npreset = gauss  # trailing\n\n nx=64\nsnap = 0, 1.5,5\n");
  CHECK(s.at("preset") == "gauss");
  CHECK(s.at("nx") == "64");
  const ExperimentConfig c = build_config(s);
  CHECK(c.preset == Preset::gauss);
  CHECK(c.nx == 64);
  CHECK(c.ny == 1024);
  CHECK(c.lx == 5.0);
  REQUIRE(c.snapshot_times.size() == 3);
  CHECK(c.snapshot_times[1] == 1.5);
  CHECK_THROWS_AS(parse_settings("novalue\n"), ConfigError);
}

TEST_CASE("config validation and overrides") {
  Settings s{{"preset", "soldef"}, {"scale", "ci"}};
  ExperimentConfig c = build_config(s);
  CHECK(c.nx == 256);
  CHECK(c.ny == 32);
  CHECK(c.t_max == 10.0);
  CHECK(c.eps == 0.1);
  s["nx"] = "128";
  CHECK(build_config(s).nx == 128);

  CHECK_THROWS_AS(build_config({{"preset", "bogus"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"nx", "100"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"tmax", "-1"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"nt", "0"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"snap", "11"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"lx", "abc"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"colour", "blue"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"c", "0.5"}}), ConfigError);
  CHECK_THROWS_AS(build_config({{"scale", "huge"}}), ConfigError);
}

TEST_CASE("settings round trip through to_settings") {
  const ExperimentConfig a = build_config({{"preset", "cross"}, {"scale", "ci"}, {"snap", "0,2.5"}});
  const ExperimentConfig b = build_config(to_settings(a));
  CHECK(b.nx == a.nx);
  CHECK(b.c == a.c);
  CHECK(b.snapshot_times == a.snapshot_times);
  CHECK(b.preset == Preset::cross);
}

TEST_CASE("snapshot schedule maps times to unique steps") {
  ExperimentConfig c = preset_defaults(Preset::soldef);
  const auto steps = c.snapshot_steps();
  CHECK(steps == std::vector<int>{0, 350, 700, 1000});
  c.snapshot_times = {1.0, 1.004};
  CHECK_THROWS_AS(c.snapshot_steps(), ConfigError);
}

TEST_CASE("snapshot round trip is bitwise exact") {
  const fs::path dir = scratch_dir("snap");
  const GridPtr g = make_grid(16, 8, 1.3, 0.7);
  State s{2.5, test::random_smooth(g, 1), test::random_smooth(g, 2), test::random_smooth(g, 3),
          test::random_smooth(g, 4), true};
  const PhysicalParams p{9.81, 0.5};
  const std::string path = (dir / "a.sgn").string();
  write_snapshot(path, s, p);
  CHECK(fs::file_size(path) == kSnapshotHeaderBytes + 4 * 16 * 8 * sizeof(double));
  CHECK_FALSE(fs::exists(path + ".tmp"));

  const Snapshot r = read_snapshot(path);
  CHECK(r.state.t == 2.5);
  CHECK(r.physics.g == 9.81);
  CHECK(r.physics.h_inf == 0.5);
  CHECK(r.state.grid().lx() == 1.3);
  CHECK(r.state.sigma_current);
  CHECK(bitwise_equal(r.state.h, s.h));
  CHECK(bitwise_equal(r.state.vx, s.vx));
  CHECK(bitwise_equal(r.state.vy, s.vy));
  CHECK(bitwise_equal(r.state.sigma, s.sigma));

  s.sigma_current = false;
  write_snapshot(path, s, p);
  CHECK(fs::file_size(path) == kSnapshotHeaderBytes + 3 * 16 * 8 * sizeof(double));
  CHECK_FALSE(read_snapshot(path).state.sigma_current);
  const SnapshotHeader h = read_snapshot_header(path);
  CHECK(h.nx == 16);
  CHECK(h.version == kSnapshotVersion);
}

TEST_CASE("header layout of a 1024 x 128 snapshot") {
  const fs::path dir = scratch_dir("layout");
  const GridPtr g = make_grid(1024, 128, 10.0, 2.0);
  const State s{0.0, RealField2D(g, 1.0), RealField2D(g), RealField2D(g), RealField2D(g), false};
  const std::string path = (dir / "b.sgn").string();
  write_snapshot(path, s, {});
  const std::string bytes = slurp(path);
  CHECK(bytes.substr(0, 4) == "SGN2");
  CHECK(bytes.size() == 64 + 3 * 1024 * 128 * 8);
  std::uint64_t nx = 0;
  std::memcpy(&nx, bytes.data() + 8, 8);
  CHECK(nx == 1024);
  double one = 0.0;
  std::memcpy(&one, bytes.data() + 64, 8);
  CHECK(one == 1.0);
}

TEST_CASE("corrupt snapshots raise format errors") {
  const fs::path dir = scratch_dir("corrupt");
  const GridPtr g = make_grid(8, 8, 1.0, 1.0);
  const State s{0.0, RealField2D(g, 1.0), RealField2D(g), RealField2D(g), RealField2D(g), false};
  const std::string path = (dir / "c.sgn").string();
  write_snapshot(path, s, {});
  std::string bytes = slurp(path);

  auto write = [&](const std::string& b) { std::ofstream(path, std::ios::binary) << b; };
  std::string bad = bytes;
  bad[0] = 'X';
  write(bad);
  CHECK_THROWS_AS(read_snapshot(path), FormatError);

  write(bytes.substr(0, bytes.size() - 8));
  CHECK_THROWS_AS(read_snapshot(path), FormatError);

  bad = bytes;
  bad[4] = 7;
  write(bad);
  CHECK_THROWS_AS(read_snapshot(path), FormatError);

  write(bytes.substr(0, 20));
  CHECK_THROWS_AS(read_snapshot(path), FormatError);
  CHECK_THROWS_AS(read_snapshot((dir / "missing.sgn").string()), FormatError);
}

TEST_CASE("diagnostics CSV round trip is exact") {
  const fs::path dir = scratch_dir("csv");
  std::vector<Diagnostics> rows{{0.0, 1.0 / 3.0, -2e-17, 5.5, 0.1 + 0.2, 0.99, 4.0, 0},
                                {0.1, 1e-300, 3.0, -0.0, 7.0 / 9.0, 0.5, 1.25, 57}};
  const std::string path = (dir / "d.csv").string();
  export_diagnostics(path, rows);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,mass,px,py,energy,hmin,hmax,gmres_iters");
  const auto back = import_diagnostics(path);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].t == rows[i].t);
    CHECK(back[i].mass == rows[i].mass);
    CHECK(back[i].momentum_x == rows[i].momentum_x);
    CHECK(back[i].energy == rows[i].energy);
    CHECK(back[i].h_max == rows[i].h_max);
    CHECK(back[i].gmres_iterations == rows[i].gmres_iterations);
  }
  const TimeSeries s = read_series(path, "hmin");
  CHECK(s[1].value == 0.5);
  std::ofstream(path) << "t,hmin\n1,zz\n";
  CHECK_THROWS_AS(read_series(path), FormatError);
}

TEST_CASE("rest run produces identical diagnostics rows") {
  const fs::path dir = scratch_dir("rest");
  ExperimentConfig c = build_config({{"preset", "custom"}, {"nx", "16"}, {"ny", "16"}, {"nt", "30"},
                                     {"tmax", "0.3"}, {"snap", "0,0.3"}, {"out", dir.string()}});
  const RunSummary s = run_experiment(c);
  REQUIRE(s.diagnostics.size() == 4);
  for (const Diagnostics& d : s.diagnostics) {
    CHECK(d.mass == 0.0);
    CHECK(d.energy == 0.0);
    CHECK(d.h_min == 1.0);
  }
  CHECK(s.drift_energy == 0.0);
  CHECK(s.infimum.size() == 31);
  CHECK(fs::exists(dir / "summary.json"));
  CHECK(fs::exists(dir / "infimum.csv"));
  CHECK(import_diagnostics((dir / "diagnostics.csv").string()).size() == 4);
  REQUIRE(s.snapshot_files.size() == 2);
  CHECK(read_snapshot((dir / s.snapshot_files[1]).string()).state.t == doctest::Approx(0.3));
}

TEST_CASE("runs are deterministic") {
  auto run = [](const std::string& name) {
    const fs::path dir = scratch_dir(name);
    ExperimentConfig c = build_config({{"preset", "gauss"}, {"alpha", "2"}, {"nx", "32"}, {"ny", "32"},
                                       {"lx", "1.5"}, {"ly", "1.5"}, {"nt", "6"}, {"tmax", "0.06"},
                                       {"cadence", "2"}, {"snap", ""}, {"out", dir.string()}});
    run_experiment(c);
    return slurp(dir / "diagnostics.csv");
  };
  const std::string a = run("det_a");
  CHECK(a == run("det_b"));
  CHECK(std::count(a.begin(), a.end(), '\n') == 5);
}

TEST_CASE("a custom run can start from a snapshot") {
  const fs::path dir = scratch_dir("reload");
  const InitContext ctx{make_grid(16, 16, 1.0, 1.0), {}, {}};
  const State s0 = gaussian_hump(ctx, 1.5);
  write_snapshot((dir / "init.sgn").string(), s0, {});
  ExperimentConfig c = build_config({{"preset", "custom"}, {"nx", "16"}, {"ny", "16"}, {"init", (dir / "init.sgn").string()},
                                     {"out", dir.string()}});
  const State s = initial_state(c);
  CHECK(max_value(s.h) == doctest::Approx(1.5));
  c.nx = 32;
  CHECK_THROWS_AS(initial_state(c), ConfigError);
}

TEST_CASE("solver failure persists the last good state") {
  const fs::path dir = scratch_dir("fail");
  ExperimentConfig c = build_config({{"preset", "gauss"}, {"alpha", "2"}, {"nx", "32"}, {"ny", "32"}, {"lx", "1.5"},
                                     {"ly", "1.5"}, {"nt", "5"}, {"tmax", "0.05"}, {"gmres_maxit", "2"},
                                     {"snap", ""}, {"out", dir.string()}});
  CHECK_THROWS_AS(run_experiment(c), SolverError);
  CHECK(fs::exists(dir / "error.json"));
  CHECK(fs::exists(dir / "last_good.sgn"));
  CHECK(read_snapshot((dir / "last_good.sgn").string()).state.t == 0.0);
}

TEST_CASE("drift normalisation") {
  CHECK(relative_drift(1.1, 1.0, 2.0) == doctest::Approx(0.05));
  CHECK(relative_drift(1e-20, 0.0, 0.0) == 1e-20);
}
