#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "kaar/csv.hpp"
#include "kaar/experiment.hpp"

namespace fs = std::filesystem;
using kaar::ConfigError;
using kaar::ExperimentConfig;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("kaar_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ExperimentConfig parse(const std::string& text, const std::vector<std::string>& overrides = {}) {
  std::istringstream in(text);
  return kaar::parse_config(in, overrides);
}

}  // namespace

TEST_CASE("defaults parse from an empty file") {
  CHECK(parse("") == ExperimentConfig{});
}

TEST_CASE("config round trip") {
  ExperimentConfig cfg = parse(
      "[kernel]\nd = 2\nregime = hard\nbeta = 0.9\np = 4\nepsilon = 0.05\n"
      "[adversary]\nkind = shattering\nm = 2\n[game]\nhorizon = 1024\nseeds = 3\n"
      "[effdim]\ns = 1.5\nsizes = 16, 32\ntaus = 0.5, 1e-3\nlayouts = uniform, clustered\n");
  CHECK(cfg.d == 2);
  CHECK(cfg.schedule.regime == kaar::Regime::hard);
  CHECK(cfg.effdim_taus == std::vector<double>{0.5, 1e-3});
  std::ostringstream out;
  kaar::write_config(out, cfg);
  CHECK(parse(out.str()) == cfg);

  ExperimentConfig odd;
  odd.schedule.beta = 1.0 / 3.0 + 0.5;
  odd.noise_sd = 0.1 + 0.2;
  odd.out_dir = "some dir";
  std::ostringstream out2;
  kaar::write_config(out2, odd);
  CHECK(parse(out2.str()) == odd);
}

TEST_CASE("overrides") {
  const auto cfg = parse("[game]\nhorizon = 100\n", {"game.horizon=200", "adversary.noise_sd = 0.5"});
  CHECK(cfg.horizon == 200);
  CHECK(cfg.noise_sd == 0.5);
  CHECK_THROWS_AS(parse("", {"horizon=3"}), ConfigError);
  CHECK_THROWS_AS(parse("", {"game.horizon"}), ConfigError);
  CHECK_THROWS_AS(parse("", {"game.bogus=1"}), ConfigError);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(parse("[game]\nhorizonn = 5\n"), ConfigError);
  CHECK_THROWS_AS(parse("[game]\nhorizon = five\n"), ConfigError);
  CHECK_THROWS_AS(parse("[game]\nhorizon = 5x\n"), ConfigError);
  CHECK_THROWS_AS(parse("[kernel]\nregime = holder\n"), ConfigError);
  CHECK_THROWS_AS(parse("[kernel]\nbeta = 0.4\n"), ConfigError);
  CHECK_THROWS_AS(parse("[kernel]\nd = 2\n[forecaster]\nid = ewa\n"), ConfigError);
  CHECK_THROWS_AS(parse("[forecaster]\nid = ridge\n"), ConfigError);
  CHECK_THROWS_AS(parse("[effdim]\nlayouts = spiral\n"), ConfigError);
  CHECK_THROWS_AS(parse("[ewa]\nepsilon = 0.01\n[forecaster]\nid = ewa\n"), ConfigError);
  CHECK_THROWS_AS(parse("[kernel\n"), ConfigError);
  CHECK_THROWS_AS(kaar::load_config("/nonexistent/config.ini"), ConfigError);
}

TEST_CASE("shattering grid fits the horizon") {
  CHECK(kaar::shattering_grid_for(128, 1) == 64);
  CHECK(kaar::shattering_grid_for(129, 1) == 64);
  CHECK(kaar::shattering_grid_for(256, 2) == 72);  // floor(2 sqrt(72)) = 16
  CHECK(kaar::shattering_grid_for(1, 1) == 0);
  for (std::size_t h : {100u, 300u, 1000u}) {
    for (int d : {1, 2, 3}) {
      const long n = kaar::shattering_grid_for(h, d);
      const double rounds = std::pow(kaar::cells_per_axis(n, d), d);
      CHECK(rounds <= h);
      CHECK(std::pow(kaar::cells_per_axis(n + 1, d), d) > h);
    }
  }
}

TEST_CASE("setups are deterministic in the seed") {
  ExperimentConfig cfg;
  const auto a = kaar::make_setup(cfg, 64, 9);
  const auto b = kaar::make_setup(cfg, 64, 9);
  const auto c = kaar::make_setup(cfg, 64, 10);
  CHECK(a.stream.labels == b.stream.labels);
  CHECK(a.stream.labels != c.stream.labels);
  CHECK(a.tau == doctest::Approx(4.0).epsilon(1e-14));  // 64^{1/3}
  CHECK(a.comparators.size() == 2);
  // Shorter horizons see a prefix of the same stream.
  const auto p = kaar::make_setup(cfg, 32, 9);
  CHECK(std::equal(p.stream.labels.begin(), p.stream.labels.end(), a.stream.labels.begin()));
}

TEST_CASE("bench with horizon 1 skips the fit") {
  const auto cfg = parse("", {"game.horizon=1", "game.seeds=2"});
  const auto result = kaar::run_bench(cfg, nullptr);
  REQUIRE(result.seeds.size() == 2);
  CHECK(result.seeds[0].n == std::vector<std::size_t>{1});
  CHECK_FALSE(result.seeds[0].fit);
  CHECK_FALSE(result.mean_slope);
  CHECK(result.target.value() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("bench checkpoints mode writes traces and summary") {
  const auto dir = scratch("bench");
  const auto cfg = parse("", {"game.horizon=64", "game.first_checkpoint=8", "game.sweep=checkpoints", "game.seeds=2"});
  {
    kaar::OutputTransaction tx(dir);
    const auto result = kaar::run_bench(cfg, &tx);
    CHECK(result.seeds[0].n == std::vector<std::size_t>{8, 16, 32, 64});
    CHECK(result.fitted_seeds + 0 <= 2);
    tx.commit();
  }
  std::ifstream trace(dir / "trace_seed1_n64.csv");
  std::string header;
  std::getline(trace, header);
  CHECK(header == "t,y,yhat,loss,cum_loss,regret_representer,regret_zero");
  std::ifstream summary(dir / "summary.csv");
  std::getline(summary, header);
  CHECK(header == "seed,n,regret,slope");
  CHECK(fs::exists(dir / "regret.dat"));
  CHECK(kaar::load_config(dir / "config.ini") == cfg);
  fs::remove_all(dir);
}

TEST_CASE("uncommitted outputs are removed") {
  const auto dir = scratch("tx");
  {
    kaar::OutputTransaction tx(dir);
    std::ofstream(tx.path("partial.csv")) << "t\n";
    CHECK(fs::exists(dir / "partial.csv"));
  }
  CHECK_FALSE(fs::exists(dir / "partial.csv"));
  fs::remove_all(dir);
}

TEST_CASE("layouts") {
  const auto eq = kaar::make_layout("equispaced", 5, 1, 0);
  CHECK(eq[0][0] == -1.0);
  CHECK(eq[2][0] == 0.0);
  CHECK(eq[4][0] == 1.0);
  const auto grid = kaar::make_layout("equispaced", 9, 2, 0);
  CHECK(grid[4][0] == 0.0);
  CHECK(grid[4][1] == 0.0);
  for (const char* l : {"uniform", "clustered"}) {
    const auto pts = kaar::make_layout(l, 50, 3, 1);
    CHECK(pts.size() == 50);
    for (double v : pts.raw()) CHECK(std::abs(v) <= 1.0);
    CHECK(pts == kaar::make_layout(l, 50, 3, 1));
  }
  CHECK_THROWS_AS(kaar::make_layout("spiral", 3, 1, 0), ConfigError);
}

TEST_CASE("effdim grid") {
  const auto cfg = parse("[effdim]\nsizes = 32, 64, 128, 256\ntaus = 1, 4\nlayouts = equispaced, clustered\n");
  const auto results = kaar::run_effdim(cfg, 1);
  REQUIRE(results.size() == 4);
  for (const auto& r : results) {
    CHECK(r.reports.size() == 4);
    REQUIRE(r.fit);
  }
  const auto single = kaar::run_effdim(parse("[effdim]\nsizes = 32\n"), 1);
  CHECK_FALSE(single.front().fit);
}

TEST_CASE("parallel_for runs every index once and rethrows") {
  std::vector<int> hits(100, 0);
  kaar::parallel_for(100, 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(kaar::parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}
