#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

#include "kaar/adversary.hpp"
#include "kaar/csv.hpp"
#include "kaar/effective_dimension.hpp"
#include "kaar/game.hpp"
#include "kaar/schedule.hpp"

namespace kaar {

/// Invalid or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declarative description of a game family. Sections and keys of the INI
/// file are documented in configs/README.md.
struct ExperimentConfig {
  // [kernel]
  int d = 1;
  Schedule schedule;  // schedule.horizon is set per game

  // [forecaster]
  std::string forecaster = "kaar";  // kaar | kaar_clipped | ewa | zero

  // [ewa]
  double ewa_beta = 1.0;
  double ewa_epsilon = 0.5;
  std::size_t ewa_max_experts = std::size_t{1} << 20;

  // [adversary]
  std::string adversary = "iid";  // iid | shattering
  double m = 1.0;                 // label bound, also the clip level
  double noise_sd = 0.1;
  std::string comparator = "representer";  // representer | zero (iid only)
  std::size_t centers = 8;
  double norm_sq = 0.5;

  // [game]
  std::size_t horizon = 4096;
  std::size_t first_checkpoint = 128;
  std::string sweep = "horizons";  // horizons | checkpoints
  std::size_t seeds = 10;
  std::uint64_t seed = 1;
  std::size_t threads = 1;

  // [effdim]
  double effdim_s = 1.0;
  std::vector<std::size_t> effdim_sizes{256, 512, 1024, 2048, 4096, 8192};
  std::vector<double> effdim_taus{1.0};
  std::vector<std::string> effdim_layouts{"equispaced"};

  // [output]
  std::string out_dir;  // empty: the front end picks a default

  bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ConfigError on unknown keys, unparsable values or violated
/// constraints.
ExperimentConfig config_from_tree(const boost::property_tree::ptree& tree);
boost::property_tree::ptree config_to_tree(const ExperimentConfig& cfg);

/// Reads an INI file and applies "section.key=value" overrides before
/// validation.
ExperimentConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {});
ExperimentConfig parse_config(std::istream& in, const std::vector<std::string>& overrides = {});
void write_config(std::ostream& out, const ExperimentConfig& cfg);
void validate(const ExperimentConfig& cfg);

/// Stream plus the comparators it is scored against, for one seed.
struct GameSetup {
  Stream stream;
  std::vector<std::unique_ptr<Comparator>> comparators;
  double tau = 0.0;
  double s = 0.0;
};

/// Largest grid parameter whose shattering stream fits in `horizon` rounds;
/// 0 when none does.
long shattering_grid_for(std::size_t horizon, int d);

/// Builds the adversary and the scheduled kernel for a game of the given
/// horizon. The stream is a deterministic function of (cfg, seed).
GameSetup make_setup(const ExperimentConfig& cfg, std::size_t horizon, std::uint64_t seed);

/// Forecaster named by `id` for the given setup.
std::unique_ptr<Forecaster> make_forecaster(const ExperimentConfig& cfg, const std::string& id,
                                            const GameSetup& setup);

/// One game of `horizon` rounds with checkpoints from cfg.first_checkpoint.
GameTrace run_game(const ExperimentConfig& cfg, std::size_t horizon, std::uint64_t seed);

struct SeedResult {
  std::uint64_t seed = 0;
  std::vector<std::size_t> n;
  std::vector<double> regret;
  std::optional<ExponentFit> fit;
};

struct BenchResult {
  std::vector<SeedResult> seeds;
  std::optional<double> target;
  std::optional<double> mean_slope;  // mean of the per-seed slopes
  std::size_t fitted_seeds = 0;
  /// Regret averaged over seeds at each n, and its log-log fit. Per-seed
  /// regrets near zero make individual slopes heavy-tailed; the averaged
  /// curve is the stable summary.
  std::vector<std::size_t> n;
  std::vector<double> mean_regret;
  std::optional<ExponentFit> mean_curve_fit;
};

/// Runs all seeds. In "horizons" mode every checkpoint n is its own game
/// with tau tuned to n; in "checkpoints" mode one game per seed is sampled
/// at its checkpoints. Traces and the summary are written through `out`
/// when it is not null.
BenchResult run_bench(const ExperimentConfig& cfg, OutputTransaction* out);

/// Point layouts for effective-dimension studies.
PointSet make_layout(const std::string& layout, std::size_t n, int d, std::uint64_t seed);

struct EffdimResult {
  std::string layout;
  double tau = 0.0;
  std::vector<EffDimReport> reports;
  std::optional<LineFit> fit;
};

/// One report per (layout, n, tau); one scaling fit per layout and tau when
/// there are at least four sizes. Writes effdim_<layout>.csv through `out`.
std::vector<EffdimResult> run_effdim(const ExperimentConfig& cfg, std::uint64_t seed,
                                     OutputTransaction* out = nullptr);

/// Runs `func(i)` for i in [0, count) on up to `threads` workers. The first
/// exception is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& func);

}  // namespace kaar
