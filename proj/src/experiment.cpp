#include "kaar/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>

#include "kaar/ewa.hpp"

namespace kaar {

namespace pt = boost::property_tree;

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << v;
  return out.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || std::isnan(v)) {
    throw ConfigError(key + ": expected a number, got '" + raw + "'");
  }
  return v;
}

template <class Int>
Int parse_int(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(key + ": expected an integer, got '" + raw + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& raw) {
  std::vector<std::string> out;
  std::stringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T, class F>
std::string join(const std::vector<T>& items, F fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += fmt(items[i]);
  }
  return out;
}

struct Field {
  const char* key;
  std::function<std::string(const ExperimentConfig&)> get;
  std::function<void(ExperimentConfig&, const std::string&)> set;
};

Field double_field(const char* key, double ExperimentConfig::*member) {
  return {key, [member](const ExperimentConfig& c) { return format_double(c.*member); },
          [key, member](ExperimentConfig& c, const std::string& v) { c.*member = parse_double(key, v); }};
}

Field size_field(const char* key, std::size_t ExperimentConfig::*member) {
  return {key, [member](const ExperimentConfig& c) { return std::to_string(c.*member); },
          [key, member](ExperimentConfig& c, const std::string& v) {
            c.*member = parse_int<std::size_t>(key, v);
          }};
}

Field string_field(const char* key, std::string ExperimentConfig::*member) {
  return {key, [member](const ExperimentConfig& c) { return c.*member; },
          [member](ExperimentConfig& c, const std::string& v) { c.*member = trim(v); }};
}

Field schedule_field(const char* key, double Schedule::*member) {
  return {key, [member](const ExperimentConfig& c) { return format_double(c.schedule.*member); },
          [key, member](ExperimentConfig& c, const std::string& v) {
            c.schedule.*member = parse_double(key, v);
          }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"kernel.d", [](const ExperimentConfig& c) { return std::to_string(c.d); },
       [](ExperimentConfig& c, const std::string& v) { c.d = parse_int<int>("kernel.d", v); }},
      {"kernel.regime", [](const ExperimentConfig& c) { return to_string(c.schedule.regime); },
       [](ExperimentConfig& c, const std::string& v) {
         try {
           c.schedule.regime = parse_regime(trim(v));
         } catch (const std::invalid_argument& e) {
           throw ConfigError(std::string("kernel.regime: ") + e.what());
         }
       }},
      schedule_field("kernel.beta", &Schedule::beta),
      schedule_field("kernel.p", &Schedule::p),
      schedule_field("kernel.epsilon", &Schedule::epsilon),
      schedule_field("kernel.s", &Schedule::manual_s),
      schedule_field("kernel.tau", &Schedule::manual_tau),
      string_field("forecaster.id", &ExperimentConfig::forecaster),
      double_field("ewa.beta", &ExperimentConfig::ewa_beta),
      double_field("ewa.epsilon", &ExperimentConfig::ewa_epsilon),
      size_field("ewa.max_experts", &ExperimentConfig::ewa_max_experts),
      string_field("adversary.kind", &ExperimentConfig::adversary),
      double_field("adversary.m", &ExperimentConfig::m),
      double_field("adversary.noise_sd", &ExperimentConfig::noise_sd),
      string_field("adversary.comparator", &ExperimentConfig::comparator),
      size_field("adversary.centers", &ExperimentConfig::centers),
      double_field("adversary.norm_sq", &ExperimentConfig::norm_sq),
      size_field("game.horizon", &ExperimentConfig::horizon),
      size_field("game.first_checkpoint", &ExperimentConfig::first_checkpoint),
      string_field("game.sweep", &ExperimentConfig::sweep),
      size_field("game.seeds", &ExperimentConfig::seeds),
      {"game.seed", [](const ExperimentConfig& c) { return std::to_string(c.seed); },
       [](ExperimentConfig& c, const std::string& v) { c.seed = parse_int<std::uint64_t>("game.seed", v); }},
      size_field("game.threads", &ExperimentConfig::threads),
      double_field("effdim.s", &ExperimentConfig::effdim_s),
      {"effdim.sizes",
       [](const ExperimentConfig& c) {
         return join(c.effdim_sizes, [](std::size_t n) { return std::to_string(n); });
       },
       [](ExperimentConfig& c, const std::string& v) {
         c.effdim_sizes.clear();
         for (const auto& item : split_list(v)) c.effdim_sizes.push_back(parse_int<std::size_t>("effdim.sizes", item));
       }},
      {"effdim.taus", [](const ExperimentConfig& c) { return join(c.effdim_taus, format_double); },
       [](ExperimentConfig& c, const std::string& v) {
         c.effdim_taus.clear();
         for (const auto& item : split_list(v)) c.effdim_taus.push_back(parse_double("effdim.taus", item));
       }},
      {"effdim.layouts", [](const ExperimentConfig& c) { return join(c.effdim_layouts, [](const std::string& s) { return s; }); },
       [](ExperimentConfig& c, const std::string& v) { c.effdim_layouts = split_list(v); }},
      string_field("output.dir", &ExperimentConfig::out_dir),
  };
  return table;
}

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
  return std::any_of(options.begin(), options.end(), [&](const char* o) { return v == o; });
}

}  // namespace

ExperimentConfig config_from_tree(const pt::ptree& tree) {
  std::set<std::string> known;
  for (const auto& f : fields()) known.insert(f.key);
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key '" + section + "' must appear inside a [section]");
    }
    for (const auto& [key, value] : body) {
      const std::string path = section + "." + key;
      if (!known.count(path)) {
        throw ConfigError("unknown configuration key '" + path + "'");
      }
    }
  }
  ExperimentConfig cfg;
  for (const auto& f : fields()) {
    if (const auto v = tree.get_optional<std::string>(f.key)) f.set(cfg, *v);
  }
  validate(cfg);
  return cfg;
}

pt::ptree config_to_tree(const ExperimentConfig& cfg) {
  pt::ptree tree;
  for (const auto& f : fields()) tree.put(f.key, f.get(cfg));
  return tree;
}

namespace {

void apply_overrides(pt::ptree& tree, const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("override '" + o + "' is not of the form section.key=value");
    }
    const std::string key = trim(o.substr(0, eq));
    if (key.find('.') == std::string::npos) {
      throw ConfigError("override key '" + key + "' needs a section, as in game.horizon");
    }
    tree.put(key, trim(o.substr(eq + 1)));
  }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::vector<std::string>& overrides) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  apply_overrides(tree, overrides);
  return config_from_tree(tree);
}

ExperimentConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read configuration file " + path.string());
  }
  return parse_config(in, overrides);
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
  pt::write_ini(out, config_to_tree(cfg));
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.d < 1 || cfg.d > 16) throw ConfigError("kernel.d must lie in [1, 16]");
  if (cfg.horizon < 1) throw ConfigError("game.horizon must be positive");
  if (cfg.first_checkpoint < 1) throw ConfigError("game.first_checkpoint must be positive");
  if (cfg.seeds < 1) throw ConfigError("game.seeds must be positive");
  if (!one_of(cfg.sweep, {"horizons", "checkpoints"})) {
    throw ConfigError("game.sweep must be 'horizons' or 'checkpoints'");
  }
  {
    Schedule s = cfg.schedule;
    s.horizon = static_cast<long>(cfg.horizon);
    try {
      (void)schedule_tau(s, cfg.d);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("kernel: ") + e.what());
    }
  }
  if (!one_of(cfg.forecaster, {"kaar", "kaar_clipped", "ewa", "zero"})) {
    throw ConfigError("forecaster.id must be one of kaar, kaar_clipped, ewa, zero");
  }
  if (!(cfg.m > 0.0) || !std::isfinite(cfg.m)) throw ConfigError("adversary.m must be positive and finite");
  if (!(cfg.noise_sd >= 0.0) || !std::isfinite(cfg.noise_sd)) {
    throw ConfigError("adversary.noise_sd must be nonnegative");
  }
  if (!one_of(cfg.adversary, {"iid", "shattering"})) {
    throw ConfigError("adversary.kind must be 'iid' or 'shattering'");
  }
  if (!one_of(cfg.comparator, {"representer", "zero"})) {
    throw ConfigError("adversary.comparator must be 'representer' or 'zero'");
  }
  if (cfg.centers < 1) throw ConfigError("adversary.centers must be positive");
  if (!(cfg.norm_sq > 0.0) || !std::isfinite(cfg.norm_sq)) throw ConfigError("adversary.norm_sq must be positive");
  if (cfg.adversary == "shattering") {
    if (!(cfg.schedule.beta > 0.0 && cfg.schedule.beta <= 2.0)) {
      throw ConfigError("shattering adversary needs 0 < kernel.beta <= 2");
    }
    const std::size_t smallest = cfg.sweep == "horizons" ? std::min(cfg.horizon, cfg.first_checkpoint) : cfg.horizon;
    if (shattering_grid_for(smallest, cfg.d) == 0) {
      throw ConfigError("horizon " + std::to_string(smallest) + " is too short for a shattering stream in d = " +
                        std::to_string(cfg.d));
    }
  }
  if (cfg.forecaster == "ewa") {
    if (cfg.d != 1) throw ConfigError("forecaster 'ewa' supports d = 1 only");
    try {
      if (ExpertNet::count_experts(cfg.ewa_beta, cfg.m, cfg.ewa_epsilon) > static_cast<double>(cfg.ewa_max_experts)) {
        throw ConfigError("EWA net exceeds ewa.max_experts; raise ewa.epsilon");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("ewa: ") + e.what());
    }
  }
  if (cfg.effdim_sizes.empty() || cfg.effdim_taus.empty() || cfg.effdim_layouts.empty()) {
    throw ConfigError("effdim.sizes, effdim.taus and effdim.layouts must be nonempty");
  }
  for (auto n : cfg.effdim_sizes) {
    if (n < 1) throw ConfigError("effdim.sizes must be positive");
  }
  for (double t : cfg.effdim_taus) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("effdim.taus must be positive");
  }
  for (const auto& l : cfg.effdim_layouts) {
    if (!one_of(l, {"equispaced", "uniform", "clustered"})) {
      throw ConfigError("unknown effdim layout '" + l + "'");
    }
  }
}

long shattering_grid_for(std::size_t horizon, int d) {
  auto rounds = [d](long n_grid) {
    const long k = cells_per_axis(n_grid, d);
    double total = 1.0;
    for (int i = 0; i < d; ++i) total *= static_cast<double>(k);
    return total;
  };
  long best = 0;
  for (long n = 1; rounds(n) <= static_cast<double>(horizon); ++n) best = n;
  return best;
}

GameSetup make_setup(const ExperimentConfig& cfg, std::size_t horizon, std::uint64_t seed) {
  GameSetup setup;
  Rng rng(seed);
  Schedule sched = cfg.schedule;
  if (cfg.adversary == "shattering") {
    const long n_grid = shattering_grid_for(horizon, cfg.d);
    if (n_grid == 0) {
      throw ConfigError("horizon " + std::to_string(horizon) + " is too short for a shattering stream");
    }
    auto game = shattering_stream(n_grid, cfg.d, cfg.m, cfg.schedule.beta, rng);
    setup.stream = std::move(game.stream);
    setup.comparators.push_back(std::make_unique<BumpComparator>(std::move(game.comparator)));
  } else {
    sched.horizon = static_cast<long>(horizon);
    const KernelChoice choice = schedule_tau(sched, cfg.d);
    if (cfg.comparator == "representer") {
      auto f = random_representer(SobolevKernel(cfg.d, choice.s), cfg.centers, cfg.norm_sq, rng);
      setup.comparators.push_back(std::make_unique<RepresenterComparator>(std::move(f)));
    } else {
      setup.comparators.push_back(std::make_unique<ZeroComparator>());
    }
    setup.stream = iid_stream(*setup.comparators.front(), cfg.d, cfg.m, cfg.noise_sd, horizon, rng);
  }
  if (setup.comparators.front()->id() != "zero") {
    setup.comparators.push_back(std::make_unique<ZeroComparator>());
  }
  sched.horizon = static_cast<long>(setup.stream.size());
  const KernelChoice choice = schedule_tau(sched, cfg.d);
  setup.s = choice.s;
  setup.tau = choice.tau;
  return setup;
}

std::unique_ptr<Forecaster> make_forecaster(const ExperimentConfig& cfg, const std::string& id,
                                            const GameSetup& setup) {
  if (id == "kaar" || id == "kaar_clipped") {
    return std::make_unique<KaarPlayer>(KaarForecaster(SobolevKernel(cfg.d, setup.s), setup.tau, cfg.m),
                                        id == "kaar_clipped");
  }
  if (id == "ewa") {
    return std::make_unique<EwaPlayer>(
        ExpertNet::build(cfg.ewa_beta, cfg.m, cfg.ewa_epsilon, cfg.d, cfg.ewa_max_experts));
  }
  if (id == "zero") return std::make_unique<ZeroPlayer>();
  throw ConfigError("unknown forecaster '" + id + "'");
}

namespace {

std::vector<const Comparator*> views(const GameSetup& setup) {
  std::vector<const Comparator*> out;
  for (const auto& c : setup.comparators) out.push_back(c.get());
  return out;
}

struct GameOutput {
  GameTrace trace;
  std::vector<std::vector<double>> comparator_loss;
};

GameOutput run_one(const ExperimentConfig& cfg, std::size_t horizon, std::uint64_t seed, bool keep_losses) {
  const GameSetup setup = make_setup(cfg, horizon, seed);
  auto forecaster = make_forecaster(cfg, cfg.forecaster, setup);
  const auto comps = views(setup);
  const auto checkpoints = pow2_checkpoints(setup.stream.size(), cfg.first_checkpoint);
  GameOutput out;
  out.trace = play(*forecaster, setup.stream, comps, checkpoints);
  if (keep_losses) out.comparator_loss = comparator_losses(setup.stream, comps);
  return out;
}

}  // namespace

GameTrace run_game(const ExperimentConfig& cfg, std::size_t horizon, std::uint64_t seed) {
  return run_one(cfg, horizon, seed, false).trace;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& func) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) func(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        func(i);
      } catch (...) {
        const std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

BenchResult run_bench(const ExperimentConfig& cfg, OutputTransaction* out) {
  validate(cfg);
  const bool per_horizon = cfg.sweep == "horizons";
  const std::vector<std::size_t> horizons =
      per_horizon ? pow2_checkpoints(cfg.horizon, cfg.first_checkpoint) : std::vector<std::size_t>{cfg.horizon};

  struct Job {
    std::uint64_t seed;
    std::size_t horizon;
    GameOutput result;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < cfg.seeds; ++k) {
    for (std::size_t h : horizons) jobs.push_back({cfg.seed + k, h, {}});
  }
  // Largest games first so the pool drains evenly.
  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return jobs[a].horizon > jobs[b].horizon; });
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    Job& job = jobs[order[i]];
    job.result = run_one(cfg, job.horizon, job.seed, out != nullptr);
  });

  BenchResult result;
  if (cfg.schedule.regime != Regime::manual) result.target = target_exponent(cfg.schedule, cfg.d);
  std::vector<SummaryRow> rows;
  double slope_sum = 0.0;
  for (std::size_t k = 0; k < cfg.seeds; ++k) {
    SeedResult sr;
    sr.seed = cfg.seed + k;
    for (std::size_t j = 0; j < horizons.size(); ++j) {
      const GameTrace& trace = jobs[k * horizons.size() + j].result.trace;
      const auto& track = trace.comparators.front();
      if (per_horizon) {
        sr.n.push_back(trace.rounds.size());
        sr.regret.push_back(trace.final_regret(0));
      } else {
        sr.n = trace.checkpoints;
        sr.regret = track.regret_at_checkpoint;
      }
    }
    if (sr.n.size() >= 4) {
      sr.fit = estimate_exponent(sr.n, sr.regret);
      if (!sr.fit->all_floored) {
        slope_sum += sr.fit->fit.slope;
        ++result.fitted_seeds;
      }
    }
    for (std::size_t i = 0; i < sr.n.size(); ++i) {
      rows.push_back({sr.seed, sr.n[i], sr.regret[i],
                      sr.fit ? sr.fit->fit.slope : std::numeric_limits<double>::quiet_NaN()});
    }
    result.seeds.push_back(std::move(sr));
  }
  if (result.fitted_seeds > 0) result.mean_slope = slope_sum / static_cast<double>(result.fitted_seeds);
  result.n = result.seeds.front().n;
  for (std::size_t i = 0; i < result.n.size(); ++i) {
    double mean = 0.0;
    for (const auto& sr : result.seeds) mean += sr.regret.at(i);
    result.mean_regret.push_back(mean / static_cast<double>(result.seeds.size()));
  }
  if (result.n.size() >= 4) result.mean_curve_fit = estimate_exponent(result.n, result.mean_regret);

  if (out) {
    for (const auto& job : jobs) {
      const std::string name = "trace_seed" + std::to_string(job.seed) + "_n" +
                               std::to_string(job.result.trace.rounds.size()) + ".csv";
      write_trace_csv(out->path(name), job.result.trace, job.result.comparator_loss);
    }
    write_summary_csv(out->path("summary.csv"), rows);
    std::vector<double> xs(result.n.begin(), result.n.end());
    const auto& ys = result.mean_regret;
    write_plot_data(out->path("regret.dat"), xs, ys);
    std::ofstream cfg_out(out->path("config.ini"));
    write_config(cfg_out, cfg);
  }
  return result;
}

PointSet make_layout(const std::string& layout, std::size_t n, int d, std::uint64_t seed) {
  PointSet pts(d);
  pts.reserve(n);
  std::vector<double> x(static_cast<std::size_t>(d));
  if (layout == "equispaced") {
    // Lattice with ceil(n^{1/d}) nodes per axis, first n nodes in
    // lexicographic order; for d = 1 this is the uniform grid on [-1, 1].
    std::size_t per_axis = 1;
    while (true) {
      double total = 1.0;
      for (int i = 0; i < d; ++i) total *= static_cast<double>(per_axis);
      if (total >= static_cast<double>(n)) break;
      ++per_axis;
    }
    const double step = per_axis > 1 ? 2.0 / static_cast<double>(per_axis - 1) : 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t rem = t;
      for (int j = d - 1; j >= 0; --j) {
        x[static_cast<std::size_t>(j)] = per_axis > 1 ? -1.0 + step * static_cast<double>(rem % per_axis) : 0.0;
        rem /= per_axis;
      }
      pts.push_back(x);
    }
    return pts;
  }
  Rng rng(seed);
  if (layout == "uniform") {
    for (std::size_t t = 0; t < n; ++t) {
      for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
      pts.push_back(x);
    }
    return pts;
  }
  if (layout == "clustered") {
    constexpr std::size_t kClusters = 4;
    std::vector<std::vector<double>> centers(kClusters, std::vector<double>(static_cast<std::size_t>(d)));
    for (auto& c : centers) {
      for (auto& ci : c) ci = rng.uniform(-0.8, 0.8);
    }
    for (std::size_t t = 0; t < n; ++t) {
      const auto& c = centers[t % kClusters];
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::clamp(c[j] + 0.05 * rng.normal(), -1.0, 1.0);
      pts.push_back(x);
    }
    return pts;
  }
  throw ConfigError("unknown layout '" + layout + "'");
}

std::vector<EffdimResult> run_effdim(const ExperimentConfig& cfg, std::uint64_t seed, OutputTransaction* out) {
  validate(cfg);
  if (!(cfg.effdim_s > 0.5 * cfg.d)) throw ConfigError("effdim.s must exceed d/2");
  const SobolevKernel kernel(cfg.d, cfg.effdim_s);
  const std::size_t sizes = cfg.effdim_sizes.size();
  std::vector<std::vector<double>> spectra(cfg.effdim_layouts.size() * sizes);
  std::vector<std::size_t> order(spectra.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cfg.effdim_sizes[a % sizes] > cfg.effdim_sizes[b % sizes];
  });
  parallel_for(spectra.size(), cfg.threads, [&](std::size_t i) {
    const std::size_t job = order[i];
    const auto& layout = cfg.effdim_layouts[job / sizes];
    const PointSet pts = make_layout(layout, cfg.effdim_sizes[job % sizes], cfg.d, seed);
    spectra[job] = gram_spectrum(gram(kernel, pts));
  });

  std::vector<EffdimResult> results;
  for (std::size_t l = 0; l < cfg.effdim_layouts.size(); ++l) {
    std::vector<EffDimReport> all;
    for (double tau : cfg.effdim_taus) {
      EffdimResult r;
      r.layout = cfg.effdim_layouts[l];
      r.tau = tau;
      for (std::size_t k = 0; k < sizes; ++k) {
        const auto& spec = spectra[l * sizes + k];
        EffDimReport rep;
        rep.n = cfg.effdim_sizes[k];
        rep.tau = tau;
        rep.value = effective_dimension(spec, tau);
        rep.eigenvalues = spec;
        r.reports.push_back(std::move(rep));
      }
      if (r.reports.size() >= 4) r.fit = scaling_fit(r.reports);
      all.insert(all.end(), r.reports.begin(), r.reports.end());
      results.push_back(std::move(r));
    }
    if (out) write_effdim_csv(out->path("effdim_" + cfg.effdim_layouts[l] + ".csv"), all);
  }
  return results;
}

}  // namespace kaar
