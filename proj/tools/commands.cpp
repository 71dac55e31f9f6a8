#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kaar/csv.hpp"
#include "kaar/ewa.hpp"
#include "kaar/experiment.hpp"
#include "kaar/verification.hpp"

namespace kaar::cli {

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<std::size_t> threads;
  std::vector<std::string> overrides;
  bool corrupt_gram = false;
};

ExperimentConfig resolve_config(const Options& opt) {
  std::vector<std::string> overrides;
  if (opt.seed) overrides.push_back("game.seed=" + std::to_string(*opt.seed));
  if (opt.threads) overrides.push_back("game.threads=" + std::to_string(*opt.threads));
  overrides.insert(overrides.end(), opt.overrides.begin(), opt.overrides.end());
  if (opt.config.empty()) {
    std::istringstream empty;
    return parse_config(empty, overrides);
  }
  return load_config(opt.config, overrides);
}

std::filesystem::path output_dir(const Options& opt, const ExperimentConfig& cfg) {
  if (!opt.out.empty()) return opt.out;
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "out";
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const ExperimentConfig cfg = resolve_config(opt);
  OutputTransaction tx(output_dir(opt, cfg));
  const BenchResult result = run_bench(cfg, &tx);
  out << "regime " << to_string(cfg.schedule.regime) << ", d = " << cfg.d << ", beta = " << cfg.schedule.beta
      << ", adversary " << cfg.adversary << ", forecaster " << cfg.forecaster << ", sweep " << cfg.sweep << "\n";
  out << std::setw(8) << "seed" << std::setw(10) << "slope" << std::setw(10) << "r2" << std::setw(16)
      << "final regret" << "\n";
  for (const auto& sr : result.seeds) {
    out << std::setw(8) << sr.seed;
    if (sr.fit) {
      out << std::setw(10) << fixed(sr.fit->fit.slope) << std::setw(10) << fixed(sr.fit->fit.r_squared);
    } else {
      out << std::setw(10) << "-" << std::setw(10) << "-";
    }
    out << std::setw(16) << fixed(sr.regret.back(), 6);
    if (sr.fit && sr.fit->floored > 0) out << "  (" << sr.fit->floored << " nonpositive regrets floored)";
    out << "\n";
  }
  if (result.seeds.front().n.size() < 4) {
    out << "fit skipped: fewer than 4 checkpoints\n";
  }
  if (result.target) out << "theory target exponent    " << fixed(*result.target) << "\n";
  if (result.mean_curve_fit && !result.mean_curve_fit->all_floored) {
    out << "slope of seed-mean regret " << fixed(result.mean_curve_fit->fit.slope) << " (r2 "
        << fixed(result.mean_curve_fit->fit.r_squared) << ")\n";
  }
  if (result.mean_slope) {
    out << "mean of per-seed slopes   " << fixed(*result.mean_slope) << " over " << result.fitted_seeds << " seeds\n";
  }
  out << "wrote " << tx.files().size() << " files to " << tx.dir().string() << "\n";
  tx.commit();
  return kOk;
}

int cmd_effdim(const Options& opt, std::ostream& out) {
  const ExperimentConfig cfg = resolve_config(opt);
  OutputTransaction tx(output_dir(opt, cfg));
  const auto results = run_effdim(cfg, cfg.seed, &tx);
  const double target = cfg.d / (2.0 * cfg.effdim_s);
  out << "d = " << cfg.d << ", s = " << cfg.effdim_s << ", theory target slope d/2s = " << fixed(target) << "\n";
  for (const auto& r : results) {
    out << "layout " << r.layout << ", tau = " << r.tau << "\n";
    out << std::setw(10) << "n" << std::setw(14) << "d_eff" << std::setw(14) << "lambda_max" << std::setw(14)
        << "lambda_min" << "\n";
    for (const auto& rep : r.reports) {
      out << std::setw(10) << rep.n << std::setw(14) << fixed(rep.value) << std::setw(14)
          << std::setprecision(6) << rep.lambda_max() << std::setw(14) << rep.lambda_min() << "\n";
    }
    if (r.fit) {
      out << "  fitted slope " << fixed(r.fit->slope) << " (r2 " << fixed(r.fit->r_squared) << ") vs target "
          << fixed(target) << "\n";
    } else {
      out << "  slope skipped: fewer than 4 sizes\n";
    }
  }
  out << "wrote " << tx.files().size() << " files to " << tx.dir().string() << "\n";
  tx.commit();
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  VerifyOptions vo;
  vo.corrupt_gram = opt.corrupt_gram;
  vo.threads = opt.threads.value_or(1);
  const auto results = run_property_suite(vo);
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(50) << r.name << std::right << r.detail
        << "\n";
    all = all && r.passed;
  }
  out << (all ? "all checks passed\n" : "verification FAILED\n");
  return all ? kOk : kVerification;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  ExperimentConfig cfg = resolve_config(opt);
  if (cfg.d != 1) {
    throw ConfigError("compare: EWA supports d = 1 only (configured d = " + std::to_string(cfg.d) + ")");
  }
  const std::string kaar_id = cfg.forecaster == "kaar_clipped" ? "kaar_clipped" : "kaar";
  {
    ExperimentConfig probe = cfg;
    probe.forecaster = "ewa";
    validate(probe);
  }
  OutputTransaction tx(output_dir(opt, cfg));
  out << std::setw(8) << "seed" << std::setw(16) << "regret " + kaar_id << std::setw(16) << "regret ewa" << "\n";
  std::size_t kaar_wins = 0;
  for (std::size_t k = 0; k < cfg.seeds; ++k) {
    const std::uint64_t seed = cfg.seed + k;
    const GameSetup setup = make_setup(cfg, cfg.horizon, seed);
    const Comparator* f = setup.comparators.front().get();
    const std::span<const Comparator* const> comps(&f, 1);
    const std::vector<std::size_t> last{setup.stream.size()};
    auto kaar = make_forecaster(cfg, kaar_id, setup);
    auto ewa = make_forecaster(cfg, "ewa", setup);
    const GameTrace a = play(*kaar, setup.stream, comps, last);
    const GameTrace b = play(*ewa, setup.stream, comps, last);
    const auto comp_loss = comparator_losses(setup.stream, comps);

    std::ofstream csv(tx.path("compare_seed" + std::to_string(seed) + ".csv"));
    csv.precision(17);
    csv << "t,regret_" << kaar_id << ",regret_ewa\n";
    CompensatedSum c;
    for (std::size_t t = 0; t < setup.stream.size(); ++t) {
      c.add(comp_loss[0][t]);
      csv << t + 1 << ',' << a.rounds[t].cum_loss - c.value() << ',' << b.rounds[t].cum_loss - c.value() << '\n';
    }
    if (!csv) throw std::runtime_error("failed writing compare CSV");
    out << std::setw(8) << seed << std::setw(16) << fixed(a.final_regret(), 6) << std::setw(16)
        << fixed(b.final_regret(), 6) << "\n";
    if (a.final_regret() < b.final_regret()) ++kaar_wins;
  }
  out << kaar_id << " has the smaller final regret on " << kaar_wins << " of " << cfg.seeds << " seeds\n";
  out << "wrote " << tx.files().size() << " files to " << tx.dir().string() << "\n";
  tx.commit();
  return kOk;
}

int cmd_net_info(const Options& opt, std::ostream& out) {
  const ExperimentConfig cfg = resolve_config(opt);
  Schedule sched = cfg.schedule;
  sched.horizon = static_cast<long>(cfg.horizon);
  const KernelChoice kc = schedule_tau(sched, cfg.d);
  const SobolevKernel kernel(cfg.d, kc.s);
  out << "KAAR\n";
  out << "  regime " << to_string(cfg.schedule.regime) << ", d = " << cfg.d << ", horizon " << cfg.horizon << "\n";
  out << "  s = " << kc.s << ", tau = " << kc.tau << ", kappa^2 = " << kernel.kappa_sq() << "\n";
  if (cfg.schedule.regime != Regime::manual) {
    out << "  theory target exponent " << fixed(target_exponent(cfg.schedule, cfg.d)) << "\n";
  }
  out << "EWA\n";
  if (cfg.d != 1) {
    out << "  unsupported for d = " << cfg.d << " (d = 1 only)\n";
    return kOk;
  }
  const double count = ExpertNet::count_experts(cfg.ewa_beta, cfg.m, cfg.ewa_epsilon);
  out << "  beta = " << cfg.ewa_beta << ", M = " << cfg.m << ", epsilon = " << cfg.ewa_epsilon << "\n";
  out << "  experts N = " << std::setprecision(15) << count << ", ln N = " << std::setprecision(6) << std::log(count)
      << "\n";
  if (count <= static_cast<double>(cfg.ewa_max_experts)) {
    const ExpertNet net = ExpertNet::build(cfg.ewa_beta, cfg.m, cfg.ewa_epsilon, 1, cfg.ewa_max_experts);
    out << "  cells " << net.cells() << ", value grid " << net.grid().size() << " levels, eta = " << net.eta() << "\n";
    out << "  aggregation bound ln(N)/eta = " << std::log(count) / net.eta() << "\n";
  } else {
    out << "  exceeds ewa.max_experts = " << cfg.ewa_max_experts << "; not enumerable\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernel aggregating algorithm for regression: experiments and checks", "kaar"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "INI configuration file")->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "First seed (overrides game.seed)");
    sub->add_option("--out", opt.out, std::string("Output directory (default: output.dir, then $") + kOutDirEnv +
                                          ", then ./out)");
    sub->add_option("--threads", opt.threads, "Worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
    sub->add_option("--override", opt.overrides, "section.key=value, repeatable")->allow_extra_args(false);
  };

  CLI::App* bench = app.add_subcommand("bench", "Run the regret experiment grid and fit growth exponents");
  CLI::App* effdim = app.add_subcommand("effdim", "Effective dimension over an (n, tau) grid");
  CLI::App* verify = app.add_subcommand("verify", "Run the property suite");
  CLI::App* compare = app.add_subcommand("compare", "KAAR against EWA on identical streams (d = 1)");
  CLI::App* net_info = app.add_subcommand("net-info", "Describe the scheduled kernel and the EWA net");
  for (CLI::App* sub : {bench, effdim, verify, compare, net_info}) add_common(sub);
  verify->add_flag("--inject-corrupt-gram", opt.corrupt_gram)->group("");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (bench->parsed()) return cmd_bench(opt, out);
    if (effdim->parsed()) return cmd_effdim(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (compare->parsed()) return cmd_compare(opt, out);
    if (net_info->parsed()) return cmd_net_info(opt, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const NumericalBreakdown& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kNumerical;
  }
  err << app.help();
  return kUsage;
}

}  // namespace kaar::cli
