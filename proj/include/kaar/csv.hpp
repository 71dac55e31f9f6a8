#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kaar/adversary.hpp"
#include "kaar/effective_dimension.hpp"
#include "kaar/game.hpp"
#include "kaar/sobolev_kernel.hpp"

namespace kaar {

/// Files written by one command. Unless commit() is called, every file
/// registered through path() is removed on destruction, so a failed run
/// leaves no partial outputs behind.
class OutputTransaction {
 public:
  explicit OutputTransaction(std::filesystem::path dir);
  ~OutputTransaction();
  OutputTransaction(const OutputTransaction&) = delete;
  OutputTransaction& operator=(const OutputTransaction&) = delete;

  /// Creates the directory on first use and registers dir/name.
  std::filesystem::path path(const std::string& name);
  void commit() { committed_ = true; }
  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<std::filesystem::path>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> files_;
  bool committed_ = false;
};

/// t,y,yhat,loss,cum_loss,regret_<id>... with regret columns running
/// against each comparator; `comparator_loss[i][t]` is comparator i's loss
/// at round t+1.
void write_trace_csv(const std::filesystem::path& path, const GameTrace& trace,
                     const std::vector<std::vector<double>>& comparator_loss);

/// Per-round comparator losses, aligned with the trace rows.
std::vector<std::vector<double>> comparator_losses(const Stream& stream,
                                                   std::span<const Comparator* const> comparators);

/// t,x_1..x_d,y
void write_stream_csv(const std::filesystem::path& path, const Stream& stream);

/// i,j,value over the upper triangle, zero-based indices.
void write_gram_csv(const std::filesystem::path& path, const GramMatrix& gram);

/// n,tau,d_eff,lambda_max,lambda_min
void write_effdim_csv(const std::filesystem::path& path, std::span<const EffDimReport> reports);

struct SummaryRow {
  std::uint64_t seed;
  std::size_t n;
  double regret;
  double slope;  // NaN when the seed has no fit
};

/// seed,n,regret,slope
void write_summary_csv(const std::filesystem::path& path, std::span<const SummaryRow> rows);

/// Whitespace-separated "x y" pairs, one per line.
void write_plot_data(const std::filesystem::path& path, std::span<const double> x,
                     std::span<const double> y);

}  // namespace kaar
