#include "kaar/csv.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace kaar {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.precision(std::numeric_limits<double>::max_digits10);
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

}  // namespace

OutputTransaction::OutputTransaction(std::filesystem::path dir) : dir_(std::move(dir)) {}

OutputTransaction::~OutputTransaction() {
  if (committed_) return;
  for (const auto& f : files_) {
    std::error_code ec;
    std::filesystem::remove(f, ec);
  }
}

std::filesystem::path OutputTransaction::path(const std::string& name) {
  std::filesystem::create_directories(dir_);
  files_.push_back(dir_ / name);
  return files_.back();
}

std::vector<std::vector<double>> comparator_losses(const Stream& stream,
                                                   std::span<const Comparator* const> comparators) {
  std::vector<std::vector<double>> out(comparators.size(), std::vector<double>(stream.size()));
  for (std::size_t i = 0; i < comparators.size(); ++i) {
    for (std::size_t t = 0; t < stream.size(); ++t) {
      const double e = stream.labels[t] - (*comparators[i])(stream.inputs[t]);
      out[i][t] = e * e;
    }
  }
  return out;
}

void write_trace_csv(const std::filesystem::path& path, const GameTrace& trace,
                     const std::vector<std::vector<double>>& comparator_loss) {
  if (comparator_loss.size() != trace.comparators.size()) {
    throw std::invalid_argument("write_trace_csv: one loss series per comparator expected");
  }
  auto out = open_csv(path);
  out << "t,y,yhat,loss,cum_loss";
  for (const auto& c : trace.comparators) out << ",regret_" << c.id;
  out << '\n';
  std::vector<CompensatedSum> comp(comparator_loss.size());
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const Round& r = trace.rounds[t];
    out << r.t << ',' << r.y << ',' << r.yhat << ',' << r.loss << ',' << r.cum_loss;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      comp[i].add(comparator_loss[i].at(t));
      out << ',' << r.cum_loss - comp[i].value();
    }
    out << '\n';
  }
  finish(out, path);
}

void write_stream_csv(const std::filesystem::path& path, const Stream& stream) {
  auto out = open_csv(path);
  out << 't';
  for (int j = 0; j < stream.inputs.dim(); ++j) out << ",x_" << j + 1;
  out << ",y\n";
  for (std::size_t t = 0; t < stream.size(); ++t) {
    out << t + 1;
    for (double v : stream.inputs[t]) out << ',' << v;
    out << ',' << stream.labels[t] << '\n';
  }
  finish(out, path);
}

void write_gram_csv(const std::filesystem::path& path, const GramMatrix& gram) {
  auto out = open_csv(path);
  out << "i,j,value\n";
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = i; j < gram.cols(); ++j) {
      out << i << ',' << j << ',' << gram(i, j) << '\n';
    }
  }
  finish(out, path);
}

void write_effdim_csv(const std::filesystem::path& path, std::span<const EffDimReport> reports) {
  auto out = open_csv(path);
  out << "n,tau,d_eff,lambda_max,lambda_min\n";
  for (const auto& r : reports) {
    out << r.n << ',' << r.tau << ',' << r.value << ',' << r.lambda_max() << ',' << r.lambda_min() << '\n';
  }
  finish(out, path);
}

void write_summary_csv(const std::filesystem::path& path, std::span<const SummaryRow> rows) {
  auto out = open_csv(path);
  out << "seed,n,regret,slope\n";
  for (const auto& r : rows) {
    out << r.seed << ',' << r.n << ',' << r.regret << ',' << r.slope << '\n';
  }
  finish(out, path);
}

void write_plot_data(const std::filesystem::path& path, std::span<const double> x,
                     std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("write_plot_data: length mismatch");
  }
  auto out = open_csv(path);
  for (std::size_t i = 0; i < x.size(); ++i) out << x[i] << ' ' << y[i] << '\n';
  finish(out, path);
}

}  // namespace kaar
