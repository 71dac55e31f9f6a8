#pragma once

#include <string>
#include <vector>

namespace kaar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Test hook: perturbs the Gram matrices seen by the PSD check so that
  /// they become indefinite. The check must then fail.
  bool corrupt_gram = false;
  std::size_t threads = 1;
};

/// Property suite behind `kaar verify`: Bessel references and recurrence,
/// kernel PSD and diagonal limit, incremental versus direct KAAR, clipping
/// dominance, the EWA aggregation bound, the bump class and the two forms
/// of the effective dimension. Deterministic.
std::vector<CheckResult> run_property_suite(const VerifyOptions& options = {});

}  // namespace kaar
