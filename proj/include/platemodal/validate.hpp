#pragma once

#include <string>
#include <vector>

namespace platemodal {

struct CheckResult {
  std::string group;
  bool passed;
  std::string detail;  // worst measured deviation, fixed formatting
};

struct ValidateOptions {
  /// Test hook: offset added to one kappa entry on the double-sum side of
  /// the vectorization check.  Non-zero values must make that group fail.
  double kappa_perturbation = 0.0;
};

/// Deterministic self-check suites (fixed seeds): basis residuals and
/// orthonormality, coupling-matrix convergence, Navier oracle, vectorization
/// consistency, spectral realness/orthogonality, commutation property,
/// mode-norm identity.
std::vector<CheckResult> run_self_checks(const ValidateOptions& options = {});

}  // namespace platemodal
