#pragma once

// Randomized agreement check between the dense oracle and the fast
// spectral formulas. Backs `cubewalk oracle-verify`.

#include <cstdint>

namespace cubewalk {

struct CrosscheckOptions {
  int cases = 100;
  int n_max = 6;
  std::uint64_t seed = 1;
  int commutation_pairs = 50;
  int commutation_n = 4;
  double tolerance = 1e-8;
  double unitarity_tolerance = 1e-10;
};

struct CrosscheckResult {
  int cases = 0;
  /// max |U[b,a] - T(a,b)/2^n| over all cases and pairs.
  double max_formula_deviation = 0.0;
  /// max entrywise gap between diagonalization and series exponentials.
  double max_path_deviation = 0.0;
  double max_unitarity_defect = 0.0;
  std::int64_t max_commutator = 0;
  int commutation_pairs = 0;

  bool pass(const CrosscheckOptions& opts) const {
    return max_formula_deviation <= opts.tolerance && max_path_deviation <= opts.tolerance &&
           max_unitarity_defect <= opts.unitarity_tolerance && max_commutator == 0;
  }
};

CrosscheckResult run_crosscheck(const CrosscheckOptions& options);

}  // namespace cubewalk
