#include "cubewalk/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cubewalk/dynamics.hpp"
#include "cubewalk/oracle.hpp"

namespace cubewalk {

namespace {

ConnectionSet random_set(int n, std::mt19937_64& rng) {
  std::vector<Label> elems;
  for (Label x = 1; x < group_order(n); ++x) {
    if (rng() & 1u) elems.push_back(x);
  }
  return ConnectionSet(n, std::move(elems));
}

}  // namespace

CrosscheckResult run_crosscheck(const CrosscheckOptions& options) {
  oracle::check_dense_dimension(options.n_max);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> dim(1, options.n_max);
  std::uniform_real_distribution<double> time(0.0, 4.0 * std::numbers::pi);

  CrosscheckResult result;
  for (int c = 0; c < options.cases; ++c) {
    const int n = dim(rng);
    const auto set = random_set(n, rng);
    const double t = time(rng);

    const auto u = oracle::evolve_dense(set, t);
    const auto series = oracle::evolve_dense_series(set, t);
    const auto amps = all_amplitudes(set, t);
    const double scale = std::ldexp(1.0, -n);
    for (Label a = 0; a < group_order(n); ++a) {
      for (Label b = 0; b < group_order(n); ++b) {
        const auto dense = u(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a));
        result.max_formula_deviation =
            std::max(result.max_formula_deviation, std::abs(dense - amps[a ^ b] * scale));
      }
    }
    result.max_path_deviation =
        std::max(result.max_path_deviation, (u - series).cwiseAbs().maxCoeff());
    result.max_unitarity_defect =
        std::max(result.max_unitarity_defect, oracle::unitarity_defect(u));
    ++result.cases;
  }

  for (int c = 0; c < options.commutation_pairs; ++c) {
    const auto a = random_set(options.commutation_n, rng);
    const auto b = random_set(options.commutation_n, rng);
    result.max_commutator = std::max(result.max_commutator, oracle::commutation_check(a, b));
    ++result.commutation_pairs;
  }
  return result;
}

}  // namespace cubewalk
