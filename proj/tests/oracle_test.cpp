#include "cubewalk/oracle.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "cubewalk/dynamics.hpp"
#include "cubewalk/pst.hpp"
#include "cubewalk/spectral.hpp"
#include "gtest/gtest.h"
#include "support/brute_force.hpp"

using namespace cubewalk;
using namespace cubewalk::oracle;

TEST(regular_rep, identity_and_pauli) {
  EXPECT_EQ(regular_rep(GroupElement(0, 3)), IntMatrix::Identity(8, 8));
  IntMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  EXPECT_EQ(regular_rep(GroupElement(1, 1)), sx);
}

TEST(regular_rep, is_xor_permutation) {
  for (int n = 1; n <= 5; ++n) {
    const Label order = Label{1} << n;
    for (Label w = 0; w < order; ++w) {
      const auto r = regular_rep(GroupElement(w, n));
      for (Label x = 0; x < order; ++x)
        for (Label y = 0; y < order; ++y) ASSERT_EQ(r(y, x), y == (x ^ w) ? 1 : 0);
    }
  }
}

TEST(adjacency, hypercube_two) {
  const auto a = adjacency_dense(ConnectionSet::hypercube(2));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) EXPECT_EQ(a(x, y), __builtin_popcount(x ^ y) == 1 ? 1 : 0);
  EXPECT_EQ(adjacency_dense(ConnectionSet::empty(3)), IntMatrix::Zero(8, 8));
}

TEST(adjacency, eigenvalues_match_spectrum_exhaustive_n4) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << ((1 << n) - 1);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const auto set = ConnectionSet::from_mask(n, m);
      auto lambdas = reference::direct_spectrum(set);
      std::sort(lambdas.begin(), lambdas.end());
      auto eig = adjacency_eigenvalues(set);
      std::sort(eig.begin(), eig.end());
      ASSERT_EQ(eig.size(), lambdas.size());
      for (std::size_t i = 0; i < eig.size(); ++i)
        ASSERT_NEAR(eig[i], static_cast<double>(lambdas[i]), 1e-9) << format_set(set);
      const auto diag = hadamard_diagonal(set);
      const auto spec = spectrum(set);
      ASSERT_TRUE(std::equal(diag.begin(), diag.end(), spec.values().begin()));
    }
  }
}

TEST(adjacency, hypercube_three_multiset) {
  auto eig = adjacency_eigenvalues(ConnectionSet::hypercube(3));
  std::sort(eig.begin(), eig.end());
  const double expected[] = {-3, -1, -1, -1, 1, 1, 1, 3};
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(eig[i], expected[i], 1e-9);
}

TEST(adjacency, dimension_cap) {
  EXPECT_THROW(adjacency_dense(ConnectionSet::hypercube(11)), InvalidInput);
}

TEST(evolve, time_zero_is_identity) {
  const auto u = evolve_dense(parse_set("011,101,111", 3), 0.0);
  EXPECT_LT((u - ComplexMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(evolve, hypercube_half_pi_column) {
  const auto u = evolve_dense(ConnectionSet::hypercube(3), std::numbers::pi / 2);
  for (int b = 0; b < 8; ++b) EXPECT_NEAR(std::abs(u(b, 0)), b == 7 ? 1.0 : 0.0, 1e-12);
  const auto f = all_fidelities(ConnectionSet::hypercube(3), std::numbers::pi / 2);
  for (int b = 0; b < 8; ++b) EXPECT_NEAR(std::abs(u(b, 0)), f[b], 1e-12);
}

TEST(evolve, group_property_and_unitarity) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> time(0.0, 4 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto set = reference::random_set(n, rng);
    const double t = time(rng);
    const ComplexMatrix product = evolve_dense(set, t) * evolve_dense(set, -t);
    const auto size = static_cast<Eigen::Index>(1) << n;
    ASSERT_LT((product - ComplexMatrix::Identity(size, size)).cwiseAbs().maxCoeff(), 1e-10);
    ASSERT_LT(unitarity_defect(evolve_dense_series(set, t)), 1e-10);
  }
}

TEST(evolve, paths_agree_with_closed_form) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> time(0.0, 4 * std::numbers::pi);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto set = reference::random_set(n, rng);
    const double t = time(rng);
    const auto diag = evolve_dense(set, t);
    const auto series = evolve_dense_series(set, t);
    const auto amps = all_amplitudes(set, t);
    const double scale = 1.0 / static_cast<double>(1 << n);
    for (Label a = 0; a < amps.size(); ++a)
      for (Label b = 0; b < amps.size(); ++b) {
        const auto closed = amps[a ^ b] * scale;
        ASSERT_LT(std::abs(diag(b, a) - closed), 1e-8);
        ASSERT_LT(std::abs(series(b, a) - closed), 1e-8);
      }
  }
}

TEST(commutation, examples) {
  EXPECT_EQ(commutation_check(ConnectionSet::hypercube(3), folded_cube(3)), 0);
  EXPECT_EQ(commutation_check(parse_set("011,110", 3), ConnectionSet::empty(3)), 0);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    ASSERT_EQ(commutation_check(reference::random_set(4, rng), reference::random_set(4, rng)), 0);
  }
  EXPECT_THROW(commutation_check(ConnectionSet::hypercube(3), ConnectionSet::hypercube(4)),
               InvalidInput);
}

TEST(hadamard, squares_to_scaled_identity) {
  for (int n = 1; n <= 6; ++n) {
    const auto h = hadamard(n);
    const auto size = static_cast<Eigen::Index>(1) << n;
    EXPECT_EQ(h * h, IntMatrix::Identity(size, size) * size);
  }
}
