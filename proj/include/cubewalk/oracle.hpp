#pragma once

// Dense reference implementation used to cross-check the fast paths.
//
// Everything here is built from tensor products and dense linear algebra:
// rho(w) is the Kronecker product of sigma_x at set bits and identities
// elsewhere, A = sum rho(w), and exp(-iAt) is formed either through the dense
// Hadamard diagonalization H A H / 2^n or by scaling-and-squaring a Taylor
// series. No Walsh-Hadamard butterflies or spectrum helpers are used.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "cubewalk/bitspace.hpp"

namespace cubewalk::oracle {

inline constexpr int kMaxDenseDimension = 10;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMatrix = Eigen::MatrixXcd;

void check_dense_dimension(int n);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Permutation matrix with entry (x, x ^ w) = 1.
IntMatrix regular_rep(const GroupElement& w);

/// Sylvester Hadamard matrix of order 2^n as an n-fold Kronecker power.
IntMatrix hadamard(int n);

IntMatrix adjacency_dense(const ConnectionSet& set);

/// Diagonal of H A H / 2^n; throws std::logic_error if the conjugated
/// matrix is not diagonal.
std::vector<std::int64_t> hadamard_diagonal(const ConnectionSet& set);

/// Eigenvalues of A from a dense symmetric eigensolver, ascending.
std::vector<double> adjacency_eigenvalues(const ConnectionSet& set);

/// U = H diag(exp(-i lambda t)) H / 2^n.
ComplexMatrix evolve_dense(const ConnectionSet& set, double t);

/// exp(-iAt) by scaling and squaring of a truncated Taylor series.
ComplexMatrix evolve_dense_series(const ConnectionSet& set, double t);

/// max |(A1 A2 - A2 A1)_{ij}|, computed in integers.
std::int64_t commutation_check(const ConnectionSet& a, const ConnectionSet& b);

/// max |U U^dagger - I|.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace cubewalk::oracle
