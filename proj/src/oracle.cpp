#include "cubewalk/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace cubewalk::oracle {

void check_dense_dimension(int n) {
  check_dimension(n);
  if (n > kMaxDenseDimension) {
    throw InvalidInput("dense oracle is capped at n = " + std::to_string(kMaxDenseDimension));
  }
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

IntMatrix sigma_x() {
  IntMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

IntMatrix kron_power(int n, const IntMatrix& factor) {
  IntMatrix out = IntMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kronecker(out, factor);
  return out;
}

}  // namespace

IntMatrix regular_rep(const GroupElement& w) {
  const int n = w.dim();
  check_dense_dimension(n);
  const IntMatrix identity = IntMatrix::Identity(2, 2);
  const IntMatrix flip = sigma_x();
  IntMatrix out = IntMatrix::Identity(1, 1);
  // leftmost coordinate is the most significant tensor factor
  for (int i = n - 1; i >= 0; --i) {
    out = kronecker(out, ((w.bits() >> i) & 1u) ? flip : identity);
  }
  return out;
}

IntMatrix hadamard(int n) {
  check_dense_dimension(n);
  IntMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return kron_power(n, h);
}

IntMatrix adjacency_dense(const ConnectionSet& set) {
  const int n = set.dim();
  check_dense_dimension(n);
  const auto order = static_cast<Eigen::Index>(group_order(n));
  IntMatrix a = IntMatrix::Zero(order, order);
  for (Label w : set.elements()) a += regular_rep(GroupElement(w, n));
  return a;
}

std::vector<std::int64_t> hadamard_diagonal(const ConnectionSet& set) {
  const int n = set.dim();
  const IntMatrix h = hadamard(n);
  const IntMatrix conj = h * adjacency_dense(set) * h;
  const std::int64_t order = conj.rows();
  std::vector<std::int64_t> diag(static_cast<std::size_t>(order));
  for (Eigen::Index i = 0; i < order; ++i) {
    for (Eigen::Index j = 0; j < order; ++j) {
      if (i != j && conj(i, j) != 0) {
        throw std::logic_error("Hadamard conjugation did not diagonalize the adjacency matrix");
      }
    }
    if (conj(i, i) % order != 0) {
      throw std::logic_error("non-integral eigenvalue from Hadamard conjugation");
    }
    diag[static_cast<std::size_t>(i)] = conj(i, i) / order;
  }
  return diag;
}

std::vector<double> adjacency_eigenvalues(const ConnectionSet& set) {
  const Eigen::MatrixXd a = adjacency_dense(set).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ComplexMatrix evolve_dense(const ConnectionSet& set, double t) {
  const int n = set.dim();
  const auto diag = hadamard_diagonal(set);
  const ComplexMatrix h = hadamard(n).cast<std::complex<double>>();
  Eigen::VectorXcd phases(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t v = 0; v < diag.size(); ++v) {
    phases(static_cast<Eigen::Index>(v)) = std::polar(1.0, -static_cast<double>(diag[v]) * t);
  }
  return (h * phases.asDiagonal() * h) / std::ldexp(1.0, n);
}

ComplexMatrix evolve_dense_series(const ConnectionSet& set, double t) {
  const ComplexMatrix generator =
      adjacency_dense(set).cast<std::complex<double>>() * std::complex<double>(0.0, -t);
  // ||A||_inf = d; scale so the series argument has norm below 1/2
  const double norm = std::abs(t) * static_cast<double>(set.degree());
  int squarings = 0;
  while (std::ldexp(norm, -squarings) > 0.5) ++squarings;
  const ComplexMatrix x = generator / std::ldexp(1.0, squarings);

  const auto order = x.rows();
  ComplexMatrix sum = ComplexMatrix::Identity(order, order);
  ComplexMatrix term = ComplexMatrix::Identity(order, order);
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

std::int64_t commutation_check(const ConnectionSet& a, const ConnectionSet& b) {
  if (a.dim() != b.dim()) throw InvalidInput("dimension mismatch in commutation_check");
  const IntMatrix x = adjacency_dense(a);
  const IntMatrix y = adjacency_dense(b);
  const IntMatrix comm = x * y - y * x;
  return comm.cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix prod = u * u.adjoint();
  return (prod - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace cubewalk::oracle
