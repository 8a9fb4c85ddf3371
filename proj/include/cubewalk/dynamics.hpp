#pragma once

// Continuous-time evolution exp(-i A t) on a cubelike graph.
//
// The unnormalized amplitude T(a, b) = sum_w (-1)^{(a^b).w} exp(-i lambda_w t)
// depends only on delta = a ^ b. Applying one Walsh-Hadamard transform to the
// phase vector exp(-i lambda_w t) yields T for every delta at once. Fidelity
// is |T| / 2^n.

#include <complex>
#include <cstdint>
#include <vector>

#include "cubewalk/bitspace.hpp"
#include "cubewalk/rational.hpp"
#include "cubewalk/spectral.hpp"

namespace cubewalk {

using Complex = std::complex<double>;

inline constexpr double kFidelityTolerance = 1e-9;

// Floating-point mode. The RationalAngle overloads reduce lambda*p modulo 2q
// exactly before converting to radians.
std::vector<Complex> all_amplitudes(const Spectrum& spec, double t);
std::vector<Complex> all_amplitudes(const Spectrum& spec, const RationalAngle& t);
std::vector<Complex> all_amplitudes(const ConnectionSet& set, double t);
std::vector<Complex> all_amplitudes(const ConnectionSet& set, const RationalAngle& t);

Complex amplitude(const ConnectionSet& set, const GroupElement& a, const GroupElement& b,
                  double t);
Complex amplitude(const ConnectionSet& set, const GroupElement& a, const GroupElement& b,
                  const RationalAngle& t);

std::vector<double> all_fidelities(const Spectrum& spec, double t);
std::vector<double> all_fidelities(const Spectrum& spec, const RationalAngle& t);
std::vector<double> all_fidelities(const ConnectionSet& set, double t);
std::vector<double> all_fidelities(const ConnectionSet& set, const RationalAngle& t);

// Exact mode for t = p*pi/q with q in {1, 2}: every phase is a power of -i.
void check_exact_time(const RationalAngle& t);
std::vector<GaussianInteger> all_amplitudes_exact(const Spectrum& spec, const RationalAngle& t);
std::vector<GaussianInteger> all_amplitudes_exact(const ConnectionSet& set,
                                                  const RationalAngle& t);
GaussianInteger amplitude_exact(const ConnectionSet& set, const GroupElement& delta,
                                const RationalAngle& t);

/// Outcome b has probability |T(a, b)|^2 / 4^n.
std::vector<double> measurement_distribution(const ConnectionSet& set, const GroupElement& a,
                                             double t);
std::vector<double> measurement_distribution(const ConnectionSet& set, const GroupElement& a,
                                             const RationalAngle& t);

/// Exact distribution at t = k*pi/2: numerators |T(a, b)|^2 over the common
/// denominator 4^n. The numerators always sum to exactly 4^n.
struct ExactDistribution {
  int n = 0;
  std::vector<std::uint64_t> numerators;
  std::uint64_t denominator() const { return std::uint64_t{1} << (2 * n); }
};

ExactDistribution measurement_distribution_exact(const ConnectionSet& set,
                                                 const GroupElement& a, const RationalAngle& t);

}  // namespace cubewalk
