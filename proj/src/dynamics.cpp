#include "cubewalk/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace cubewalk {

namespace {

Complex phase_real(std::int64_t lambda, double t) {
  return std::polar(1.0, -static_cast<double>(lambda) * t);
}

// exp(-i lambda p pi / q) with lambda*p reduced mod 2q in integers first.
Complex phase_rational(std::int64_t lambda, const RationalAngle& t) {
  const __int128 period = 2 * static_cast<__int128>(t.q());
  __int128 r = (static_cast<__int128>(lambda) * t.p()) % period;
  if (r < 0) r += period;
  const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(t.q());
  return std::polar(1.0, -angle);
}

template <typename PhaseFn>
std::vector<Complex> amplitudes_from_phases(const Spectrum& spec, PhaseFn phase) {
  std::vector<Complex> out(spec.size());
  for (Label w = 0; w < spec.size(); ++w) out[w] = phase(spec[w]);
  wht_inplace(std::span<Complex>(out));
  return out;
}

std::vector<double> to_fidelities(const std::vector<Complex>& amps, int n) {
  const double scale = std::ldexp(1.0, -n);
  std::vector<double> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) out[i] = std::abs(amps[i]) * scale;
  return out;
}

void check_same_dim(const ConnectionSet& set, const GroupElement& a, const GroupElement& b) {
  if (a.dim() != set.dim() || b.dim() != set.dim()) {
    throw InvalidInput("dimension mismatch between vertices and connection set");
  }
}

template <typename PhaseFn>
Complex single_amplitude(const Spectrum& spec, Label delta, PhaseFn phase) {
  Complex sum{0.0, 0.0};
  for (Label w = 0; w < spec.size(); ++w) {
    const Complex term = phase(spec[w]);
    sum += parity(delta & w) ? -term : term;
  }
  return sum;
}

}  // namespace

std::vector<Complex> all_amplitudes(const Spectrum& spec, double t) {
  return amplitudes_from_phases(spec, [t](std::int64_t l) { return phase_real(l, t); });
}

std::vector<Complex> all_amplitudes(const Spectrum& spec, const RationalAngle& t) {
  return amplitudes_from_phases(spec, [&t](std::int64_t l) { return phase_rational(l, t); });
}

std::vector<Complex> all_amplitudes(const ConnectionSet& set, double t) {
  return all_amplitudes(spectrum(set), t);
}

std::vector<Complex> all_amplitudes(const ConnectionSet& set, const RationalAngle& t) {
  return all_amplitudes(spectrum(set), t);
}

Complex amplitude(const ConnectionSet& set, const GroupElement& a, const GroupElement& b,
                  double t) {
  check_same_dim(set, a, b);
  return single_amplitude(spectrum(set), a.bits() ^ b.bits(),
                          [t](std::int64_t l) { return phase_real(l, t); });
}

Complex amplitude(const ConnectionSet& set, const GroupElement& a, const GroupElement& b,
                  const RationalAngle& t) {
  check_same_dim(set, a, b);
  return single_amplitude(spectrum(set), a.bits() ^ b.bits(),
                          [&t](std::int64_t l) { return phase_rational(l, t); });
}

std::vector<double> all_fidelities(const Spectrum& spec, double t) {
  return to_fidelities(all_amplitudes(spec, t), spec.dim());
}

std::vector<double> all_fidelities(const Spectrum& spec, const RationalAngle& t) {
  return to_fidelities(all_amplitudes(spec, t), spec.dim());
}

std::vector<double> all_fidelities(const ConnectionSet& set, double t) {
  return all_fidelities(spectrum(set), t);
}

std::vector<double> all_fidelities(const ConnectionSet& set, const RationalAngle& t) {
  return all_fidelities(spectrum(set), t);
}

void check_exact_time(const RationalAngle& t) {
  if (2 % t.q() != 0) {
    throw InvalidInput("exact mode needs t to be a multiple of pi/2, got " + t.to_string());
  }
}

std::vector<GaussianInteger> all_amplitudes_exact(const Spectrum& spec, const RationalAngle& t) {
  check_exact_time(t);
  // exp(-i lambda p pi / q) = (-i)^(2 lambda p / q)
  const std::int64_t scale = 2 / t.q();
  const std::int64_t p_mod = t.p() % 4;
  std::vector<GaussianInteger> out(spec.size());
  for (Label w = 0; w < spec.size(); ++w) {
    out[w] = GaussianInteger::unit_power_minus_i((spec[w] % 4) * p_mod * scale);
  }
  wht_inplace(std::span<GaussianInteger>(out));
  return out;
}

std::vector<GaussianInteger> all_amplitudes_exact(const ConnectionSet& set,
                                                  const RationalAngle& t) {
  return all_amplitudes_exact(spectrum(set), t);
}

GaussianInteger amplitude_exact(const ConnectionSet& set, const GroupElement& delta,
                                const RationalAngle& t) {
  if (delta.dim() != set.dim()) {
    throw InvalidInput("dimension mismatch between offset and connection set");
  }
  check_exact_time(t);
  const Spectrum spec = spectrum(set);
  const std::int64_t scale = 2 / t.q();
  const std::int64_t p_mod = t.p() % 4;
  GaussianInteger sum;
  for (Label w = 0; w < spec.size(); ++w) {
    const auto term = GaussianInteger::unit_power_minus_i((spec[w] % 4) * p_mod * scale);
    if (parity(delta.bits() & w)) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

namespace {

std::vector<double> distribution_from(const std::vector<Complex>& amps, Label a, int n) {
  const double scale = std::ldexp(1.0, -2 * n);
  std::vector<double> out(amps.size());
  for (Label b = 0; b < amps.size(); ++b) out[b] = std::norm(amps[a ^ b]) * scale;
  return out;
}

}  // namespace

std::vector<double> measurement_distribution(const ConnectionSet& set, const GroupElement& a,
                                             double t) {
  check_same_dim(set, a, a);
  return distribution_from(all_amplitudes(set, t), a.bits(), set.dim());
}

std::vector<double> measurement_distribution(const ConnectionSet& set, const GroupElement& a,
                                             const RationalAngle& t) {
  check_same_dim(set, a, a);
  return distribution_from(all_amplitudes(set, t), a.bits(), set.dim());
}

ExactDistribution measurement_distribution_exact(const ConnectionSet& set,
                                                 const GroupElement& a,
                                                 const RationalAngle& t) {
  check_same_dim(set, a, a);
  const auto amps = all_amplitudes_exact(set, t);
  ExactDistribution dist;
  dist.n = set.dim();
  dist.numerators.resize(amps.size());
  for (Label b = 0; b < amps.size(); ++b) {
    dist.numerators[b] = static_cast<std::uint64_t>(amps[a.bits() ^ b].norm());
  }
  return dist;
}

}  // namespace cubewalk
