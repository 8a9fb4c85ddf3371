#pragma once

// Perfect state transfer: the closed form at t = pi/2, an exact decision
// procedure for arbitrary times, and the folded-cube routing planner.
//
// Decision procedure. Write t = tau*pi and Delta_w = d - lambda_w (all even,
// since every eigenvalue has the parity of d). |T(delta)| = 2^n exactly when
// all terms (-1)^{delta.w} exp(-i lambda_w t) share the phase of the w = 0
// term, i.e. when for every w
//
//     tau * Delta_w  is an integer  and  tau * Delta_w = delta.w  (mod 2).
//
// Fix any w* with Delta_{w*} != 0. Then tau = (delta.w* + 2m) / Delta_{w*}
// for some integer m, and because valid times repeat with period 1 it is
// enough to try 0 <= m < Delta_{w*}. Candidates are increasing in m, so the
// first one passing every congruence is the earliest positive PST time.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cubewalk/bitspace.hpp"
#include "cubewalk/dynamics.hpp"
#include "cubewalk/rational.hpp"
#include "cubewalk/spectral.hpp"

namespace cubewalk {

enum class CertificateMethod { kClosedForm, kExactDecision };

std::string to_string(CertificateMethod m);

struct PstCertificate {
  GroupElement delta;
  RationalAngle time;
  /// Global phase c with T(delta) = c * 2^n.
  std::complex<double> phase;
  /// Set whenever time is a multiple of pi/2.
  std::optional<GaussianInteger> exact_phase;
  CertificateMethod method = CertificateMethod::kClosedForm;
};

/// Re-evaluates the amplitude: exact when 2 % q == 0, otherwise within
/// kFidelityTolerance * 2^n.
bool verify_certificate(const ConnectionSet& set, const PstCertificate& cert);

/// Certificate for offset u at pi/2 when u != 0, re-verified in exact
/// arithmetic before it is returned.
std::optional<PstCertificate> pst_at_half_pi(const ConnectionSet& set);

/// True when u = 0, in which case every vertex returns to itself at pi/2.
bool revival_at_half_pi(const ConnectionSet& set);

/// Earliest positive t = (p/q)*pi with fidelity 1 on offset delta, or empty.
/// Throws InvalidInput for delta = 0.
std::optional<RationalAngle> decide_pst_exact(const Spectrum& spec, Label delta);
std::optional<RationalAngle> decide_pst_exact(const ConnectionSet& set, const GroupElement& delta);

std::optional<PstCertificate> pst_certificate_exact(const ConnectionSet& set,
                                                    const GroupElement& delta);

struct PstOffset {
  Label delta = 0;
  RationalAngle time;
};

/// All nonzero offsets admitting PST, with their earliest times, ascending in delta.
std::vector<PstOffset> pst_offsets(const Spectrum& spec);

/// {e_1, ..., e_n, all-ones}. For n = 1 the all-ones vector coincides with e_1.
ConnectionSet folded_cube(int n);

struct RouteStage {
  ConnectionSet set;
  GroupElement hop;
  RationalAngle time;
  PstCertificate certificate;
};

struct RoutingPlan {
  int n = 0;
  GroupElement target;
  ConnectionSet base;
  std::vector<RouteStage> stages;
};

/// Standard-basis folded-cube route from 0 to target.
RoutingPlan plan_route(int n, const GroupElement& target);

/// Route using C = generators + {XOR of generators}; stage i runs on
/// C minus the i-th generator. Every stage is certified through
/// pst_at_half_pi; throws InvalidInput if the target is outside the span or a
/// stage cannot be certified.
RoutingPlan plan_route(const ConnectionSet& generators, const GroupElement& target);

}  // namespace cubewalk
