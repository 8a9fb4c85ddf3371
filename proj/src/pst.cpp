#include "cubewalk/pst.hpp"

#include <cmath>
#include <numbers>

#include "cubewalk/graphwalk.hpp"

namespace cubewalk {

std::string to_string(CertificateMethod m) {
  return m == CertificateMethod::kClosedForm ? "closed-form" : "exact-decision";
}

namespace {

bool divides_two(const RationalAngle& t) { return 2 % t.q() == 0; }

// exp(-i d t) for t = p*pi/q, with d*p reduced mod 2q first.
std::complex<double> global_phase(int d, const RationalAngle& t) {
  const __int128 period = 2 * static_cast<__int128>(t.q());
  const auto r = static_cast<double>((static_cast<__int128>(d) * t.p()) % period);
  return std::polar(1.0, -std::numbers::pi * r / static_cast<double>(t.q()));
}

PstCertificate make_certificate(const ConnectionSet& set, Label delta, const RationalAngle& t,
                                CertificateMethod method) {
  PstCertificate cert{GroupElement(delta, set.dim()), t, global_phase(set.degree(), t),
                      std::nullopt, method};
  if (divides_two(t)) {
    cert.exact_phase =
        GaussianInteger::unit_power_minus_i(static_cast<std::int64_t>(set.degree() % 4) *
                                            (t.p() % 4) * (2 / t.q()));
    cert.phase = cert.exact_phase->to_complex();
  }
  return cert;
}

}  // namespace

bool verify_certificate(const ConnectionSet& set, const PstCertificate& cert) {
  if (cert.delta.dim() != set.dim()) return false;
  const double full = std::ldexp(1.0, set.dim());
  if (divides_two(cert.time)) {
    const auto amp = amplitude_exact(set, cert.delta, cert.time);
    const auto scale = static_cast<std::int64_t>(group_order(set.dim()));
    if (amp.norm() != scale * scale) return false;
    if (cert.exact_phase && !(scale * *cert.exact_phase == amp)) return false;
    return true;
  }
  const auto amp = amplitude(set, GroupElement::zero(set.dim()), cert.delta, cert.time);
  return std::abs(std::abs(amp) - full) <= kFidelityTolerance * full &&
         std::abs(amp - cert.phase * full) <= kFidelityTolerance * full;
}

std::optional<PstCertificate> pst_at_half_pi(const ConnectionSet& set) {
  const auto u = set.u();
  if (u.is_zero()) return std::nullopt;
  auto cert = make_certificate(set, u.bits(), RationalAngle::half_pi(),
                               CertificateMethod::kClosedForm);
  if (!verify_certificate(set, cert)) {
    throw std::logic_error("closed-form PST certificate failed exact re-verification");
  }
  return cert;
}

bool revival_at_half_pi(const ConnectionSet& set) { return set.u().is_zero(); }

std::optional<RationalAngle> decide_pst_exact(const Spectrum& spec, Label delta) {
  if (delta == 0) {
    throw InvalidInput("decide_pst_exact needs a nonzero offset; delta = 0 is periodicity");
  }
  if (delta >= spec.size()) throw InvalidInput("offset exceeds 2^n - 1");

  const std::int64_t d = spec.degree();
  std::int64_t pivot_gap = 0;
  Label pivot = 0;
  for (Label w = 0; w < spec.size(); ++w) {
    const std::int64_t gap = d - spec[w];
    if (gap != 0 && (pivot_gap == 0 || gap < pivot_gap)) {
      pivot_gap = gap;
      pivot = w;
    }
  }
  // All phases equal (empty set): only the trivial offset is reachable.
  if (pivot_gap == 0) return std::nullopt;

  const std::int64_t pivot_parity = parity(delta & pivot);
  for (std::int64_t m = 0; m < pivot_gap; ++m) {
    const std::int64_t num = pivot_parity + 2 * m;
    if (num == 0) continue;
    bool ok = true;
    for (Label w = 0; w < spec.size() && ok; ++w) {
      const std::int64_t scaled = num * (d - spec[w]);
      if (scaled % pivot_gap != 0) {
        ok = false;
      } else {
        ok = ((scaled / pivot_gap) & 1) == parity(delta & w);
      }
    }
    if (ok) return RationalAngle(num, pivot_gap);
  }
  return std::nullopt;
}

std::optional<RationalAngle> decide_pst_exact(const ConnectionSet& set,
                                              const GroupElement& delta) {
  if (delta.dim() != set.dim()) throw InvalidInput("dimension mismatch in decide_pst_exact");
  return decide_pst_exact(spectrum(set), delta.bits());
}

std::optional<PstCertificate> pst_certificate_exact(const ConnectionSet& set,
                                                    const GroupElement& delta) {
  const auto t = decide_pst_exact(set, delta);
  if (!t) return std::nullopt;
  auto cert = make_certificate(set, delta.bits(), *t, CertificateMethod::kExactDecision);
  if (!verify_certificate(set, cert)) {
    throw std::logic_error("exact PST decision failed re-verification");
  }
  return cert;
}

std::vector<PstOffset> pst_offsets(const Spectrum& spec) {
  std::vector<PstOffset> out;
  for (Label delta = 1; delta < spec.size(); ++delta) {
    if (auto t = decide_pst_exact(spec, delta)) out.push_back({delta, *t});
  }
  return out;
}

ConnectionSet folded_cube(int n) {
  return ConnectionSet::hypercube(n).with(GroupElement::all_ones(n).bits());
}

namespace {

// Builds C = generators + {w} and one stage per hop, certifying each stage.
RoutingPlan build_route(int n, const std::vector<Label>& generators,
                        const std::vector<std::size_t>& hops, const GroupElement& target) {
  Label w = 0;
  for (Label g : generators) w ^= g;
  if (w == 0) throw InvalidInput("routing generators must have a nonzero XOR-sum");

  ConnectionSet base(n, generators);
  base = base.with(w);
  RoutingPlan plan{n, target, base, {}};
  for (std::size_t i : hops) {
    const Label hop = generators[i];
    ConnectionSet stage_set = base.without(hop);
    auto cert = pst_at_half_pi(stage_set);
    if (!cert || cert->delta.bits() != hop) {
      throw InvalidInput("stage dropping " + format_element(hop, n) +
                         " does not certify PST over that offset");
    }
    plan.stages.push_back({std::move(stage_set), GroupElement(hop, n), RationalAngle::half_pi(),
                           *cert});
  }
  return plan;
}

}  // namespace

RoutingPlan plan_route(int n, const GroupElement& target) {
  check_dimension(n);
  if (target.dim() != n) throw InvalidInput("target dimension mismatch");
  if (target.is_zero()) throw InvalidInput("routing target must be nonzero");

  if (n == 1) {
    // The folded 1-cube collapses to {1}; its own XOR-sum is the only hop.
    const auto base = folded_cube(1);
    auto cert = pst_at_half_pi(base);
    return RoutingPlan{1, target, base, {{base, target, RationalAngle::half_pi(), *cert}}};
  }

  std::vector<Label> basis;
  std::vector<std::size_t> hops;
  for (int i = 1; i <= n; ++i) {
    basis.push_back(GroupElement::basis(n, i).bits());
    if (target.bits() & basis.back()) hops.push_back(basis.size() - 1);
  }
  return build_route(n, basis, hops, target);
}

RoutingPlan plan_route(const ConnectionSet& generators, const GroupElement& target) {
  const int n = generators.dim();
  if (target.dim() != n) throw InvalidInput("target dimension mismatch");
  if (target.is_zero()) throw InvalidInput("routing target must be nonzero");
  const auto hops = gf2_decompose(generators, target.bits());
  if (!hops) throw InvalidInput("target is not in the span of the generators");
  const std::vector<Label> gens(generators.elements().begin(), generators.elements().end());
  return build_route(n, gens, *hops, target);
}

}  // namespace cubewalk
