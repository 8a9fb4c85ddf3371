#include "cubewalk/spectral.hpp"

#include <algorithm>

namespace cubewalk {

bool is_power_of_two(std::size_t len) { return len != 0 && (len & (len - 1)) == 0; }

std::vector<std::int64_t> wht(std::span<const std::int64_t> data) {
  std::vector<std::int64_t> out(data.begin(), data.end());
  wht_inplace(std::span<std::int64_t>(out));
  return out;
}

Spectrum::Spectrum(int n, int d, std::vector<std::int64_t> values)
    : n_(n), d_(d), values_(std::move(values)) {
  check_dimension(n);
  if (values_.size() != group_order(n)) {
    throw InvalidInput("spectrum must have 2^n entries");
  }
}

Spectrum spectrum(const ConnectionSet& set) {
  std::vector<std::int64_t> indicator(group_order(set.dim()), 0);
  for (Label w : set.elements()) indicator[w] = 1;
  wht_inplace(std::span<std::int64_t>(indicator));
  return Spectrum(set.dim(), set.degree(), std::move(indicator));
}

std::string to_string(CongruenceCase c) {
  switch (c) {
    case CongruenceCase::kZeroSum:
      return "zero-sum";
    case CongruenceCase::kSumOutside:
      return "sum-outside-set";
    case CongruenceCase::kSumInside:
      return "sum-inside-set";
  }
  return "unknown";
}

std::string congruence_class_label(int offset) {
  if (offset > 0) return "d+2";
  if (offset < 0) return "d-2";
  return "d";
}

std::size_t CongruenceReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const CongruenceEntry& e) { return !e.pass; }));
}

CongruenceReport classify_congruences(const Spectrum& spec, const GroupElement& u,
                                      bool u_in_set) {
  if (u.dim() != spec.dim()) {
    throw InvalidInput("dimension mismatch in classify_congruences");
  }
  const std::int64_t d = spec.degree();
  CongruenceReport report;
  int odd_offset = 0;
  if (u.is_zero()) {
    report.kind = CongruenceCase::kZeroSum;
    report.k_max = d / 2;
  } else if (!u_in_set) {
    report.kind = CongruenceCase::kSumOutside;
    report.k_max = (d + 1) / 2;
    odd_offset = 2;
  } else {
    report.kind = CongruenceCase::kSumInside;
    report.k_max = (d - 1) / 2;
    odd_offset = -2;
  }

  report.entries.reserve(spec.size());
  for (Label v = 0; v < spec.size(); ++v) {
    CongruenceEntry e;
    e.v = v;
    e.lambda = spec[v];
    e.offset = parity(u.bits() & v) ? odd_offset : 0;
    // lambda = d - 4k + offset  =>  4k = d + offset - lambda
    const std::int64_t four_k = d + e.offset - e.lambda;
    e.pass = four_k % 4 == 0;
    e.k = four_k / 4;
    e.pass = e.pass && e.k >= 0 && e.k <= report.k_max;
    report.entries.push_back(e);
  }
  return report;
}

CongruenceReport classify_congruences(const ConnectionSet& set) {
  return classify_congruences(spectrum(set), set.u(), set.contains(set.u().bits()));
}

}  // namespace cubewalk
