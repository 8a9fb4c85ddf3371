#pragma once

// Exhaustive and sampled audits over connection sets at small n.
//
// Exhaustive enumeration walks subsets of the 2^n - 1 nonzero labels as
// bitmasks (bit j <-> label j + 1). For n <= 4 every mask is visited in
// ascending order. For n = 5 a degree filter is mandatory and each degree
// class is walked in ascending mask order, lowest degree first.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubewalk/bitspace.hpp"
#include "cubewalk/rational.hpp"

namespace cubewalk {

enum class SumClass { kAny, kZero, kNonZero };

struct SetFilter {
  int d_min = 1;
  std::optional<int> d_max;
  SumClass sum = SumClass::kAny;

  bool has_degree_bound() const { return d_min > 1 || d_max.has_value(); }
  bool matches(const ConnectionSet& set) const;
  std::string describe() const;
};

inline constexpr int kMaxExhaustiveDimension = 5;
inline constexpr std::uint64_t kMaxExhaustiveCandidates = std::uint64_t{1} << 27;

/// The ordered stream of candidate masks for an exhaustive walk. Workers
/// take contiguous ordinal ranges; the sum-class filter is applied on top.
class SetUniverse {
 public:
  /// Throws InvalidInput when the request exceeds the exhaustive caps.
  SetUniverse(int n, SetFilter filter);

  int dim() const { return n_; }
  const SetFilter& filter() const { return filter_; }
  /// Masks walked before the sum-class filter.
  std::uint64_t candidate_count() const { return total_; }
  std::uint64_t mask_at(std::uint64_t ordinal) const;

  /// Calls fn on every matching set with ordinal in [begin, end).
  void visit(std::uint64_t begin, std::uint64_t end,
             const std::function<void(const ConnectionSet&)>& fn) const;

 private:
  struct Segment {
    int degree;  // 0 means all masks
    std::uint64_t first_ordinal;
    std::uint64_t count;
  };

  int n_;
  SetFilter filter_;
  std::vector<Segment> segments_;
  std::uint64_t total_ = 0;
};

std::vector<ConnectionSet> enumerate_sets(int n, const SetFilter& filter);

/// Deterministic pseudo-random sets. Without a degree bound each nonzero
/// label is included independently with probability 1/2.
std::vector<ConnectionSet> sample_sets(int n, const SetFilter& filter, std::uint64_t count,
                                       std::uint64_t seed);

enum class ScanKind { kConjecture, kAntipodality };

std::string to_string(ScanKind kind);

struct OffsetRecord {
  Label delta = 0;
  RationalAngle time;
  std::int32_t distance = 0;  // kUnreachable on a disconnected graph
  bool antipodal = false;

  bool operator==(const OffsetRecord&) const = default;
};

struct Finding {
  ConnectionSet set;
  bool connected = false;
  std::int32_t diameter = 0;
  std::vector<OffsetRecord> offsets;

  Label u() const { return set.u().bits(); }
  bool operator==(const Finding&) const = default;
};

/// Single-set pipeline: spectrum, exact PST decision over every nonzero
/// offset, and BFS distances of each PST offset.
Finding analyze_set(const ConnectionSet& set);

struct ScanOptions {
  int n = 1;
  SetFilter filter;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct ScanReport {
  ScanKind kind = ScanKind::kConjecture;
  int n = 0;
  std::string mode;  // "exhaustive" or "sampled"
  SetFilter filter;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::uint64_t universe = 0;
  std::vector<Finding> findings;
  std::map<std::string, std::uint64_t> counters;
  std::uint64_t violations = 0;
  double wall_time_s = 0.0;
};

/// Every set with u = 0, every nonzero offset: any PST is a counterexample.
ScanReport conjecture_scan(const ScanOptions& options);

/// Every connected set with PST: compares each offset's distance with the
/// diameter and counts the non-antipodal ones.
ScanReport antipodality_audit(const ScanOptions& options);

/// Re-runs analyze_set on the recorded set and compares.
bool reverify(const Finding& finding);

}  // namespace cubewalk
