#include "cubewalk/scanner.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

#include "cubewalk/graphwalk.hpp"
#include "cubewalk/pst.hpp"
#include "cubewalk/spectral.hpp"

namespace cubewalk {

namespace {

constexpr int kBinomRows = 64;

const std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows>& binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows> c{};
    for (int i = 0; i < kBinomRows; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
  }();
  return table;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomials()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Combination of the given colex rank; colex order on fixed-popcount masks
// coincides with ascending numeric order.
std::uint64_t unrank_colex(std::uint64_t rank, int k, int universe_bits) {
  std::uint64_t mask = 0;
  int top = universe_bits - 1;
  for (int i = k; i >= 1; --i) {
    while (binom(top, i) > rank) --top;
    mask |= std::uint64_t{1} << top;
    rank -= binom(top, i);
    --top;
  }
  return mask;
}

}  // namespace

bool SetFilter::matches(const ConnectionSet& set) const {
  const int d = set.degree();
  if (d < d_min) return false;
  if (d_max && d > *d_max) return false;
  switch (sum) {
    case SumClass::kZero:
      return set.u().is_zero();
    case SumClass::kNonZero:
      return !set.u().is_zero();
    case SumClass::kAny:
      break;
  }
  return true;
}

std::string SetFilter::describe() const {
  std::string out = "d>=" + std::to_string(d_min);
  if (d_max) out += ",d<=" + std::to_string(*d_max);
  if (sum == SumClass::kZero) out += ",u=0";
  if (sum == SumClass::kNonZero) out += ",u!=0";
  return out;
}

SetUniverse::SetUniverse(int n, SetFilter filter) : n_(n), filter_(std::move(filter)) {
  check_dimension(n);
  if (filter_.d_min < 1) filter_.d_min = 1;
  if (filter_.d_max && *filter_.d_max < filter_.d_min) {
    throw InvalidInput("degree range is empty");
  }
  if (n > kMaxExhaustiveDimension) {
    throw InvalidInput("exhaustive enumeration supports n <= 5; use sampling for larger n");
  }
  const int labels = static_cast<int>(group_order(n)) - 1;
  if (n < kMaxExhaustiveDimension) {
    segments_.push_back({0, 0, (std::uint64_t{1} << labels) - 1});
    total_ = segments_.back().count;
    return;
  }
  if (!filter_.d_max) {
    throw InvalidInput("exhaustive enumeration at n = 5 requires a maximum degree filter");
  }
  for (int d = filter_.d_min; d <= std::min(*filter_.d_max, labels); ++d) {
    segments_.push_back({d, total_, binom(labels, d)});
    total_ += segments_.back().count;
    if (total_ > kMaxExhaustiveCandidates) {
      throw InvalidInput("degree range too wide for exhaustive enumeration at n = 5");
    }
  }
}

std::uint64_t SetUniverse::mask_at(std::uint64_t ordinal) const {
  if (ordinal >= total_) throw InvalidInput("ordinal out of range");
  for (const auto& seg : segments_) {
    if (ordinal < seg.first_ordinal + seg.count) {
      const auto local = ordinal - seg.first_ordinal;
      if (seg.degree == 0) return local + 1;
      return unrank_colex(local, seg.degree, static_cast<int>(group_order(n_)) - 1);
    }
  }
  throw std::logic_error("segment lookup failed");
}

void SetUniverse::visit(std::uint64_t begin, std::uint64_t end,
                        const std::function<void(const ConnectionSet&)>& fn) const {
  end = std::min(end, total_);
  for (std::uint64_t ord = begin; ord < end; ++ord) {
    const auto set = ConnectionSet::from_mask(n_, mask_at(ord));
    if (filter_.matches(set)) fn(set);
  }
}

std::vector<ConnectionSet> enumerate_sets(int n, const SetFilter& filter) {
  SetUniverse universe(n, filter);
  std::vector<ConnectionSet> out;
  universe.visit(0, universe.candidate_count(),
                 [&out](const ConnectionSet& s) { out.push_back(s); });
  return out;
}

namespace {

// Floyd's algorithm: k distinct labels from [1, 2^n - 1].
std::vector<Label> random_labels(int n, int k, std::mt19937_64& rng) {
  const auto top = static_cast<Label>(group_order(n) - 1);
  std::unordered_set<Label> chosen;
  std::vector<Label> out;
  for (Label j = top - static_cast<Label>(k) + 1; j <= top; ++j) {
    std::uniform_int_distribution<Label> pick(1, j);
    Label x = pick(rng);
    if (chosen.contains(x)) x = j;
    chosen.insert(x);
    out.push_back(x);
  }
  return out;
}

std::optional<ConnectionSet> draw_one(int n, const SetFilter& filter, std::mt19937_64& rng) {
  const int labels = static_cast<int>(group_order(n)) - 1;
  if (!filter.has_degree_bound()) {
    std::vector<Label> elems;
    for (Label x = 1; x <= static_cast<Label>(labels); ++x) {
      if (rng() & 1u) elems.push_back(x);
    }
    ConnectionSet set(n, elems);
    // toggling u maps uniformly onto the zero-sum sets
    if (filter.sum == SumClass::kZero && !set.u().is_zero()) {
      const Label u = set.u().bits();
      set = set.contains(u) ? set.without(u) : set.with(u);
    }
    if (set.empty() || !filter.matches(set)) return std::nullopt;
    return set;
  }

  const int hi = std::min(filter.d_max.value_or(labels), labels);
  if (filter.d_min > hi) throw InvalidInput("degree range is empty for this n");
  std::uniform_int_distribution<int> degree(filter.d_min, hi);
  const int d = degree(rng);
  if (filter.sum == SumClass::kZero) {
    if (d < 3) return std::nullopt;
    auto elems = random_labels(n, d - 1, rng);
    Label last = 0;
    for (Label x : elems) last ^= x;
    if (last == 0 || std::find(elems.begin(), elems.end(), last) != elems.end()) {
      return std::nullopt;
    }
    elems.push_back(last);
    return ConnectionSet(n, std::move(elems));
  }
  ConnectionSet set(n, random_labels(n, d, rng));
  if (!filter.matches(set)) return std::nullopt;
  return set;
}

}  // namespace

std::vector<ConnectionSet> sample_sets(int n, const SetFilter& filter, std::uint64_t count,
                                       std::uint64_t seed) {
  check_dimension(n);
  std::mt19937_64 rng(seed);
  std::vector<ConnectionSet> out;
  out.reserve(count);
  constexpr std::uint64_t kMaxAttemptsPerSample = 10000;
  std::uint64_t misses = 0;
  while (out.size() < count) {
    if (auto set = draw_one(n, filter, rng)) {
      out.push_back(std::move(*set));
      misses = 0;
    } else if (++misses > kMaxAttemptsPerSample) {
      throw InvalidInput("filter " + filter.describe() + " is (nearly) unsatisfiable at n = " +
                         std::to_string(n));
    }
  }
  return out;
}

std::string to_string(ScanKind kind) {
  return kind == ScanKind::kConjecture ? "conjecture-scan" : "antipodality-audit";
}

Finding analyze_set(const ConnectionSet& set) {
  const auto profile = bfs_profile(set, GroupElement::zero(set.dim()));
  Finding finding{set, profile.connected, profile.diameter, {}};
  for (const auto& off : pst_offsets(spectrum(set))) {
    const auto dist = profile.dist[off.delta];
    finding.offsets.push_back(
        {off.delta, off.time, dist, profile.connected && dist == profile.diameter});
  }
  return finding;
}

bool reverify(const Finding& finding) { return analyze_set(finding.set) == finding; }

namespace {

struct Partial {
  std::uint64_t universe = 0;
  std::vector<Finding> findings;
  std::map<std::string, std::uint64_t> counters;
  std::uint64_t violations = 0;
};

void tally(ScanKind kind, const ConnectionSet& set, Partial& out) {
  ++out.universe;
  if (kind == ScanKind::kConjecture) {
    auto finding = analyze_set(set);
    out.counters["offsets_checked"] += group_order(set.dim()) - 1;
    if (!finding.offsets.empty()) {
      ++out.violations;
      ++out.counters["counterexample_sets"];
      out.findings.push_back(std::move(finding));
    }
    return;
  }
  if (gf2_rank(set) != set.dim()) {
    ++out.counters["disconnected_sets_skipped"];
    return;
  }
  ++out.counters["connected_sets"];
  auto finding = analyze_set(set);
  if (finding.offsets.empty()) return;
  ++out.counters["pst_sets"];
  bool violating = false;
  for (const auto& off : finding.offsets) {
    ++out.counters["pst_offsets"];
    if (off.antipodal) {
      ++out.counters["antipodal_offsets"];
    } else {
      ++out.counters["non_antipodal_offsets"];
      ++out.violations;
      violating = true;
    }
  }
  if (violating) ++out.counters["violating_sets"];
  out.findings.push_back(std::move(finding));
}

void merge(Partial& into, Partial&& from) {
  into.universe += from.universe;
  into.violations += from.violations;
  for (auto& [k, v] : from.counters) into.counters[k] += v;
  std::move(from.findings.begin(), from.findings.end(), std::back_inserter(into.findings));
}

ScanReport run_scan(ScanKind kind, ScanOptions options) {
  const auto start = std::chrono::steady_clock::now();
  check_dimension(options.n);
  Partial total;

  // counters present even when zero keep the report layout stable
  if (kind == ScanKind::kConjecture) {
    total.counters = {{"offsets_checked", 0}, {"counterexample_sets", 0}};
  } else {
    total.counters = {{"connected_sets", 0},      {"disconnected_sets_skipped", 0},
                      {"pst_sets", 0},            {"pst_offsets", 0},
                      {"antipodal_offsets", 0},   {"non_antipodal_offsets", 0},
                      {"violating_sets", 0}};
  }

  const unsigned jobs = std::max(1u, options.jobs);
  if (options.sample) {
    const auto sets = sample_sets(options.n, options.filter, *options.sample, options.seed);
    std::vector<Partial> parts(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (sets.size() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        const std::size_t lo = std::min(sets.size(), j * chunk);
        const std::size_t hi = std::min(sets.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) tally(kind, sets[i], parts[j]);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) merge(total, std::move(p));
  } else {
    const SetUniverse universe(options.n, options.filter);
    const auto count = universe.candidate_count();
    std::vector<Partial> parts(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        const std::uint64_t lo = std::min<std::uint64_t>(count, j * chunk);
        universe.visit(lo, std::min(count, lo + chunk),
                       [&](const ConnectionSet& s) { tally(kind, s, parts[j]); });
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) merge(total, std::move(p));
    options.filter = universe.filter();
  }

  ScanReport report;
  report.kind = kind;
  report.n = options.n;
  report.mode = options.sample ? "sampled" : "exhaustive";
  report.filter = options.filter;
  report.sample = options.sample;
  report.seed = options.seed;
  report.universe = total.universe;
  report.findings = std::move(total.findings);
  report.counters = std::move(total.counters);
  report.violations = total.violations;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

ScanReport conjecture_scan(const ScanOptions& options) {
  ScanOptions opts = options;
  if (opts.filter.sum == SumClass::kNonZero) {
    throw InvalidInput("the conjecture scan only concerns sets with u = 0");
  }
  opts.filter.sum = SumClass::kZero;
  return run_scan(ScanKind::kConjecture, opts);
}

ScanReport antipodality_audit(const ScanOptions& options) {
  return run_scan(ScanKind::kAntipodality, options);
}

}  // namespace cubewalk
