// Acceptance suite. Usage: acceptance [criterion]
// Prints one "criterion N: PASS|FAIL ..." line per criterion and exits
// non-zero when any selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "cubewalk/crosscheck.hpp"
#include "cubewalk/dynamics.hpp"
#include "cubewalk/graphwalk.hpp"
#include "cubewalk/oracle.hpp"
#include "cubewalk/pst.hpp"
#include "cubewalk/scanner.hpp"
#include "cubewalk/spectral.hpp"
#include "json.hpp"
#include "report_json.hpp"
#include "support/brute_force.hpp"

using namespace cubewalk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome fail(const std::string& why) { return {false, why}; }

// 1. Hypercube transfer to the all-ones vertex at pi/2 for n = 1..10.
Outcome hypercube_pst() {
  double slowest = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const auto q = ConnectionSet::hypercube(n);
    const auto start = Clock::now();
    const auto cert = pst_at_half_pi(q);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    if (!cert || cert->delta != GroupElement::all_ones(n)) return fail("no certificate at n=" + std::to_string(n));
    if (elapsed >= 1.0) return fail("closed form took " + std::to_string(elapsed) + " s at n=" + std::to_string(n));

    const auto exact = all_amplitudes_exact(q, RationalAngle::half_pi());
    const std::int64_t full = std::int64_t{1} << (2 * n);
    const Label ones = GroupElement::all_ones(n).bits();
    for (Label d = 0; d < exact.size(); ++d) {
      const auto expected = d == ones ? full : 0;
      if (exact[d].norm() != expected)
        return fail("n=" + std::to_string(n) + " delta=" + std::to_string(d) + " |T|^2=" +
                    std::to_string(exact[d].norm()));
    }
  }
  return {true, "n=1..10 exact; slowest closed form " + std::to_string(slowest) + " s"};
}

// 2. The three-dimensional example graphs.
Outcome example_graphs() {
  const auto c1 = parse_set("010,001,111", 3);
  const auto t = RationalAngle::half_pi();
  for (Label a = 0; a < 8; ++a) {
    for (Label b = 0; b < 8; ++b) {
      const auto z = amplitude_exact(c1, GroupElement(a ^ b, 3), t);
      const bool perfect = z.norm() == 64;
      if (perfect != (b == (a ^ 0b100u)))
        return fail("C1 pair (" + std::to_string(a) + "," + std::to_string(b) + ") wrong");
    }
  }
  const auto kb = is_complete_bipartite(folded_cube(3));
  if (!kb || kb->first != 4 || kb->second != 4) return fail("folded cube is not K_{4,4}");
  const auto profile = bfs_profile(c1, GroupElement::zero(3));
  if (profile.diameter != 3) return fail("C1 diameter " + std::to_string(profile.diameter));
  if (profile.shell_sizes() != std::vector<std::size_t>{1, 3, 3, 1}) return fail("C1 shells differ");
  return {true, "C1 pairs {x, x^100}; folded cube K_{4,4}; C1 shells 1,3,3,1"};
}

// 3. Return to the start vertex at pi.
Outcome periodicity() {
  std::mt19937_64 rng(20240301);
  double worst = 0.0;
  int exact_checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto set = reference::random_set(n, rng);
    const auto f = all_fidelities(set, RationalAngle::pi());
    for (std::size_t d = 0; d < f.size(); ++d) worst = std::max(worst, std::abs(f[d] - (d == 0 ? 1.0 : 0.0)));
    if (n <= 6) {
      ++exact_checked;
      const auto exact = all_amplitudes_exact(set, RationalAngle::pi());
      const std::int64_t full = std::int64_t{1} << (2 * n);
      for (std::size_t d = 0; d < exact.size(); ++d)
        if (exact[d].norm() != (d == 0 ? full : 0))
          return fail("exact mismatch for " + format_set(set));
    }
  }
  if (worst > 1e-9) return fail("max deviation " + std::to_string(worst));
  std::ostringstream s;
  s << "200 sets, max deviation " << worst << ", " << exact_checked << " exact (n<=6)";
  return {true, s.str()};
}

// 4. Eigenvalue congruences on every nonempty set at n = 4.
Outcome congruences() {
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << 15); ++m) {
    failures += classify_congruences(ConnectionSet::from_mask(4, m)).failures();
    ++checked;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream s;
  s << checked << " sets, " << failures << " failing entries, " << elapsed << " s";
  return {checked == 32767 && failures == 0 && elapsed < 60.0, s.str()};
}

// 5. Dense oracle versus closed form, and commutation.
Outcome oracle_equivalence() {
  CrosscheckOptions opts;
  opts.cases = 100;
  opts.n_max = 6;
  opts.commutation_pairs = 50;
  opts.commutation_n = 4;
  opts.tolerance = 1e-8;
  const auto r = run_crosscheck(opts);
  std::ostringstream s;
  s << r.cases << " cases, formula dev " << r.max_formula_deviation << ", series dev "
    << r.max_path_deviation << ", max commutator " << r.max_commutator << " over "
    << r.commutation_pairs << " pairs";
  const bool ok = r.cases == 100 && r.commutation_pairs == 50 &&
                  r.max_formula_deviation <= 1e-8 && r.max_path_deviation <= 1e-8 &&
                  r.max_commutator == 0;
  return {ok, s.str()};
}

// 6. Every fidelity at pi/2 is exactly 0 or 1 for all sets at n <= 4.
Outcome quarter_period() {
  std::uint64_t sets = 0;
  for (int n = 1; n <= 4; ++n) {
    const std::int64_t full = std::int64_t{1} << (2 * n);
    const std::uint64_t masks = std::uint64_t{1} << ((1 << n) - 1);
    for (std::uint64_t m = 1; m < masks; ++m) {
      const auto set = ConnectionSet::from_mask(n, m);
      for (const auto& z : all_amplitudes_exact(set, RationalAngle::half_pi())) {
        if (z.norm() != 0 && z.norm() != full) return fail("fractional fidelity for " + format_set(set));
      }
      ++sets;
    }
  }
  return {true, std::to_string(sets) + " sets exact"};
}

// Largest off-diagonal |U(t)| over t = k*pi/1024, k = 1..1024.
double dense_sweep_max(const ConnectionSet& set) {
  double best = 0.0;
  for (int k = 1; k <= 1024; ++k) {
    const auto u = oracle::evolve_dense(set, k * std::numbers::pi / 1024.0);
    for (Eigen::Index b = 1; b < u.rows(); ++b) best = std::max(best, std::abs(u(b, 0)));
  }
  return best;
}

// 7. No transfer on u = 0 sets at n <= 4.
Outcome conjecture() {
  const auto start = Clock::now();
  std::uint64_t sets = 0;
  std::uint64_t found = 0;
  for (int n = 1; n <= 4; ++n) {
    ScanOptions opts;
    opts.n = n;
    opts.jobs = 1;
    const auto r = conjecture_scan(opts);
    sets += r.universe;
    found += r.findings.size();
  }
  const double scan_time = seconds_since(start);

  // the dense oracle never sees a near-unit off-diagonal entry either
  double sweep = 0.0;
  std::uint64_t swept = 0;
  for (int n = 1; n <= 3; ++n) {
    SetFilter f;
    f.sum = SumClass::kZero;
    for (const auto& set : enumerate_sets(n, f)) {
      sweep = std::max(sweep, dense_sweep_max(set));
      ++swept;
      for (Label delta = 1; delta < (Label{1} << n); ++delta)
        if (decide_pst_exact(set, GroupElement(delta, n))) ++found;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream s;
  s << sets << " u=0 sets, " << found << " findings, scan " << scan_time << " s; " << swept
    << " sets swept at pi/1024, max off-diagonal |U| " << sweep;
  return {found == 0 && sweep < 1.0 - 1e-9 && elapsed < 300.0, s.str()};
}

// 8. Every transfer offset at n <= 4 is antipodal; reports are
// deterministic and re-verifiable from their manifests.
Outcome antipodality() {
  std::uint64_t offsets = 0;
  std::uint64_t non_antipodal = 0;
  bool deterministic = true;
  bool reverified = true;
  for (int n = 1; n <= 4; ++n) {
    ScanOptions opts;
    opts.n = n;
    const auto a = antipodality_audit(opts);
    opts.jobs = 4;
    const auto b = antipodality_audit(opts);
    deterministic = deterministic &&
                    cli::scan_report_json(a).dump() == cli::scan_report_json(b).dump();
    for (const auto& finding : a.findings) reverified = reverified && reverify(finding);
    offsets += a.counters.at("pst_offsets");
    non_antipodal += a.counters.at("non_antipodal_offsets");
  }

  const auto dir = std::filesystem::temp_directory_path() / "cubewalk_acceptance";
  std::filesystem::create_directories(dir);
  const auto manifest = (dir / "audit_manifest.json").string();
  std::ostringstream sink;
  cli::dispatch({"audit-antipodal", "--n", "4", "--json", "--manifest", manifest}, sink, sink);
  std::ostringstream replay_out;
  const int replay_code = cli::dispatch({"replay", "--manifest", manifest}, replay_out, replay_out);
  std::filesystem::remove_all(dir);
  const bool replayed = replay_code == 0;

  std::ostringstream s;
  s << offsets << " offsets, " << non_antipodal << " non-antipodal; deterministic="
    << deterministic << " reverified=" << reverified << " manifest_replay=" << replayed;
  if (non_antipodal > 0) s << "; e.g. {001,010,011,100} transfers 000->100 at distance 1, diameter 2";
  return {non_antipodal == 0 && deterministic && reverified && replayed, s.str()};
}

// 9. Folded-cube routing to every nonzero target for n = 3..6.
Outcome routing() {
  std::uint64_t plans = 0;
  for (int n = 3; n <= 6; ++n) {
    for (Label target = 1; target < (Label{1} << n); ++target) {
      const auto plan = plan_route(n, GroupElement(target, n));
      Label acc = 0;
      for (const auto& stage : plan.stages) {
        acc ^= stage.hop.bits();
        if (!verify_certificate(stage.set, stage.certificate))
          return fail("stage certificate fails for target " + format_element(GroupElement(target, n)));
        const auto z = amplitude_exact(stage.set, stage.hop, stage.time);
        if (z.norm() != (std::int64_t{1} << (2 * n))) return fail("stage fidelity below 1");
      }
      if (acc != target) return fail("hops do not compose to " + format_element(GroupElement(target, n)));
      ++plans;
    }
  }
  return {true, std::to_string(plans) + " plans verified"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::function<Outcome()> criteria[] = {hypercube_pst,   example_graphs,   periodicity,
                                               congruences,     oracle_equivalence, quarter_period,
                                               conjecture,      antipodality,    routing};
  int first = 1;
  int last = 9;
  if (argc > 1) {
    first = last = std::atoi(argv[1]);
    if (first < 1 || first > 9) {
      std::cerr << "usage: acceptance [1-9]\n";
      return 2;
    }
  }
  bool all = true;
  for (int c = first; c <= last; ++c) {
    Outcome o;
    try {
      o = criteria[c - 1]();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
