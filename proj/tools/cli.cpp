#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "cubewalk/crosscheck.hpp"
#include "manifest.hpp"
#include "report_json.hpp"

#ifndef CUBEWALK_VERSION
#define CUBEWALK_VERSION "0.0.0"
#endif

namespace cubewalk::cli {

namespace {

using Time = std::variant<RationalAngle, double>;

struct Options {
  std::string command;
  int n = 0;
  std::string omega;
  std::string t_pi;
  std::optional<double> t_real;
  std::string delta;
  std::string target;
  std::string source;
  unsigned jobs = 1;
  std::string out_path;
  std::string manifest_path;
  std::optional<std::uint64_t> seed;
  bool csv = false;
  bool json = false;
  bool force_float = false;
  // graph
  bool distances = false;
  bool diameter = false;
  bool antipodal = false;
  bool bipartite = false;
  // scan
  bool u_zero = false;
  int d_min = 1;
  std::optional<int> d_max;
  std::optional<std::uint64_t> sample;
  // oracle-verify
  int cases = 100;
  int n_max = 6;
};

/// What a command produced: `document` is the canonical artifact that is
/// digested and persisted; `display` is what stdout shows.
struct Output {
  std::string document;
  std::optional<std::string> display;
  int exit_code = kExitOk;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("CUBEWALK_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

ConnectionSet read_set(const Options& o) { return parse_set(o.omega, o.n); }

Time read_time(const Options& o) {
  if (!o.t_pi.empty() && o.t_real) throw InvalidInput("give either --t-pi or --t-real, not both");
  if (!o.t_pi.empty()) return RationalAngle::parse(o.t_pi);
  if (o.t_real) {
    if (!std::isfinite(*o.t_real)) throw InvalidInput("--t-real must be finite");
    return *o.t_real;
  }
  throw InvalidInput("a time is required: --t-pi p/q or --t-real x");
}

bool exact_mode(const Time& t, const Options& o) {
  const auto* r = std::get_if<RationalAngle>(&t);
  return r && !o.force_float && 2 % r->q() == 0;
}

Json time_json(const Time& t) {
  if (const auto* r = std::get_if<RationalAngle>(&t)) return r->to_string();
  std::ostringstream s;
  s.precision(17);
  s << std::get<double>(t);
  return s.str();
}

std::vector<Complex> float_amplitudes(const ConnectionSet& set, const Time& t) {
  return std::visit([&set](const auto& v) { return all_amplitudes(set, v); }, t);
}

constexpr const char* kNormalization = "fidelity = |T|/2^n; amplitude is the unnormalized T";

Output cmd_spectrum(const Options& o) {
  const auto set = read_set(o);
  const auto spec = spectrum(set);
  const auto report = classify_congruences(spec, set.u(), set.contains(set.u().bits()));
  Output out;
  out.document = o.csv ? spectrum_csv(spec, report) : dump(spectrum_json(set, spec, report));
  out.exit_code = report.all_pass() ? kExitOk : kExitVerificationFailure;
  return out;
}

Output cmd_evolve(const Options& o) {
  const auto set = read_set(o);
  const auto t = read_time(o);
  const int n = set.dim();
  const double full = std::ldexp(1.0, n);
  Output out;
  std::ostringstream csv;
  csv << "delta,amplitude_re,amplitude_im,fidelity\n";
  Json entries = Json::array();
  bool unitary = true;
  Json unitarity;

  if (exact_mode(t, o)) {
    const auto amps = all_amplitudes_exact(set, std::get<RationalAngle>(t));
    std::uint64_t norm_sum = 0;
    for (Label delta = 0; delta < amps.size(); ++delta) {
      const double fid = std::sqrt(static_cast<double>(amps[delta].norm())) / full;
      norm_sum += static_cast<std::uint64_t>(amps[delta].norm());
      entries.push_back({{"delta", format_element(delta, n)},
                         {"amplitude", gaussian_json(amps[delta])},
                         {"fidelity", fid}});
      csv << format_element(delta, n) << ',' << amps[delta].re << ',' << amps[delta].im << ','
          << fid << '\n';
    }
    unitary = norm_sum == (std::uint64_t{1} << (2 * n));
    unitarity = {{"sum_abs_T_squared", norm_sum}, {"expected", std::uint64_t{1} << (2 * n)}};
  } else {
    const auto amps = float_amplitudes(set, t);
    double sum = 0.0;
    csv.precision(17);
    for (Label delta = 0; delta < amps.size(); ++delta) {
      const double fid = std::abs(amps[delta]) / full;
      sum += fid * fid;
      entries.push_back({{"delta", format_element(delta, n)},
                         {"amplitude", complex_json(amps[delta])},
                         {"fidelity", fid}});
      csv << format_element(delta, n) << ',' << amps[delta].real() << ','
          << amps[delta].imag() << ',' << fid << '\n';
    }
    unitary = std::abs(sum - 1.0) <= kFidelityTolerance;
    unitarity = {{"sum_fidelity_squared", sum}, {"tolerance", kFidelityTolerance}};
  }

  if (o.csv) {
    out.document = csv.str();
  } else {
    out.document = dump(Json{{"n", n},
                             {"omega", set_json(set)},
                             {"time", time_json(t)},
                             {"mode", exact_mode(t, o) ? "exact" : "float"},
                             {"normalization", kNormalization},
                             {"unitarity", unitarity},
                             {"entries", std::move(entries)}});
  }
  out.exit_code = unitary ? kExitOk : kExitVerificationFailure;
  return out;
}

Output cmd_fidelity(const Options& o) {
  const auto set = read_set(o);
  const auto t = read_time(o);
  if (o.delta.empty()) throw InvalidInput("--delta is required");
  const auto delta = parse_element(o.delta, o.n);
  const double full = std::ldexp(1.0, o.n);
  Json doc{{"n", o.n}, {"omega", set_json(set)}, {"delta", format_element(delta)},
           {"time", time_json(t)}};
  if (exact_mode(t, o)) {
    const auto amp = amplitude_exact(set, delta, std::get<RationalAngle>(t));
    doc["mode"] = "exact";
    doc["amplitude"] = gaussian_json(amp);
    doc["fidelity"] = std::sqrt(static_cast<double>(amp.norm())) / full;
  } else {
    const auto zero = GroupElement::zero(o.n);
    const auto amp = std::visit(
        [&](const auto& v) { return amplitude(set, zero, delta, v); }, t);
    doc["mode"] = "float";
    doc["amplitude"] = complex_json(amp);
    doc["fidelity"] = std::abs(amp) / full;
  }
  doc["normalization"] = kNormalization;
  return {dump(doc), std::nullopt, kExitOk};
}

Output cmd_measure(const Options& o) {
  const auto set = read_set(o);
  const auto t = read_time(o);
  const auto a = o.source.empty() ? GroupElement::zero(o.n) : parse_element(o.source, o.n);
  const int n = o.n;
  Json probs = Json::array();
  std::ostringstream csv;
  csv << "b,probability\n";
  Json doc{{"n", n}, {"omega", set_json(set)}, {"a", format_element(a)}, {"time", time_json(t)}};
  bool normalized = true;

  if (exact_mode(t, o)) {
    const auto dist = measurement_distribution_exact(set, a, std::get<RationalAngle>(t));
    std::uint64_t total = 0;
    for (Label b = 0; b < dist.numerators.size(); ++b) {
      total += dist.numerators[b];
      probs.push_back({{"b", format_element(b, n)}, {"numerator", dist.numerators[b]}});
      csv << format_element(b, n) << ','
          << static_cast<double>(dist.numerators[b]) / static_cast<double>(dist.denominator())
          << '\n';
    }
    normalized = total == dist.denominator();
    doc["mode"] = "exact";
    doc["denominator"] = dist.denominator();
  } else {
    const auto dist = std::visit(
        [&](const auto& v) { return measurement_distribution(set, a, v); }, t);
    double total = 0.0;
    csv.precision(17);
    for (Label b = 0; b < dist.size(); ++b) {
      total += dist[b];
      probs.push_back({{"b", format_element(b, n)}, {"probability", dist[b]}});
      csv << format_element(b, n) << ',' << dist[b] << '\n';
    }
    normalized = std::abs(total - 1.0) <= kFidelityTolerance;
    doc["mode"] = "float";
  }
  doc["probabilities"] = std::move(probs);

  const auto* r = std::get_if<RationalAngle>(&t);
  if (r && *r == RationalAngle::half_pi()) {
    if (set.u().is_zero()) {
      doc["note"] =
          "u = 0: the exact evolution returns to a with certainty at pi/2; a decay of the "
          "transfer probability with n is not asserted";
    } else {
      doc["note"] = "u != 0: the outcome a XOR u is observed with certainty at pi/2";
    }
  }

  Output out{o.csv ? csv.str() : dump(doc), std::nullopt, kExitOk};
  out.exit_code = normalized ? kExitOk : kExitVerificationFailure;
  return out;
}

Output cmd_graph(const Options& o) {
  const auto set = read_set(o);
  const bool all = !(o.distances || o.diameter || o.antipodal || o.bipartite);
  const auto profile = bfs_profile(set, GroupElement::zero(o.n));
  Json doc{{"n", o.n},
           {"omega", set_json(set)},
           {"connected", profile.connected},
           {"rank", gf2_rank(set)}};
  if (all || o.distances) {
    doc["distances"] = profile.dist;
    doc["shell_sizes"] = profile.shell_sizes();
  }
  if (all || o.diameter) doc["diameter"] = profile.diameter;
  if (all || o.antipodal) {
    if (profile.connected) {
      const auto pairs = antipodal_pairs(set);
      doc["antipodal"] = labels_json(pairs, o.n);
    } else {
      doc["antipodal"] = nullptr;
    }
  }
  if (all || o.bipartite) {
    doc["bipartite"] = is_bipartite(set);
    const auto parts = is_complete_bipartite(set);
    doc["complete_bipartite"] =
        parts ? Json::array({parts->first, parts->second}) : Json(nullptr);
  }
  return {dump(doc), std::nullopt, kExitOk};
}

Output cmd_pst_check(const Options& o) {
  const auto set = read_set(o);
  Json doc{{"n", o.n}, {"omega", set_json(set)}, {"u", format_element(set.u())}};
  if (const auto cert = pst_at_half_pi(set)) {
    doc["pst"] = true;
    doc["delta"] = format_element(cert->delta);
    doc["time"] = cert->time.to_string();
    doc["certificate"] = certificate_json(*cert);
    doc["verified"] = verify_certificate(set, *cert);
  } else {
    doc["pst"] = false;
    doc["note"] = "revival at pi/2";
  }
  return {dump(doc), std::nullopt, kExitOk};
}

Output cmd_pst_search(const Options& o) {
  const auto set = read_set(o);
  if (o.delta.empty()) throw InvalidInput("--delta is required");
  const auto delta = parse_element(o.delta, o.n);
  if (delta.is_zero()) throw InvalidInput("--delta must be nonzero; delta = 0 is periodicity");
  Json doc{{"n", o.n}, {"omega", set_json(set)}, {"delta", format_element(delta)}};
  const auto cert = pst_certificate_exact(set, delta);
  doc["pst"] = cert.has_value();
  if (cert) {
    doc["time"] = cert->time.to_string();
    doc["tau"] = {cert->time.p(), cert->time.q()};
    doc["earliest"] = true;
    doc["note"] = "earliest positive PST time (minimality is an extension of the pi/2 result)";
    doc["certificate"] = certificate_json(*cert);
    doc["verified"] = verify_certificate(set, *cert);
  }
  return {dump(doc), std::nullopt, kExitOk};
}

Output cmd_route(const Options& o) {
  if (o.target.empty()) throw InvalidInput("--target is required");
  const auto target = parse_element(o.target, o.n);
  const auto plan = o.omega.empty() ? plan_route(o.n, target) : plan_route(read_set(o), target);
  bool ok = true;
  Label acc = 0;
  for (const auto& s : plan.stages) {
    acc ^= s.hop.bits();
    ok = ok && verify_certificate(s.set, s.certificate);
  }
  ok = ok && acc == target.bits();
  auto doc = route_json(plan);
  doc["verified"] = ok;
  return {dump(doc), std::nullopt, ok ? kExitOk : kExitVerificationFailure};
}

ScanOptions scan_options(const Options& o) {
  ScanOptions opts;
  opts.n = o.n;
  opts.filter.d_min = o.d_min;
  opts.filter.d_max = o.d_max;
  if (o.u_zero) opts.filter.sum = SumClass::kZero;
  opts.sample = o.sample;
  opts.seed = o.seed.value_or(0);
  opts.jobs = o.jobs;
  return opts;
}

Output scan_output(const ScanReport& report, const Options& o, std::ostream& err) {
  err << to_string(report.kind) << ": wall time " << report.wall_time_s << " s\n";
  Output out;
  out.document = dump(scan_report_json(report));
  if (!o.json) out.display = scan_report_text(report);
  out.exit_code = report.violations == 0 ? kExitOk : kExitViolationFound;
  return out;
}

Output cmd_scan(const Options& o, std::ostream& err) {
  return scan_output(conjecture_scan(scan_options(o)), o, err);
}

Output cmd_audit(const Options& o, std::ostream& err) {
  return scan_output(antipodality_audit(scan_options(o)), o, err);
}

Output cmd_oracle_verify(const Options& o) {
  CrosscheckOptions opts;
  opts.cases = o.cases;
  opts.n_max = o.n_max;
  opts.seed = o.seed.value_or(1);
  const auto r = run_crosscheck(opts);
  const bool pass = r.pass(opts);
  Json doc{{"cases", r.cases},
           {"n_max", opts.n_max},
           {"seed", opts.seed},
           {"max_formula_deviation", r.max_formula_deviation},
           {"max_path_deviation", r.max_path_deviation},
           {"max_unitarity_defect", r.max_unitarity_defect},
           {"tolerance", opts.tolerance},
           {"unitarity_tolerance", opts.unitarity_tolerance},
           {"commutation_pairs", r.commutation_pairs},
           {"max_commutator", r.max_commutator},
           {"pass", pass}};
  return {dump(doc), std::nullopt, pass ? kExitOk : kExitVerificationFailure};
}

// Arguments as recorded in the manifest: output destinations are dropped so
// a replay never overwrites files.
std::vector<std::string> replayable_arguments(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--out" || a == "--manifest") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--manifest=", 0) == 0) continue;
    out.push_back(a);
  }
  return out;
}

struct Invocation {
  Options options;
  Output output;
  std::string started_at;
  std::chrono::steady_clock::time_point clock_start;
};

/// Parses and runs one command. Returns an exit code instead when the run
/// ends early (help, usage errors, invalid input, replay).
std::variant<int, Invocation> execute(const std::vector<std::string>& args, std::ostream& out,
                                      std::ostream& err);

int cmd_replay(const Options& o, std::ostream& out) {
  std::ifstream in(o.manifest_path);
  if (!in) throw InvalidInput("cannot open manifest " + o.manifest_path);
  const auto manifest = RunManifest::from_json(nlohmann::ordered_json::parse(in));
  if (!manifest.arguments.empty() && manifest.arguments.front() == "replay") {
    throw InvalidInput("refusing to replay a replay manifest");
  }
  std::ostringstream sink;
  const auto run = execute(manifest.arguments, sink, sink);
  int code = 0;
  std::string digest;
  if (const auto* inv = std::get_if<Invocation>(&run)) {
    code = inv->output.exit_code;
    digest = sha256_hex(inv->output.document);
  } else {
    code = std::get<int>(run);
  }
  const bool match = digest == manifest.output_digest && code == manifest.exit_code;
  out << dump(Json{{"arguments", manifest.arguments},
                   {"recorded_digest", manifest.output_digest},
                   {"replayed_digest", digest},
                   {"recorded_exit_code", manifest.exit_code},
                   {"replayed_exit_code", code},
                   {"match", match}});
  return match ? kExitOk : kExitVerificationFailure;
}

void add_time_options(CLI::App* sub, Options& o) {
  sub->add_option("--t-pi", o.t_pi, "time as a rational multiple of pi, p/q");
  sub->add_option("--t-real", o.t_real, "time in radians");
}

void add_scan_options(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "dimension")->required();
  sub->add_option("--d-min", o.d_min, "minimum degree");
  sub->add_option("--d-max", o.d_max, "maximum degree");
  sub->add_option("--sample", o.sample, "number of random sets instead of exhaustive mode");
  sub->add_option("--seed", o.seed, "sampling seed");
  sub->add_option("--jobs", o.jobs, "worker threads (default $CUBEWALK_JOBS or 1)");
  sub->add_flag("--json", o.json, "print the full JSON report instead of the summary");
}

std::variant<int, Invocation> execute(const std::vector<std::string>& args, std::ostream& out,
                                      std::ostream& err) {
  Options o;
  o.jobs = default_jobs();

  CLI::App app{"cubewalk: perfect state transfer on cubelike graphs", "cubewalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CUBEWALK_VERSION);

  const auto with_set = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension of Z_2^n")->required();
    sub->add_option("--omega", o.omega, "connection set, e.g. 100,010,001 or 0x4,0x2")
        ->required();
  };
  const auto common = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "also write the document to this path");
    sub->add_option("--manifest", o.manifest_path, "write the run manifest to this path");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and congruence classes");
  with_set(spectrum_cmd);
  spectrum_cmd->add_flag("--csv", o.csv, "CSV instead of JSON");

  auto* evolve_cmd = app.add_subcommand("evolve", "fidelity for every offset at one time");
  with_set(evolve_cmd);
  add_time_options(evolve_cmd, o);
  evolve_cmd->add_flag("--csv", o.csv, "CSV instead of JSON");
  evolve_cmd->add_flag("--float", o.force_float, "floating-point mode even at multiples of pi/2");

  auto* fidelity_cmd = app.add_subcommand("fidelity", "fidelity for a single offset");
  with_set(fidelity_cmd);
  add_time_options(fidelity_cmd, o);
  fidelity_cmd->add_option("--delta", o.delta, "offset a XOR b")->required();
  fidelity_cmd->add_flag("--float", o.force_float, "floating-point mode");

  auto* measure_cmd = app.add_subcommand("measure", "measurement distribution from vertex a");
  with_set(measure_cmd);
  add_time_options(measure_cmd, o);
  measure_cmd->add_option("--a", o.source, "start vertex (default all zeros)");
  measure_cmd->add_flag("--csv", o.csv, "CSV instead of JSON");
  measure_cmd->add_flag("--float", o.force_float, "floating-point mode");

  auto* graph_cmd = app.add_subcommand("graph", "distances, diameter, antipodes, bipartiteness");
  with_set(graph_cmd);
  graph_cmd->add_flag("--distances", o.distances);
  graph_cmd->add_flag("--diameter", o.diameter);
  graph_cmd->add_flag("--antipodal", o.antipodal);
  graph_cmd->add_flag("--bipartite", o.bipartite);

  auto* check_cmd = app.add_subcommand("pst-check", "closed-form PST at t = pi/2");
  with_set(check_cmd);

  auto* search_cmd = app.add_subcommand("pst-search", "exact PST decision for one offset");
  with_set(search_cmd);
  search_cmd->add_option("--delta", o.delta, "offset a XOR b")->required();

  auto* route_cmd = app.add_subcommand("route", "folded-cube routing plan from 0 to a target");
  route_cmd->add_option("--n", o.n, "dimension")->required();
  route_cmd->add_option("--target", o.target, "target vertex")->required();
  route_cmd->add_option("--omega", o.omega, "generating set (default: standard basis)");

  auto* scan_cmd = app.add_subcommand("scan", "search u = 0 sets for PST");
  add_scan_options(scan_cmd, o);
  scan_cmd->add_flag("--u-zero", o.u_zero, "restrict to u = 0 (always on for this scan)");

  auto* audit_cmd = app.add_subcommand("audit-antipodal", "check that PST offsets are antipodal");
  add_scan_options(audit_cmd, o);

  auto* oracle_cmd = app.add_subcommand("oracle-verify", "dense oracle equivalence suite");
  oracle_cmd->add_option("--cases", o.cases, "random (set, t) cases");
  oracle_cmd->add_option("--n-max", o.n_max, "largest dimension sampled");
  oracle_cmd->add_option("--seed", o.seed, "random seed");

  auto* replay_cmd = app.add_subcommand("replay", "re-run a manifest and compare digests");
  replay_cmd->add_option("--manifest", o.manifest_path, "manifest path")->required();

  for (auto* sub : {spectrum_cmd, evolve_cmd, fidelity_cmd, measure_cmd, graph_cmd, check_cmd,
                    search_cmd, route_cmd, scan_cmd, audit_cmd, oracle_cmd}) {
    common(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << CUBEWALK_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  const auto* chosen = app.get_subcommands().front();
  o.command = chosen->get_name();

  Invocation inv;
  inv.started_at = utc_timestamp();
  inv.clock_start = std::chrono::steady_clock::now();
  Output& result = inv.output;
  try {
    if (o.command == "replay") return cmd_replay(o, out);
    if (o.command == "spectrum") result = cmd_spectrum(o);
    else if (o.command == "evolve") result = cmd_evolve(o);
    else if (o.command == "fidelity") result = cmd_fidelity(o);
    else if (o.command == "measure") result = cmd_measure(o);
    else if (o.command == "graph") result = cmd_graph(o);
    else if (o.command == "pst-check") result = cmd_pst_check(o);
    else if (o.command == "pst-search") result = cmd_pst_search(o);
    else if (o.command == "route") result = cmd_route(o);
    else if (o.command == "scan") result = cmd_scan(o, err);
    else if (o.command == "audit-antipodal") result = cmd_audit(o, err);
    else if (o.command == "oracle-verify") result = cmd_oracle_verify(o);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  inv.options = std::move(o);
  return inv;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto run = execute(args, out, err);
  if (const int* code = std::get_if<int>(&run)) return *code;
  const auto& inv = std::get<Invocation>(run);
  const auto& o = inv.options;
  const auto& result = inv.output;

  out << result.display.value_or(result.document);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitInvalidInput;
    }
    file << result.document;
  }

  RunManifest manifest;
  manifest.arguments = replayable_arguments(args);
  manifest.tool_version = CUBEWALK_VERSION;
  if (!o.omega.empty()) manifest.inputs.push_back(o.omega);
  manifest.seed = o.seed;
  manifest.started_at = inv.started_at;
  manifest.finished_at = utc_timestamp();
  manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - inv.clock_start).count();
  manifest.output_digest = sha256_hex(result.document);
  manifest.exit_code = result.exit_code;
  if (o.manifest_path.empty()) {
    err << "manifest: " << manifest.to_json().dump() << '\n';
  } else {
    std::ofstream file(o.manifest_path);
    if (!file) {
      err << "error: cannot write " << o.manifest_path << '\n';
      return kExitInvalidInput;
    }
    file << manifest.to_json().dump(2) << '\n';
  }
  return result.exit_code;
}

}  // namespace cubewalk::cli
