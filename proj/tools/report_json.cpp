#include "report_json.hpp"

#include <iomanip>
#include <sstream>

namespace cubewalk::cli {

Json labels_json(std::span<const Label> labels, int n) {
  Json out = Json::array();
  for (Label x : labels) out.push_back(format_element(x, n));
  return out;
}

Json set_json(const ConnectionSet& set) { return labels_json(set.elements(), set.dim()); }

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json gaussian_json(const GaussianInteger& z) { return Json{{"re", z.re}, {"im", z.im}}; }

Json spectrum_json(const ConnectionSet& set, const Spectrum& spec,
                   const CongruenceReport& report) {
  Json rows = Json::array();
  for (const auto& e : report.entries) {
    rows.push_back({{"v", format_element(e.v, spec.dim())},
                    {"lambda", e.lambda},
                    {"k", e.k},
                    {"congruence_class", congruence_class_label(e.offset)},
                    {"pass", e.pass}});
  }
  return Json{{"n", set.dim()},
              {"omega", set_json(set)},
              {"d", set.degree()},
              {"u", format_element(set.u())},
              {"congruence_case", to_string(report.kind)},
              {"k_max", report.k_max},
              {"all_pass", report.all_pass()},
              {"rows", std::move(rows)}};
}

std::string spectrum_csv(const Spectrum& spec, const CongruenceReport& report) {
  std::ostringstream out;
  out << "v_binary,lambda,k,congruence_class\n";
  for (const auto& e : report.entries) {
    out << format_element(e.v, spec.dim()) << ',' << e.lambda << ',' << e.k << ','
        << congruence_class_label(e.offset) << '\n';
  }
  return out.str();
}

Json certificate_json(const PstCertificate& cert) {
  Json out{{"delta", format_element(cert.delta)},
           {"time", cert.time.to_string()},
           {"method", to_string(cert.method)},
           {"phase", complex_json(cert.phase)}};
  if (cert.exact_phase) out["exact_phase"] = gaussian_json(*cert.exact_phase);
  return out;
}

Json route_json(const RoutingPlan& plan) {
  Json stages = Json::array();
  for (const auto& s : plan.stages) {
    stages.push_back({{"set", set_json(s.set)},
                      {"hop", format_element(s.hop)},
                      {"time", s.time.to_string()},
                      {"certificate", certificate_json(s.certificate)}});
  }
  return Json{{"n", plan.n},
              {"target", format_element(plan.target)},
              {"base", set_json(plan.base)},
              {"stages", std::move(stages)}};
}

Json finding_json(const Finding& finding) {
  const int n = finding.set.dim();
  Json offsets = Json::array();
  for (const auto& off : finding.offsets) {
    offsets.push_back({{"delta", format_element(off.delta, n)},
                       {"time", off.time.to_string()},
                       {"tau", {off.time.p(), off.time.q()}},
                       {"distance", off.distance},
                       {"antipodal", off.antipodal}});
  }
  return Json{{"set", format_set(finding.set)},
              {"u", format_element(finding.u(), n)},
              {"connected", finding.connected},
              {"diameter", finding.diameter},
              {"pst_offsets", std::move(offsets)}};
}

Finding finding_from_json(const Json& doc, int n) {
  Finding finding{parse_set(doc.at("set").get<std::string>(), n),
                  doc.at("connected").get<bool>(), doc.at("diameter").get<std::int32_t>(), {}};
  for (const auto& off : doc.at("pst_offsets")) {
    const auto& tau = off.at("tau");
    finding.offsets.push_back({parse_element(off.at("delta").get<std::string>(), n).bits(),
                               RationalAngle(tau.at(0).get<std::int64_t>(),
                                             tau.at(1).get<std::int64_t>()),
                               off.at("distance").get<std::int32_t>(),
                               off.at("antipodal").get<bool>()});
  }
  return finding;
}

Json scan_report_json(const ScanReport& report) {
  Json findings = Json::array();
  for (const auto& f : report.findings) findings.push_back(finding_json(f));
  Json counters = Json::object();
  for (const auto& [k, v] : report.counters) counters[k] = v;
  Json out{{"kind", to_string(report.kind)},
           {"n", report.n},
           {"mode", report.mode},
           {"filters", report.filter.describe()},
           {"universe", report.universe},
           {"seed", report.seed}};
  if (report.sample) out["sample"] = *report.sample;
  out["counters"] = std::move(counters);
  out["violations"] = report.violations;
  out["status"] = report.violations == 0 ? "evidence: no violation found" : "violation found";
  out["findings"] = std::move(findings);
  return out;
}

std::string scan_report_text(const ScanReport& report) {
  std::ostringstream out;
  const auto row = [&out](const std::string& key, const std::string& value) {
    out << "  " << std::left << std::setw(28) << key << value << '\n';
  };
  out << to_string(report.kind) << " (n = " << report.n << ")\n";
  row("mode", report.mode);
  row("filters", report.filter.describe());
  if (report.sample) {
    row("sample", std::to_string(*report.sample));
    row("seed", std::to_string(report.seed));
  }
  row("sets scanned", std::to_string(report.universe));
  for (const auto& [k, v] : report.counters) row(k, std::to_string(v));
  row("violations", std::to_string(report.violations));
  row("findings recorded", std::to_string(report.findings.size()));
  row("status", report.violations == 0 ? "evidence: no violation found" : "violation found");
  return out.str();
}

}  // namespace cubewalk::cli
