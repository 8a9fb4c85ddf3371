#pragma once

// JSON and CSV renderings of library results. Vertex labels are always
// n-character binary strings and every document carries n.

#include <string>
#include <vector>

#include "cubewalk/bitspace.hpp"
#include "cubewalk/dynamics.hpp"
#include "cubewalk/graphwalk.hpp"
#include "cubewalk/pst.hpp"
#include "cubewalk/scanner.hpp"
#include "cubewalk/spectral.hpp"
#include "json.hpp"

namespace cubewalk::cli {

using Json = nlohmann::ordered_json;

Json labels_json(std::span<const Label> labels, int n);
Json set_json(const ConnectionSet& set);
Json complex_json(std::complex<double> z);
Json gaussian_json(const GaussianInteger& z);

Json spectrum_json(const ConnectionSet& set, const Spectrum& spec, const CongruenceReport& report);
std::string spectrum_csv(const Spectrum& spec, const CongruenceReport& report);

Json certificate_json(const PstCertificate& cert);
Json route_json(const RoutingPlan& plan);

Json finding_json(const Finding& finding);
Finding finding_from_json(const Json& doc, int n);

/// Wall time is left out so that identical scans give identical bytes.
Json scan_report_json(const ScanReport& report);
std::string scan_report_text(const ScanReport& report);

}  // namespace cubewalk::cli
