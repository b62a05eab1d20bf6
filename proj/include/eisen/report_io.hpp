#ifndef EISEN_REPORT_IO_HPP
#define EISEN_REPORT_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "eisen/congruence.hpp"
#include "eisen/scan.hpp"

namespace eisen {

using Json = nlohmann::ordered_json;

Json cycnum_to_json(const CycNum& x);
CycNum cycnum_from_json(const Json& j);

Json report_to_json(const CuspidalReport& r);
CuspidalReport report_from_json(const Json& j);

// {version, config, reports: [...]}; byte-stable for a fixed config
std::string render_scan_json(const ScanConfig& cfg, const std::vector<CuspidalReport>& reports);
// one row per (config, cusp) plus a summary row per config
std::string render_scan_csv(const ScanConfig& cfg, const std::vector<CuspidalReport>& reports);

Json congruence_to_json(const CongruenceReport& r);

// writes to the path, or stdout for "-"; io failures carry the path
void emit(const ScanConfig& cfg, const std::vector<CuspidalReport>& reports);

std::string qexpansion_to_json_string(const QExpansion& g);

}  // namespace eisen

#endif
