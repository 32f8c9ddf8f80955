// Serialization of reports: JSON via ordered keys (stable bytes in
// deterministic mode) and RFC-4180 CSV with a mandatory header row.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mz/stheta.hpp"
#include "mz/verify.hpp"
#include "mz/zeros.hpp"

namespace mz {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "mollified-zeros/1";

std::string csv_quote(const std::string& field);

ojson zero_report_json(const ZeroReport& report, const ojson& config);
std::string zero_report_csv(const ZeroReport& report);  // one row per zero

std::string stheta_scan_csv(const std::vector<SThetaScanRow>& rows);

ojson identity_checks_json(const std::vector<IdentityCheck>& checks,
                           const ojson& config);
std::string identity_checks_csv(const std::vector<IdentityCheck>& checks);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mz
