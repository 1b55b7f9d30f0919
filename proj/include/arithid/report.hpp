#pragma once

// Serialization of run reports and the identity list. The JSON layout is
//   {run:{config, started_at},
//    identities:[{id, name, anchor, checked, passed, failed, skipped,
//                 max_residual, elapsed_ms, failures:[{inputs, lhs, rhs, residual}]}],
//    verdict}
// and the CSV form has one row per identity.

#include <arithid/verifier.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace arithid {

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(const std::string& s);

nlohmann::json to_json(const EvalValue& v);
nlohmann::json to_json(const Inputs& in);
nlohmann::json to_json(const RunReport& report);

std::string to_csv(const RunReport& report);
std::string to_text(const RunReport& report);
std::string render(const RunReport& report, OutputFormat format);
/// One line: verdict, identity count and failure count.
std::string summary_line(const RunReport& report);

nlohmann::json to_json(const std::vector<IdentitySummary>& list);
std::string to_csv(const std::vector<IdentitySummary>& list);
std::string to_text(const std::vector<IdentitySummary>& list);
std::string render(const std::vector<IdentitySummary>& list, OutputFormat format);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace arithid
