#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibdual/identities.hpp"

namespace fibdual::cli {

struct ReportEntry {
  CheckReport report;
  std::string paper_ref;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

// The document emitted by `fibdual check`. Results stay in catalog order,
// which is also identity-id order.
struct ReportDocument {
  std::string version;
  std::optional<std::string> generated_at;
  std::vector<ReportEntry> results;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

std::string current_timestamp_utc();

// Schema:
// { "version": string, "generated_at"?: string,
//   "results": [ { "id": string, "paper_ref": string,
//                  "range": {"n":[lo,hi], "m"?:[lo,hi], "p"?:[lo,hi]},
//                  "status": "verified"|"refuted", "instances": integer,
//                  "counterexample"?: { "n": int, "m"?: int, "p"?: int,
//                                       "lhs": value, "rhs": value,
//                                       "delta": value } } ] }
// Big integers are decimal strings; dual numbers are {"re","du"}; quaternions
// {"w","x","y","z"}; dual quaternions {"real":{...},"dual":{...}}.
std::string emit_report_json(const ReportDocument& doc);

// Inverse of emit_report_json; throws std::invalid_argument on malformed
// documents.
ReportDocument parse_report_json(const std::string& text);

}  // namespace fibdual::cli
