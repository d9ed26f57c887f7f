#pragma once

#include "json.hpp"

#include "gtj/report.hpp"

namespace gtj {

using Json = nlohmann::ordered_json;

/// Fixed schema: {"identity", "seed", "status", "counterexample"}, where
/// seed is the three fraction strings and counterexample is null or
/// {"indices", "lhs", "rhs"} with sides rendered as "re,im".
Json report_to_json(const IdentityReport& rep);

/// Fixed flat schema: {"entry", "printed_formula", "printed_status",
/// "printed_counterexample", "derived_formula", "derived_status",
/// "derived_counterexample"}.
Json audit_to_json(const CorollaryAudit& audit);

}  // namespace gtj
