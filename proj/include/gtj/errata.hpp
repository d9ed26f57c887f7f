#pragma once

#include "gtj/report.hpp"

namespace gtj {

/// Full audit of every specialized closed form carried by the two presets:
/// the sum constants, the Cassini coefficient blocks, the step-defect
/// omega(n) coefficient, and the companion q-step display. Deterministic
/// order and verdicts.
std::vector<CorollaryAudit> errata_audit();

}  // namespace gtj
