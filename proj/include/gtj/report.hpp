#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtj/sequence.hpp"

namespace gtj {

struct Counterexample {
    std::vector<std::int64_t> indices;
    GaussianRational lhs;
    GaussianRational rhs;
};

/// Outcome of checking one identity at one or many index points.
/// holds() iff no counterexample was found.
struct IdentityReport {
    std::string identity;
    SeedTriple seed;
    std::vector<std::string> index_names;            // labels per tuple slot, e.g. {"m", "n"}
    std::vector<std::vector<std::int64_t>> indices;  // tuples checked
    std::optional<Counterexample> counterexample;    // first failure, if any

    bool holds() const { return !counterexample.has_value(); }
};

/// Evaluates (lhs, rhs) per index tuple and records the first mismatch.
using IdentityEval =
    std::function<std::pair<GaussianRational, GaussianRational>(const std::vector<std::int64_t>&)>;

IdentityReport sweep_identity(std::string name, const SeedTriple& seed,
                              std::vector<std::string> index_names,
                              std::vector<std::vector<std::int64_t>> tuples,
                              const IdentityEval& eval);

/// A closed form audited literally as printed, next to the corrected form
/// instantiated from the general theorem. Both sides are swept against
/// recurrence ground truth.
struct CorollaryAudit {
    std::string name;
    std::string printed_formula;
    std::string derived_formula;
    IdentityReport printed;
    IdentityReport derived;
};

}  // namespace gtj
