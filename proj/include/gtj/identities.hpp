#pragma once

#include <utility>

#include "gtj/report.hpp"

namespace gtj {

/// d'Ocagne cross product: lhs = term(m+1)term(n) - term(m)term(n+1),
/// rhs = (combo omega(n-m) + lambda(1+i/2)(2^m psi(n) - 2^n psi(m)))/49.
std::pair<GaussianRational, GaussianRational> docagne(const SeedTriple& seed, std::int64_t m,
                                                      std::int64_t n);

struct CassiniSides {
    GaussianRational lhs;           // term(n)^2 - term(n-1) term(n+1)
    GaussianRational rhs_psi;       // psi-difference closed form
    GaussianRational rhs_expanded;  // (8l1-3l2) omega(n) + (3l1+5l2) omega(n+1) form
};

/// Both closed forms next to the product side; all three must agree.
CassiniSides cassini(const SeedTriple& seed, std::int64_t n);

/// lhs = sum of terms 0..n, rhs = (term(n+2) + 2 term(n) + K)/3 with
/// K = (a-c) + (c-3b-a)/2 i.
std::pair<GaussianRational, GaussianRational> partial_sum(const SeedTriple& seed, std::int64_t n);

/// lambda1^2 - lambda1 lambda2 + lambda2^2, the index-free constant of the
/// cross identities (-7i for jg, -147i for kg).
GaussianRational lambda_combination(const SeedTriple& seed);

// Single-instance checks, one report each.
IdentityReport check_docagne(const SeedTriple& seed, std::int64_t m, std::int64_t n);
IdentityReport check_cassini(const SeedTriple& seed, std::int64_t n);
IdentityReport check_partial_sum(const SeedTriple& seed, std::int64_t n);
IdentityReport check_jump3(const SeedTriple& seed, std::int64_t n);
IdentityReport check_window3(const SeedTriple& seed, std::int64_t n);
IdentityReport check_step(const SeedTriple& seed, std::int64_t n);

/// Sweeps every specialized closed-form constant of the preset (sum and
/// Cassini) literally as printed, next to the constants re-derived from the
/// general theorem, over n in [0, 24] (sums) resp. [1, 24] (Cassini).
std::vector<CorollaryAudit> audit_preset_corollaries(Preset p);

/// Compares the two candidate omega(n) coefficients of the step defect
/// against 2 term(n) - term(n+1) over the jg preset.
CorollaryAudit audit_xi_coefficient();

/// Flattened printed+derived reports of audit_preset_corollaries.
std::vector<IdentityReport> audit_corollaries(Preset p);

}  // namespace gtj
