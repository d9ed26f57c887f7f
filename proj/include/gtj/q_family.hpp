#pragma once

#include "gtj/report.hpp"

namespace gtj {

/// Unique decomposition n = m q + r with 0 <= r < q.
struct QIndex {
    std::int64_t q;
    std::int64_t n;
    std::int64_t m;
    std::int64_t r;

    /// Throws InvalidQ when q < 1, BadRange when n < 0.
    static QIndex decompose(std::int64_t q, std::int64_t n);
};

/// term(m)^(q-r) term(m+1)^r for n = mq + r; equals term(n) at q = 1.
GaussianRational q_term(const SeedTriple& seed, std::int64_t q, std::int64_t n);

/// qterm(q, mq+1) = 2 qterm(q, mq) - qterm(q-1, m(q-1)) Xi(m); requires q >= 2.
IdentityReport q_step_check(const SeedTriple& seed, std::int64_t q, std::int64_t m);

/// The companion displayed form with +qterm(q, (m+1)q-1) and +Xi term,
/// evaluated literally against ground truth (it does not hold).
IdentityReport q_step_companion_check(const SeedTriple& seed, std::int64_t q, std::int64_t m);

/// sum_r C(q-1, r) qterm(q, mq+r) = term(m) (3 term(m) - Xi(m))^(q-1).
IdentityReport binomial_sum_check(const SeedTriple& seed, std::int64_t q, std::int64_t m);

/// sum_r qterm(q, mq+r) = term(m) (term(m+1)^q - term(m)^q) / (term(m) - Xi(m)).
/// When term(m+1) == term(m) the quotient is undefined; the report then
/// verifies the ratio-1 fallback sum = q term(m)^q instead.
IdentityReport geometric_sum_check(const SeedTriple& seed, std::int64_t q, std::int64_t m);

/// Closed-form right side of the geometric sum; throws DegenerateRatio when
/// term(m+1) == term(m).
GaussianRational geometric_sum_closed_form(const SeedTriple& seed, std::int64_t q, std::int64_t m);

/// Sweeps the companion q-step display literally next to the corrected
/// (subtracted) form over the jg preset.
CorollaryAudit audit_qstep_companion();

}  // namespace gtj
