#include "gtj/q_family.hpp"

#include "gtj/errors.hpp"

namespace gtj {

QIndex QIndex::decompose(std::int64_t q, std::int64_t n) {
    if (q < 1) {
        throw InvalidQ("q must be a positive integer");
    }
    if (n < 0) {
        throw BadRange("q-family index must be non-negative");
    }
    return {q, n, n / q, n % q};
}

GaussianRational q_term(const SeedTriple& s, std::int64_t q, std::int64_t n) {
    const QIndex d = QIndex::decompose(q, n);
    const GaussianRational tm = term_recurrence(s, d.m);
    const GaussianRational tm1 = term_recurrence(s, d.m + 1);
    return pow(tm, static_cast<std::uint64_t>(d.q - d.r)) *
           pow(tm1, static_cast<std::uint64_t>(d.r));
}

namespace {

void require_step_args(std::int64_t q, std::int64_t m) {
    if (q < 2) {
        throw InvalidQ("q-step relation needs q >= 2");
    }
    if (m < 0) {
        throw BadRange("quotient m must be non-negative");
    }
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    BigInt result(1);
    for (std::int64_t j = 1; j <= k; ++j) {
        result = result * (n - k + j) / j;
    }
    return result;
}

}  // namespace

IdentityReport q_step_check(const SeedTriple& s, std::int64_t q, std::int64_t m) {
    require_step_args(q, m);
    return sweep_identity("qstep", s, {"q", "m"}, {{q, m}},
                          [&s](const std::vector<std::int64_t>& t) {
                              const std::int64_t q_ = t[0];
                              const std::int64_t m_ = t[1];
                              const GaussianRational lhs = q_term(s, q_, m_ * q_ + 1);
                              const GaussianRational rhs =
                                  Rational(2) * q_term(s, q_, m_ * q_) -
                                  q_term(s, q_ - 1, m_ * (q_ - 1)) * xi_seq(s, m_);
                              return std::pair{lhs, rhs};
                          });
}

IdentityReport q_step_companion_check(const SeedTriple& s, std::int64_t q, std::int64_t m) {
    require_step_args(q, m);
    return sweep_identity("qstep-companion", s, {"q", "m"}, {{q, m}},
                          [&s](const std::vector<std::int64_t>& t) {
                              const std::int64_t q_ = t[0];
                              const std::int64_t m_ = t[1];
                              const GaussianRational lhs = q_term(s, q_, m_ * q_ + 1);
                              const GaussianRational rhs =
                                  Rational(2) * q_term(s, q_, m_ * q_) +
                                  q_term(s, q_, (m_ + 1) * q_ - 1) +
                                  q_term(s, q_ - 1, m_ * (q_ - 1)) * xi_seq(s, m_);
                              return std::pair{lhs, rhs};
                          });
}

IdentityReport binomial_sum_check(const SeedTriple& s, std::int64_t q, std::int64_t m) {
    if (m < 0) {
        throw BadRange("quotient m must be non-negative");
    }
    return sweep_identity(
        "qbinom", s, {"q", "m"}, {{q, m}}, [&s](const std::vector<std::int64_t>& t) {
            const std::int64_t q_ = t[0];
            const std::int64_t m_ = t[1];
            GaussianRational lhs;
            for (std::int64_t r = 0; r < q_; ++r) {
                lhs += Rational(binomial(q_ - 1, r)) * q_term(s, q_, m_ * q_ + r);
            }
            const GaussianRational tm = term_recurrence(s, m_);
            const GaussianRational rhs =
                tm * pow(Rational(3) * tm - xi_seq(s, m_), static_cast<std::uint64_t>(q_ - 1));
            return std::pair{lhs, rhs};
        });
}

GaussianRational geometric_sum_closed_form(const SeedTriple& s, std::int64_t q, std::int64_t m) {
    if (q < 1) {
        throw InvalidQ("q must be a positive integer");
    }
    const GaussianRational tm = term_recurrence(s, m);
    const GaussianRational tm1 = term_recurrence(s, m + 1);
    const GaussianRational denom = tm - xi_seq(s, m);  // equals tm1 - tm by the step identity
    if (denom.is_zero()) {
        throw DegenerateRatio("term(m+1) == term(m): geometric ratio is 1");
    }
    const auto exp = static_cast<std::uint64_t>(q);
    return tm * (pow(tm1, exp) - pow(tm, exp)) / denom;
}

IdentityReport geometric_sum_check(const SeedTriple& s, std::int64_t q, std::int64_t m) {
    if (q < 1) {
        throw InvalidQ("q must be a positive integer");
    }
    if (m < 0) {
        throw BadRange("quotient m must be non-negative");
    }
    GaussianRational lhs;
    for (std::int64_t r = 0; r < q; ++r) {
        lhs += q_term(s, q, m * q + r);
    }

    const GaussianRational tm = term_recurrence(s, m);
    const GaussianRational tm1 = term_recurrence(s, m + 1);
    const GaussianRational denom_theorem = tm - xi_seq(s, m);
    const GaussianRational denom_direct = tm1 - tm;

    IdentityReport rep{"qgeom", s, {"q", "m"}, {{q, m}}, std::nullopt};
    if (!(denom_theorem == denom_direct)) {
        rep.identity = "qgeom (denominator consistency)";
        rep.counterexample = Counterexample{{q, m}, denom_theorem, denom_direct};
        return rep;
    }
    GaussianRational rhs;
    if (denom_theorem.is_zero()) {
        rep.identity = "qgeom (ratio 1 fallback: sum = q*term(m)^q)";
        rhs = Rational(q) * pow(tm, static_cast<std::uint64_t>(q));
    } else {
        rhs = tm * (pow(tm1, static_cast<std::uint64_t>(q)) -
                    pow(tm, static_cast<std::uint64_t>(q))) /
              denom_theorem;
    }
    if (!(lhs == rhs)) {
        rep.counterexample = Counterexample{{q, m}, lhs, rhs};
    }
    return rep;
}

CorollaryAudit audit_qstep_companion() {
    const SeedTriple seed = preset_seed(Preset::Jg);
    std::vector<std::vector<std::int64_t>> tuples;
    for (std::int64_t q = 2; q <= 4; ++q) {
        for (std::int64_t m = 1; m <= 6; ++m) {
            tuples.push_back({q, m});
        }
    }

    const IdentityEval printed_eval = [seed](const std::vector<std::int64_t>& t) {
        const std::int64_t q = t[0];
        const std::int64_t m = t[1];
        const GaussianRational lhs = q_term(seed, q, m * q + 1);
        const GaussianRational rhs = Rational(2) * q_term(seed, q, m * q) +
                                     q_term(seed, q, (m + 1) * q - 1) +
                                     q_term(seed, q - 1, m * (q - 1)) * xi_seq(seed, m);
        return std::pair{lhs, rhs};
    };
    const IdentityEval derived_eval = [seed](const std::vector<std::int64_t>& t) {
        const std::int64_t q = t[0];
        const std::int64_t m = t[1];
        const GaussianRational lhs = q_term(seed, q, m * q + 1);
        const GaussianRational rhs = Rational(2) * q_term(seed, q, m * q) -
                                     q_term(seed, q - 1, m * (q - 1)) * xi_seq(seed, m);
        return std::pair{lhs, rhs};
    };

    return CorollaryAudit{
        "qstep-companion-form",
        "qterm(q, mq+1) = 2*qterm(q, mq) + qterm(q, (m+1)q-1) + qterm(q-1, m(q-1))*Xi(m)",
        "qterm(q, mq+1) = 2*qterm(q, mq) - qterm(q-1, m(q-1))*Xi(m)",
        sweep_identity("qstep-companion (printed)", seed, {"q", "m"}, tuples, printed_eval),
        sweep_identity("qstep-companion (derived)", seed, {"q", "m"}, tuples, derived_eval)};
}

}  // namespace gtj
