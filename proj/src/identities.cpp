#include "gtj/identities.hpp"

#include <functional>

#include "gtj/errors.hpp"
#include "gtj/omega.hpp"

namespace gtj {

namespace {

using Sides = std::pair<GaussianRational, GaussianRational>;
using Eval = IdentityEval;
constexpr auto sweep = sweep_identity;

std::vector<std::vector<std::int64_t>> range_tuples(std::int64_t lo, std::int64_t hi) {
    std::vector<std::vector<std::int64_t>> tuples;
    tuples.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) {
        tuples.push_back({n});
    }
    return tuples;
}

GaussianRational sum_constant(const SeedTriple& s) {
    return {s.a - s.c, (s.c - 3 * s.b - s.a) / 2};
}

}  // namespace

GaussianRational lambda_combination(const SeedTriple& s) {
    const DerivedConstants d = derived_constants(s);
    return d.lambda1 * d.lambda1 - d.lambda1 * d.lambda2 + d.lambda2 * d.lambda2;
}

std::pair<GaussianRational, GaussianRational> docagne(const SeedTriple& s, std::int64_t m,
                                                      std::int64_t n) {
    const GaussianRational lhs =
        term_recurrence(s, m + 1) * term_recurrence(s, n) -
        term_recurrence(s, m) * term_recurrence(s, n + 1);
    const GaussianRational rhs =
        (Rational(omega(n - m)) * lambda_combination(s) + geometric_part(s, m) * psi_seq(s, n) -
         geometric_part(s, n) * psi_seq(s, m)) /
        Rational(49);
    return {lhs, rhs};
}

CassiniSides cassini(const SeedTriple& s, std::int64_t n) {
    const GaussianRational tn = term_recurrence(s, n);
    const GaussianRational lhs =
        tn * tn - term_recurrence(s, n - 1) * term_recurrence(s, n + 1);
    const GaussianRational combo = lambda_combination(s);
    const GaussianRational growth = geometric_part(s, n - 1);
    const GaussianRational rhs_psi =
        (combo + growth * (psi_seq(s, n) - Rational(2) * psi_seq(s, n - 1))) / Rational(49);
    const DerivedConstants d = derived_constants(s);
    const GaussianRational coeff_n = Rational(8) * d.lambda1 - Rational(3) * d.lambda2;
    const GaussianRational coeff_n1 = Rational(3) * d.lambda1 + Rational(5) * d.lambda2;
    const GaussianRational rhs_expanded =
        (combo + growth * (Rational(omega(n)) * coeff_n + Rational(omega(n + 1)) * coeff_n1)) /
        Rational(49);
    return {lhs, rhs_psi, rhs_expanded};
}

std::pair<GaussianRational, GaussianRational> partial_sum(const SeedTriple& s, std::int64_t n) {
    if (n < 0) {
        throw BadRange("partial sum needs n >= 0");
    }
    const auto terms = term_range(s, 0, n + 2);
    GaussianRational lhs;
    for (std::int64_t k = 0; k <= n; ++k) {
        lhs += terms[static_cast<std::size_t>(k)];
    }
    const GaussianRational rhs =
        (terms[static_cast<std::size_t>(n + 2)] +
         Rational(2) * terms[static_cast<std::size_t>(n)] + sum_constant(s)) /
        Rational(3);
    return {lhs, rhs};
}

IdentityReport check_docagne(const SeedTriple& s, std::int64_t m, std::int64_t n) {
    std::string name = "docagne";
    if (m > n) {
        name += " (outside stated hypothesis m <= n)";
    }
    return sweep(std::move(name), s, {"m", "n"}, {{m, n}},
                 [&s](const std::vector<std::int64_t>& t) { return docagne(s, t[0], t[1]); });
}

IdentityReport check_cassini(const SeedTriple& s, std::int64_t n) {
    IdentityReport rep{"cassini", s, {"n"}, {{n}}, std::nullopt};
    const CassiniSides sides = cassini(s, n);
    if (!(sides.lhs == sides.rhs_psi)) {
        rep.counterexample = Counterexample{{n}, sides.lhs, sides.rhs_psi};
    } else if (!(sides.rhs_psi == sides.rhs_expanded)) {
        rep.identity = "cassini (psi vs expanded form)";
        rep.counterexample = Counterexample{{n}, sides.rhs_psi, sides.rhs_expanded};
    }
    return rep;
}

IdentityReport check_partial_sum(const SeedTriple& s, std::int64_t n) {
    return sweep("sum", s, {"n"}, {{n}},
                 [&s](const std::vector<std::int64_t>& t) { return partial_sum(s, t[0]); });
}

IdentityReport check_jump3(const SeedTriple& s, std::int64_t n) {
    return sweep("jump3", s, {"n"}, {{n}}, [&s](const std::vector<std::int64_t>& t) {
        return Sides{term_recurrence(s, t[0] + 3),
                     term_recurrence(s, t[0]) + geometric_part(s, t[0])};
    });
}

IdentityReport check_window3(const SeedTriple& s, std::int64_t n) {
    return sweep("window3", s, {"n"}, {{n}}, [&s](const std::vector<std::int64_t>& t) {
        return Sides{term_recurrence(s, t[0]) + term_recurrence(s, t[0] + 1) +
                         term_recurrence(s, t[0] + 2),
                     geometric_part(s, t[0])};
    });
}

IdentityReport check_step(const SeedTriple& s, std::int64_t n) {
    return sweep("step", s, {"n"}, {{n}}, [&s](const std::vector<std::int64_t>& t) {
        return Sides{term_recurrence(s, t[0] + 1),
                     Rational(2) * term_recurrence(s, t[0]) - xi_seq(s, t[0])};
    });
}

namespace {

constexpr std::int64_t kAuditSweepMax = 24;

std::string preset_tag(Preset p) { return p == Preset::Jg ? "jg" : "kg"; }

CorollaryAudit audit_sum_constant(Preset p, const GaussianRational& printed_constant) {
    const SeedTriple seed = preset_seed(p);
    const GaussianRational derived = sum_constant(seed);
    const auto terms = term_range(seed, 0, kAuditSweepMax + 2);

    const auto eval_with = [&](const GaussianRational& constant) {
        return [&terms, constant](const std::vector<std::int64_t>& t) {
            const auto n = static_cast<std::size_t>(t[0]);
            GaussianRational lhs;
            for (std::size_t k = 0; k <= n; ++k) {
                lhs += terms[k];
            }
            const GaussianRational rhs =
                (terms[n + 2] + Rational(2) * terms[n] + constant) / Rational(3);
            return Sides{lhs, rhs};
        };
    };

    const std::string tag = preset_tag(p);
    CorollaryAudit audit{
        tag + "-sum-constant",
        "(term(n+2) + 2*term(n) + (" + to_string(printed_constant) + "))/3",
        "(term(n+2) + 2*term(n) + (" + to_string(derived) + "))/3",
        sweep(tag + "-sum-corollary (printed)", seed, {"n"}, range_tuples(0, kAuditSweepMax),
              eval_with(printed_constant)),
        sweep(tag + "-sum-corollary (derived)", seed, {"n"}, range_tuples(0, kAuditSweepMax),
              eval_with(derived))};
    return audit;
}

CorollaryAudit audit_cassini_corollary(Preset p) {
    const SeedTriple seed = preset_seed(p);
    const DerivedConstants d = derived_constants(seed);
    const GaussianRational one_half_i{1, Rational(1) / 2};

    // Canonical coefficients of the general expanded form, folded to the
    // corollary shape C0 + (1+i/2) 2^(n-1) (P omega(n) + Q omega(n+1)).
    const GaussianRational c0 = lambda_combination(seed) / Rational(49);
    const GaussianRational coeff_p =
        (d.lambda * (Rational(8) * d.lambda1 - Rational(3) * d.lambda2)) / Rational(49);
    const GaussianRational coeff_q =
        (d.lambda * (Rational(3) * d.lambda1 + Rational(5) * d.lambda2)) / Rational(49);

    const auto lhs_at = [seed](std::int64_t n) {
        const GaussianRational tn = term_recurrence(seed, n);
        return tn * tn - term_recurrence(seed, n - 1) * term_recurrence(seed, n + 1);
    };

    Eval printed_eval;
    std::string printed_formula;
    if (p == Preset::Jg) {
        printed_formula =
            "( -i + (1+i/2)*2^n*( (2-3i)*Omega(n) - (1+2i)*Omega(n+1) ) )/7";
        printed_eval = [lhs_at, one_half_i](const std::vector<std::int64_t>& t) {
            const std::int64_t n = t[0];
            const GaussianRational inner = Rational(omega(n)) * GaussianRational{2, -3} -
                                           Rational(omega(n + 1)) * GaussianRational{1, 2};
            const GaussianRational rhs =
                (GaussianRational{0, -1} + pow2(n) * (one_half_i * inner)) / Rational(7);
            return Sides{lhs_at(n), rhs};
        };
    } else {
        printed_formula =
            "-3i + (1+i/2)*2^(n-1)*( (2+5i)*Omega(n) + (13-2i)*Omega(n+1) )";
        printed_eval = [lhs_at, one_half_i](const std::vector<std::int64_t>& t) {
            const std::int64_t n = t[0];
            const GaussianRational inner = Rational(omega(n)) * GaussianRational{2, 5} +
                                           Rational(omega(n + 1)) * GaussianRational{13, -2};
            const GaussianRational rhs =
                GaussianRational{0, -3} + pow2(n - 1) * (one_half_i * inner);
            return Sides{lhs_at(n), rhs};
        };
    }

    const Eval derived_eval = [seed, lhs_at](const std::vector<std::int64_t>& t) {
        return Sides{lhs_at(t[0]), cassini(seed, t[0]).rhs_expanded};
    };
    const std::string derived_formula = "(" + to_string(c0) + ") + (1+i/2)*2^(n-1)*( (" +
                                        to_string(coeff_p) + ")*Omega(n) + (" +
                                        to_string(coeff_q) + ")*Omega(n+1) )";

    const std::string tag = preset_tag(p);
    return CorollaryAudit{
        tag + "-cassini-closed-form", printed_formula, derived_formula,
        sweep(tag + "-cassini-corollary (printed)", seed, {"n"}, range_tuples(1, kAuditSweepMax),
              printed_eval),
        sweep(tag + "-cassini-corollary (derived)", seed, {"n"}, range_tuples(1, kAuditSweepMax),
              derived_eval)};
}

}  // namespace

std::vector<CorollaryAudit> audit_preset_corollaries(Preset p) {
    std::vector<CorollaryAudit> audits;
    audits.push_back(audit_sum_constant(
        p, p == Preset::Jg ? GaussianRational{-1, -2} : GaussianRational{0, Rational(-3) / 2}));
    audits.push_back(audit_cassini_corollary(p));
    return audits;
}

CorollaryAudit audit_xi_coefficient() {
    const SeedTriple seed = preset_seed(Preset::Jg);
    const Rational& a = seed.a;
    const Rational& b = seed.b;
    const Rational& c = seed.c;

    // Ground truth for the step defect: Xi(n) = 2 term(n) - term(n+1).
    const auto ground_truth = [seed](std::int64_t n) {
        return Rational(2) * term_recurrence(seed, n) - term_recurrence(seed, n + 1);
    };
    const GaussianRational coeff_n1{2 * a - b, -(2 * a + b - c)};
    const GaussianRational printed_coeff_n{2 * a + b - c, 2 * b - c};

    const Eval printed_eval = [=](const std::vector<std::int64_t>& t) {
        const std::int64_t n = t[0];
        return Sides{ground_truth(n), Rational(omega(n)) * printed_coeff_n +
                                          Rational(omega(n + 1)) * coeff_n1};
    };
    const Eval derived_eval = [=](const std::vector<std::int64_t>& t) {
        return Sides{ground_truth(t[0]), xi_seq(seed, t[0])};
    };

    return CorollaryAudit{
        "xi-omega-coefficient",
        "Xi(n) = (2a+b-c + (2b-c)i)*Omega(n) + (2a-b - (2a+b-c)i)*Omega(n+1)",
        "Xi(n) = (2a+b-c + (c-2b)i)*Omega(n) + (2a-b - (2a+b-c)i)*Omega(n+1)",
        sweep("xi-coefficient (printed)", seed, {"n"}, range_tuples(0, kAuditSweepMax),
              printed_eval),
        sweep("xi-coefficient (derived)", seed, {"n"}, range_tuples(0, kAuditSweepMax),
              derived_eval)};
}

std::vector<IdentityReport> audit_corollaries(Preset p) {
    std::vector<IdentityReport> reports;
    for (auto& audit : audit_preset_corollaries(p)) {
        reports.push_back(std::move(audit.printed));
        reports.push_back(std::move(audit.derived));
    }
    return reports;
}

}  // namespace gtj
