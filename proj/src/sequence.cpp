#include "gtj/sequence.hpp"

#include <utility>

#include "gtj/errors.hpp"
#include "gtj/omega.hpp"

namespace gtj {

SeedTriple::SeedTriple(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == 0 && b == 0 && c == 0) {
        throw AllZeroSeed("seed (0, 0, 0) is excluded");
    }
}

SeedTriple preset_seed(Preset p) {
    return p == Preset::Jg ? SeedTriple(0, 1, 1) : SeedTriple(3, 1, 3);
}

DerivedConstants derived_constants(const SeedTriple& s) {
    const Rational& a = s.a;
    const Rational& b = s.b;
    const Rational& c = s.c;
    DerivedConstants d{a + b + c,
                       GaussianRational{4 * a + 4 * b - 3 * c, 2 * a - 5 * b + 2 * c},
                       GaussianRational{6 * a - b - c, -(4 * a + 4 * b - 3 * c)}};
    return d;
}

namespace {

std::array<GaussianRational, 3> seed_values(const SeedTriple& s) {
    return {GaussianRational{s.a, (s.c - s.b - s.a) / 2},
            GaussianRational{s.b, s.a},
            GaussianRational{s.c, s.b}};
}

GaussianRational forward_step(const GaussianRational& t0, const GaussianRational& t1,
                              const GaussianRational& t2) {
    return t2 + t1 + Rational(2) * t0;
}

// Inversion of the forward step: term(k) = (term(k+3) - term(k+2) - term(k+1))/2.
GaussianRational backward_step(const GaussianRational& t1, const GaussianRational& t2,
                               const GaussianRational& t3) {
    return (t3 - t2 - t1) / Rational(2);
}

}  // namespace

std::array<SequenceTerm, 3> initial_terms(const SeedTriple& s) {
    const auto v = seed_values(s);
    return {SequenceTerm{0, v[0]}, SequenceTerm{1, v[1]}, SequenceTerm{2, v[2]}};
}

GaussianRational term_recurrence(const SeedTriple& s, std::int64_t n) {
    const auto v = seed_values(s);
    if (n >= 0 && n <= 2) {
        return v[static_cast<std::size_t>(n)];
    }
    if (n > 2) {
        GaussianRational t0 = v[0];
        GaussianRational t1 = v[1];
        GaussianRational t2 = v[2];
        for (std::int64_t k = 3; k <= n; ++k) {
            GaussianRational t3 = forward_step(t0, t1, t2);
            t0 = std::move(t1);
            t1 = std::move(t2);
            t2 = std::move(t3);
        }
        return t2;
    }
    GaussianRational t1 = v[0];
    GaussianRational t2 = v[1];
    GaussianRational t3 = v[2];
    GaussianRational tk;
    for (std::int64_t k = -1; k >= n; --k) {
        tk = backward_step(t1, t2, t3);
        t3 = std::move(t2);
        t2 = std::move(t1);
        t1 = tk;
    }
    return tk;
}

std::vector<GaussianRational> term_range(const SeedTriple& s, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw BadRange("term range is inverted");
    }
    std::vector<GaussianRational> out(static_cast<std::size_t>(hi - lo + 1));
    const auto v = seed_values(s);
    const auto put = [&](std::int64_t idx, const GaussianRational& val) {
        if (idx >= lo && idx <= hi) {
            out[static_cast<std::size_t>(idx - lo)] = val;
        }
    };
    if (hi >= 0) {
        GaussianRational t0 = v[0];
        GaussianRational t1 = v[1];
        GaussianRational t2 = v[2];
        put(0, t0);
        put(1, t1);
        put(2, t2);
        for (std::int64_t k = 3; k <= hi; ++k) {
            GaussianRational t3 = forward_step(t0, t1, t2);
            t0 = std::move(t1);
            t1 = std::move(t2);
            t2 = std::move(t3);
            put(k, t2);
        }
    }
    if (lo < 0) {
        GaussianRational t1 = v[0];
        GaussianRational t2 = v[1];
        GaussianRational t3 = v[2];
        for (std::int64_t k = -1; k >= lo; --k) {
            GaussianRational tk = backward_step(t1, t2, t3);
            t3 = std::move(t2);
            t2 = std::move(t1);
            t1 = tk;
            put(k, t1);
        }
    }
    return out;
}

GaussianRational geometric_part(const SeedTriple& s, std::int64_t n) {
    const Rational lambda = s.a + s.b + s.c;
    return (lambda * pow2(n)) * GaussianRational{1, Rational(1) / 2};
}

GaussianRational term_binet(const SeedTriple& s, std::int64_t n) {
    return (geometric_part(s, n) + z_seq(s, n)) / Rational(7);
}

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Rational sum(0);
            for (std::size_t k = 0; k < 3; ++k) {
                sum += x[i][k] * y[k][j];
            }
            r[i][j] = std::move(sum);
        }
    }
    return r;
}

Mat3 mat_pow(Mat3 base, std::uint64_t e) {
    Mat3 acc{{{Rational(1), Rational(0), Rational(0)},
              {Rational(0), Rational(1), Rational(0)},
              {Rational(0), Rational(0), Rational(1)}}};
    while (e != 0) {
        if (e & 1u) {
            acc = mat_mul(acc, base);
        }
        e >>= 1u;
        if (e != 0) {
            base = mat_mul(base, base);
        }
    }
    return acc;
}

}  // namespace

GaussianRational term_fast(const SeedTriple& s, std::int64_t n) {
    if (n < 0) {
        return term_recurrence(s, n);
    }
    const auto v = seed_values(s);
    if (n <= 2) {
        return v[static_cast<std::size_t>(n)];
    }
    const Mat3 companion{{{Rational(1), Rational(1), Rational(2)},
                          {Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)}}};
    const Mat3 p = mat_pow(companion, static_cast<std::uint64_t>(n - 2));
    // State vector is (term2, term1, term0); the top row yields term(n).
    return p[0][0] * v[2] + p[0][1] * v[1] + p[0][2] * v[0];
}

Rational real_j_term(const SeedTriple& s, std::int64_t n) {
    const Rational lambda = s.a + s.b + s.c;
    const Rational cn = 4 * s.a + 4 * s.b - 3 * s.c;
    const Rational cn1 = 6 * s.a - s.b - s.c;
    return (lambda * pow2(n) + omega(n) * cn + omega(n + 1) * cn1) / 7;
}

GaussianRational z_seq(const SeedTriple& s, std::int64_t n) {
    const DerivedConstants d = derived_constants(s);
    return Rational(omega(n)) * d.lambda1 + Rational(omega(n + 1)) * d.lambda2;
}

GaussianRational psi_seq(const SeedTriple& s, std::int64_t n) {
    const DerivedConstants d = derived_constants(s);
    const GaussianRational coeff_n = Rational(2) * d.lambda1 + d.lambda2;
    const GaussianRational coeff_n1 = Rational(3) * d.lambda2 - d.lambda1;
    return Rational(omega(n)) * coeff_n + Rational(omega(n + 1)) * coeff_n1;
}

GaussianRational xi_seq(const SeedTriple& s, std::int64_t n) {
    return psi_seq(s, n) / Rational(7);
}

}  // namespace gtj
