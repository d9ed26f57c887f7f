#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gtj/gaussian.hpp"

namespace gtj {

/// Initial data (a, b, c); at least one component must be nonzero.
struct SeedTriple {
    SeedTriple(Rational a, Rational b, Rational c);  // throws AllZeroSeed

    Rational a;
    Rational b;
    Rational c;
};

enum class Preset { Jg, Kg };

/// (0, 1, 1) for jg, (3, 1, 3) for kg.
SeedTriple preset_seed(Preset p);

/// Seed-dependent constants carrying all the seed dependence of the
/// identity closed forms.
struct DerivedConstants {
    Rational lambda;           // a + b + c
    GaussianRational lambda1;  // 4a+4b-3c + (2a-5b+2c)i
    GaussianRational lambda2;  // 6a-b-c - (4a+4b-3c)i
};

DerivedConstants derived_constants(const SeedTriple& seed);

struct SequenceTerm {
    std::int64_t index;
    GaussianRational value;
};

/// Terms 0, 1, 2: a + (c-b-a)/2 i, b + a i, c + b i.
std::array<SequenceTerm, 3> initial_terms(const SeedTriple& seed);

/// Ground truth for the whole project: iterates the defining recurrence
/// term(n+3) = term(n+2) + term(n+1) + 2 term(n) upward from the three
/// initial terms, and the inverted (halving) recurrence downward for n < 0.
GaussianRational term_recurrence(const SeedTriple& seed, std::int64_t n);

/// All terms from lo to hi inclusive, computed in one pass.
/// Throws BadRange when lo > hi.
std::vector<GaussianRational> term_range(const SeedTriple& seed, std::int64_t lo, std::int64_t hi);

/// Closed form (lambda(1+i/2)2^n + lambda1 omega(n) + lambda2 omega(n+1))/7,
/// where 2^n is the exact rational 1/2^|n| for negative n.
GaussianRational term_binet(const SeedTriple& seed, std::int64_t n);

/// Binary powering of the 3x3 companion matrix of x^3 - x^2 - x - 2 applied
/// to the initial terms; delegates to the backward recurrence for n < 0.
/// Agrees with term_recurrence exactly.
GaussianRational term_fast(const SeedTriple& seed, std::int64_t n);

/// The real-valued generalized sequence J(n); term(n) = J(n) + J(n-1) i.
Rational real_j_term(const SeedTriple& seed, std::int64_t n);

/// lambda (1 + i/2) 2^n, the geometric part of the closed form.
GaussianRational geometric_part(const SeedTriple& seed, std::int64_t n);

/// Periodic part of the closed form: lambda1 omega(n) + lambda2 omega(n+1).
GaussianRational z_seq(const SeedTriple& seed, std::int64_t n);

/// 2 Z(n) - Z(n+1) = (2 lambda1 + lambda2) omega(n) + (3 lambda2 - lambda1) omega(n+1).
GaussianRational psi_seq(const SeedTriple& seed, std::int64_t n);

/// Step defect Xi(n) = psi(n)/7; satisfies term(n+1) = 2 term(n) - Xi(n)
/// for every integer n.
GaussianRational xi_seq(const SeedTriple& seed, std::int64_t n);

}  // namespace gtj
