#pragma once

#include <utility>

#include "lemni/polynomial.hpp"

namespace lemni {

/// P = content * base^exponent with monic base. A literal d-th root of the
/// content may not exist in Q(i), so the scalar stays outside the base; over
/// C this loses nothing.
struct PowerForm {
    GaussianRational content;
    ExactPoly base;
    int exponent = 1;

    ExactPoly reconstruct() const {
        return ExactPoly::constant(base.var(), content) * pow(base, static_cast<unsigned>(exponent));
    }
};

/// Verdict on reducibility of P(z)Q(w) - 1: reducible iff both inputs are
/// d-th powers for a shared d > 1, i.e. iff d = gcd of the two maximal power
/// exponents exceeds 1.
struct ReducibilityVerdict {
    bool reducible = false;
    int d = 1; // gcd of the two maximal exponents
    PowerForm p1, q1;
};

/// Largest d such that P is a d-th power over C: the gcd of the squarefree
/// decomposition exponents. 1 iff P is not a proper power.
int max_power_exponent(const ExactPoly& p);

/// Write P = content * base^d with monic base; d must divide
/// max_power_exponent(P).
PowerForm extract_power_form(const ExactPoly& p, int d);

ReducibilityVerdict decide_reducibility(const ExactPoly& p, const ExactPoly& q);

/// Is the real curve |P(z)| = 1, viewed as the zero set of
/// P(x+iy) conj(P)(x-iy) - 1, irreducible over C? Also returns the maximal
/// power form; its base defines the same lemniscate as a point set.
std::pair<bool, PowerForm> lemniscate_irreducible(const ExactPoly& p);

} // namespace lemni
