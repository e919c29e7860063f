#pragma once

#include <stdexcept>
#include <string>

namespace lemni {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LEMNI_ERROR_TYPE(Name, default_msg)                                    \
    struct Name : Error {                                                      \
        Name() : Error(default_msg) {}                                         \
        explicit Name(const std::string& m) : Error(m) {}                      \
    }

// exact arithmetic
LEMNI_ERROR_TYPE(DivisionByZero, "division by zero");
LEMNI_ERROR_TYPE(VariableMismatch, "polynomials carry different variable tags");
LEMNI_ERROR_TYPE(BothZero, "gcd of two zero polynomials");
LEMNI_ERROR_TYPE(ZeroOrConstantInput, "operation requires a non-constant polynomial");

// power structure
LEMNI_ERROR_TYPE(NotADivisor, "exponent does not divide the maximal power exponent");
LEMNI_ERROR_TYPE(NotReducible, "separated curve is irreducible, no factorization exists");

// bivariate curves
LEMNI_ERROR_TYPE(ZeroPolynomial, "zero polynomial has no bidegree");
LEMNI_ERROR_TYPE(DegenerateLeadingCoefficient, "leading coefficient vanishes identically");
LEMNI_ERROR_TYPE(IndexOutOfRange, "incidence point index out of range");
LEMNI_ERROR_TYPE(InconsistentFactorData, "factor incidence data is structurally inconsistent");

// numerics
LEMNI_ERROR_TYPE(ConvergenceFailure, "root refinement did not converge");
LEMNI_ERROR_TYPE(PathCollision, "tracked roots collided along the path");
LEMNI_ERROR_TYPE(MatchingAmbiguity, "end-of-loop root matching is ambiguous");
LEMNI_ERROR_TYPE(DegenerateBasepoint, "no usable basepoint found");

// i/o
LEMNI_ERROR_TYPE(ParseError, "malformed polynomial document");
LEMNI_ERROR_TYPE(IoError, "file i/o failed");

#undef LEMNI_ERROR_TYPE

} // namespace lemni
