#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

#include "lemni/errors.hpp"

namespace lemni {

/// Arbitrary-precision rational, kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parse "n" or "n/d" into a canonical rational. Floating literals are rejected.
Rational parse_rational(const std::string& text);

/// Canonical "n/d" form, denominator always written.
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

/// Element of Q(i), the exact coefficient field. Both components canonical.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long n) : re(n), im(0) {}          // NOLINT: scalar literals
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// re^2 + im^2, the field norm down to Q.
    Rational norm() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
        Rational n = norm();
        return {re / n, -im / n};
    }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
        return os << format_rational(g.re) << (sgn(g.im.get_num()) < 0 ? "" : "+")
                  << format_rational(g.im) << "i";
    }
};

inline GaussianRational conj(const GaussianRational& g) { return g.conj(); }

inline std::complex<double> to_complex(const GaussianRational& g) {
    return {g.re.get_d(), g.im.get_d()};
}

} // namespace lemni

namespace Eigen {

template <>
struct NumTraits<lemni::GaussianRational> : NumTraits<double> {
    using Real = lemni::GaussianRational;
    using NonInteger = lemni::GaussianRational;
    using Nested = lemni::GaussianRational;
    using Literal = long;
    enum {
        IsComplex = 0, // conjugation is handled explicitly, never by Eigen
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 32,
    };
    static Real epsilon() { return {}; }
    static Real dummy_precision() { return {}; }
    static int digits10() { return 0; }
};

} // namespace Eigen
