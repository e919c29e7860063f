#pragma once

#include <complex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lemni/errors.hpp"
#include "lemni/rational.hpp"

namespace lemni {

namespace detail {
inline bool scalar_is_zero(const GaussianRational& s) { return s.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& s) { return s == 0.0; }
inline GaussianRational scalar_conj(const GaussianRational& s) { return s.conj(); }
inline std::complex<double> scalar_conj(const std::complex<double>& s) { return std::conj(s); }
inline GaussianRational scalar_inv(const GaussianRational& s) { return s.inv(); }
inline std::complex<double> scalar_inv(const std::complex<double>& s) { return 1.0 / s; }
} // namespace detail

/// Dense univariate polynomial over a field scalar, coefficients ascending.
/// The variable tag travels with the value; mixing tags in ring operations
/// throws VariableMismatch unless one operand is constant.
template <class Scalar>
class Polynomial {
public:
    Polynomial() : var_("z") {}
    explicit Polynomial(std::string var) : var_(std::move(var)) {}
    Polynomial(std::string var, std::vector<Scalar> coeffs)
        : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial variable(std::string var) {
        return Polynomial(std::move(var), {Scalar(0), Scalar(1)});
    }
    static Polynomial constant(std::string var, Scalar c) {
        return Polynomial(std::move(var), {std::move(c)});
    }

    const std::string& var() const { return var_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return degree() <= 0; }

    Scalar coeff(int i) const {
        if (i < 0 || i > degree()) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const Scalar& leading() const { return coeffs_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_constant() || b.is_constant() || a.var_ == b.var_);
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r(var_);
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::string var = joint_var(a, b);
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(var), std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::string var = joint_var(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(std::move(var));
        std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(var), std::move(c));
    }

    friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
        Polynomial r(p.var_);
        r.coeffs_.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) r.coeffs_.push_back(s * c);
        r.trim();
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Scalar& s) { return s * p; }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

private:
    static std::string joint_var(const Polynomial& a, const Polynomial& b) {
        if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
            throw VariableMismatch("'" + a.var_ + "' vs '" + b.var_ + "'");
        return a.is_constant() && !b.is_constant() ? b.var_ : a.var_;
    }

    void trim() {
        while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::string var_;
    std::vector<Scalar> coeffs_;
};

using ExactPoly = Polynomial<GaussianRational>;
using NumPoly = Polynomial<std::complex<double>>;

/// Quotient and remainder with deg(r) < deg(b), exact over the scalar field.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divrem(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::string var = a.is_constant() ? b.var() : a.var();
    if (!a.is_constant() && !b.is_constant() && a.var() != b.var())
        throw VariableMismatch("'" + a.var() + "' vs '" + b.var() + "'");

    std::vector<Scalar> rem(a.coeffs());
    const int db = b.degree();
    const Scalar& lb = b.leading();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < db) return {Polynomial<Scalar>(var), a};

    std::vector<Scalar> quo(static_cast<std::size_t>(dr - db) + 1, Scalar(0));
    for (; dr >= db; --dr) {
        Scalar c = rem[static_cast<std::size_t>(dr)];
        if (detail::scalar_is_zero(c)) continue;
        c = c / lb;
        quo[static_cast<std::size_t>(dr - db)] = c;
        for (int k = 0; k <= db; ++k)
            rem[static_cast<std::size_t>(dr - db + k)] -= c * b.coeff(k);
    }
    return {Polynomial<Scalar>(var, std::move(quo)), Polynomial<Scalar>(var, std::move(rem))};
}

/// Exact quotient; throws if the division leaves a remainder.
template <class Scalar>
Polynomial<Scalar> divexact(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("divexact: division left a remainder");
    return q;
}

template <class Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
    if (p.is_zero()) return p;
    return p * detail::scalar_inv(p.leading());
}

/// Monic greatest common divisor by the Euclidean algorithm.
template <class Scalar>
Polynomial<Scalar> poly_gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = monic(std::move(r)); // renormalize to tame coefficient growth
    }
    return monic(a);
}

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
    if (p.degree() <= 0) return Polynomial<Scalar>(p.var());
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coeff(i) * Scalar(i));
    return Polynomial<Scalar>(p.var(), std::move(c));
}

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned n) {
    Polynomial<Scalar> r = Polynomial<Scalar>::constant(p.var(), Scalar(1));
    Polynomial<Scalar> base = p;
    for (; n; n >>= 1) {
        if (n & 1u) r *= base;
        if (n > 1) base *= base;
    }
    return r;
}

/// Coefficientwise complex conjugation; an involution.
template <class Scalar>
Polynomial<Scalar> conjugate(const Polynomial<Scalar>& p) {
    std::vector<Scalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(detail::scalar_conj(a));
    return Polynomial<Scalar>(p.var(), std::move(c));
}

inline GaussianRational eval(const ExactPoly& p, const GaussianRational& x) {
    GaussianRational acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

inline std::complex<double> eval(const NumPoly& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

/// Horner evaluation of an exact polynomial at a floating complex point.
inline std::complex<double> eval_numeric(const ExactPoly& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + to_complex(p.coeff(i));
    return acc;
}

inline NumPoly to_numeric(const ExactPoly& p) {
    std::vector<std::complex<double>> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(to_complex(a));
    return NumPoly(p.var(), std::move(c));
}

/// P = content * prod factor_i^exponent_i with monic squarefree pairwise
/// coprime factors and strictly increasing exponents. The exponent multiset
/// is the root multiplicity structure of P.
struct SquarefreeDecomposition {
    struct Part {
        ExactPoly factor;
        int exponent;
    };
    GaussianRational content;
    std::vector<Part> parts;

    ExactPoly reconstruct() const {
        ExactPoly r = ExactPoly::constant(parts.empty() ? "z" : parts.front().factor.var(), content);
        for (const auto& [f, e] : parts) r *= pow(f, static_cast<unsigned>(e));
        return r;
    }
};

/// Yun's squarefree decomposition (characteristic 0).
inline SquarefreeDecomposition squarefree_decompose(const ExactPoly& p) {
    if (p.degree() < 1) throw ZeroOrConstantInput("squarefree decomposition needs degree >= 1");
    SquarefreeDecomposition out;
    out.content = p.leading();
    ExactPoly u = monic(p);

    ExactPoly g = poly_gcd(u, derivative(u));
    if (g.degree() == 0) {
        out.parts.push_back({u, 1});
        return out;
    }
    ExactPoly w = divexact(u, g);
    ExactPoly y = divexact(derivative(u), g);
    ExactPoly z = y - derivative(w);
    int i = 1;
    while (!z.is_zero()) {
        ExactPoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.parts.push_back({h, i});
        w = divexact(w, h);
        y = divexact(z, h);
        z = y - derivative(w);
        ++i;
    }
    if (w.degree() > 0) out.parts.push_back({w, i});
    return out;
}

} // namespace lemni
