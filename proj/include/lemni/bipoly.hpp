#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lemni/polynomial.hpp"

namespace lemni {

/// Dense bivariate polynomial; entry (i, j) of the coefficient matrix is the
/// coefficient of first^i * second^j. Trailing zero rows and columns are
/// trimmed, so the matrix dimensions give the bidegree directly.
template <class Scalar>
class BiPoly {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    BiPoly() : vars_{"z", "w"}, c_(0, 0) {}
    BiPoly(std::string first, std::string second)
        : vars_{std::move(first), std::move(second)}, c_(0, 0) {}
    BiPoly(std::string first, std::string second, Matrix m)
        : vars_{std::move(first), std::move(second)}, c_(std::move(m)) {
        trim();
    }

    static BiPoly constant(std::string first, std::string second, Scalar v) {
        Matrix m(1, 1);
        m(0, 0) = std::move(v);
        return BiPoly(std::move(first), std::move(second), std::move(m));
    }
    static BiPoly first_variable(std::string first, std::string second) {
        Matrix m(2, 1);
        m(0, 0) = Scalar(0);
        m(1, 0) = Scalar(1);
        return BiPoly(std::move(first), std::move(second), std::move(m));
    }
    static BiPoly second_variable(std::string first, std::string second) {
        Matrix m(1, 2);
        m(0, 0) = Scalar(0);
        m(0, 1) = Scalar(1);
        return BiPoly(std::move(first), std::move(second), std::move(m));
    }

    const std::array<std::string, 2>& vars() const { return vars_; }
    const Matrix& matrix() const { return c_; }
    bool is_zero() const { return c_.rows() == 0; }

    Scalar coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= c_.rows() || j >= c_.cols()) return Scalar(0);
        return c_(i, j);
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        if (a.c_.rows() != b.c_.rows() || a.c_.cols() != b.c_.cols()) return false;
        for (Eigen::Index i = 0; i < a.c_.rows(); ++i)
            for (Eigen::Index j = 0; j < a.c_.cols(); ++j)
                if (!(a.c_(i, j) == b.c_(i, j))) return false;
        return true;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly operator-() const { return BiPoly(vars_[0], vars_[1], Matrix(-c_)); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        check_vars(a, b);
        Matrix m = Matrix::Constant(std::max(a.c_.rows(), b.c_.rows()),
                                    std::max(a.c_.cols(), b.c_.cols()), Scalar(0));
        m.topLeftCorner(a.c_.rows(), a.c_.cols()) += a.c_;
        m.topLeftCorner(b.c_.rows(), b.c_.cols()) += b.c_;
        return BiPoly(a.vars_[0], a.vars_[1], std::move(m));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        check_vars(a, b);
        if (a.is_zero() || b.is_zero()) return BiPoly(a.vars_[0], a.vars_[1]);
        Matrix m = Matrix::Constant(a.c_.rows() + b.c_.rows() - 1,
                                    a.c_.cols() + b.c_.cols() - 1, Scalar(0));
        for (Eigen::Index i = 0; i < a.c_.rows(); ++i)
            for (Eigen::Index j = 0; j < a.c_.cols(); ++j) {
                if (detail::scalar_is_zero(a.c_(i, j))) continue;
                for (Eigen::Index k = 0; k < b.c_.rows(); ++k)
                    for (Eigen::Index l = 0; l < b.c_.cols(); ++l)
                        m(i + k, j + l) += a.c_(i, j) * b.c_(k, l);
            }
        return BiPoly(a.vars_[0], a.vars_[1], std::move(m));
    }

    friend BiPoly operator*(const Scalar& s, const BiPoly& p) {
        Matrix m = p.c_;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = s * m(i, j);
        return BiPoly(p.vars_[0], p.vars_[1], std::move(m));
    }

    friend BiPoly operator-(const BiPoly& a, const Scalar& s) {
        return a - constant(a.vars_[0], a.vars_[1], s);
    }

    /// Coefficients of second^j as a polynomial in the first variable.
    Polynomial<Scalar> coeff_of_second_power(int j) const {
        std::vector<Scalar> c;
        for (Eigen::Index i = 0; i < c_.rows(); ++i) c.push_back(coeff(static_cast<int>(i), j));
        return Polynomial<Scalar>(vars_[0], std::move(c));
    }
    /// Coefficients of first^i as a polynomial in the second variable.
    Polynomial<Scalar> coeff_of_first_power(int i) const {
        std::vector<Scalar> c;
        for (Eigen::Index j = 0; j < c_.cols(); ++j) c.push_back(coeff(i, static_cast<int>(j)));
        return Polynomial<Scalar>(vars_[1], std::move(c));
    }

private:
    static void check_vars(const BiPoly& a, const BiPoly& b) {
        if (a.vars_ != b.vars_)
            throw VariableMismatch("(" + a.vars_[0] + "," + a.vars_[1] + ") vs (" + b.vars_[0] +
                                   "," + b.vars_[1] + ")");
    }

    void trim() {
        Eigen::Index r = c_.rows(), cc = c_.cols();
        auto row_zero = [&](Eigen::Index i) {
            for (Eigen::Index j = 0; j < cc; ++j)
                if (!detail::scalar_is_zero(c_(i, j))) return false;
            return true;
        };
        auto col_zero = [&](Eigen::Index j) {
            for (Eigen::Index i = 0; i < r; ++i)
                if (!detail::scalar_is_zero(c_(i, j))) return false;
            return true;
        };
        while (r > 0 && row_zero(r - 1)) --r;
        while (cc > 0 && col_zero(cc - 1)) --cc;
        if (r == 0 || cc == 0) {
            c_.resize(0, 0);
        } else if (r != c_.rows() || cc != c_.cols()) {
            c_ = Matrix(c_.topLeftCorner(r, cc));
        }
    }

    std::array<std::string, 2> vars_;
    Matrix c_;
};

using ExactBiPoly = BiPoly<GaussianRational>;
using NumBiPoly = BiPoly<std::complex<double>>;

/// (degree in first variable, degree in second variable).
template <class Scalar>
std::pair<int, int> bidegree(const BiPoly<Scalar>& f) {
    if (f.is_zero()) throw ZeroPolynomial("bidegree of the zero polynomial");
    return {static_cast<int>(f.matrix().rows()) - 1, static_cast<int>(f.matrix().cols()) - 1};
}

template <class Scalar, class X>
X eval(const BiPoly<Scalar>& f, const X& x, const X& y) {
    X acc(0);
    for (int i = static_cast<int>(f.matrix().rows()) - 1; i >= 0; --i) {
        X inner(0);
        for (int j = static_cast<int>(f.matrix().cols()) - 1; j >= 0; --j)
            inner = inner * y + X(f.coeff(i, j));
        acc = acc * x + inner;
    }
    return acc;
}

std::complex<double> eval_numeric(const ExactBiPoly& f, std::complex<double> x,
                                  std::complex<double> y);
NumBiPoly to_numeric(const ExactBiPoly& f);

/// The separated-variable curve polynomial P(first)Q(second) - 1.
ExactBiPoly build_separated(const ExactPoly& p, const ExactPoly& q);

/// The real form P(x+iy) conj(P)(x-iy) - 1. Every coefficient is exactly
/// real; evaluated at real (x, y) it equals |P(x+iy)|^2 - 1.
ExactBiPoly build_real_form(const ExactPoly& p);

/// For P = c_p P1^d, Q = c_q Q1^d the curve polynomial splits as
/// prod_j (gamma P1 Q1 - zeta^j) over the d-th roots of unity zeta^j, with
/// gamma a numeric d-th root of c_p c_q. Throws NotReducible when d = 1.
std::vector<NumBiPoly> explicit_factors(const ExactPoly& p, const ExactPoly& q);

/// The two rulings at infinity of the compactified curve in P^1 x P^1.
enum class InfiniteLine {
    second_at_infinity, // {second variable = infinity}; finite points (z_j, inf)
    first_at_infinity,  // {first variable  = infinity}; finite points (inf, w_j)
};

/// Local intersection numbers of a curve with one infinite line, computed as
/// root multiplicities of the leading coefficient in the off-axis variable.
struct InfinityIncidence {
    struct Point {
        std::complex<double> location;
        int multiplicity = 0;
    };
    InfiniteLine axis = InfiniteLine::second_at_infinity;
    std::vector<Point> points; // sorted by (re, im)

    int multiplicity_sum() const {
        int s = 0;
        for (const auto& pt : points) s += pt.multiplicity;
        return s;
    }
};

InfinityIncidence infinity_incidence(const ExactBiPoly& f, InfiniteLine axis);

/// Numeric variant: roots of the leading coefficient are clustered with
/// absolute tolerance `cluster_tol`; multiplicity is the cluster size.
InfinityIncidence infinity_incidence(const NumBiPoly& f, InfiniteLine axis,
                                     double cluster_tol = 1e-6);

/// Branch count of the curve germ of P(z)Q(w) = 1 at the j-th incidence
/// point on {w = infinity}: gcd(deg Q, p_j).
int germ_branch_count(const ExactPoly& p, const ExactPoly& q, std::size_t j);

/// Incidences of one factor with both infinite lines.
struct FactorIncidences {
    InfinityIncidence second_at_inf;
    InfinityIncidence first_at_inf;
};

FactorIncidences factor_incidences(const NumBiPoly& f);

/// Pointwise sum of two incidences over the same point set: local
/// intersection numbers of a product of curves add. Avoids clustering
/// numeric roots of high multiplicity when grouping factors.
InfinityIncidence sum_incidences(const InfinityIncidence& a, const InfinityIncidence& b,
                                 double match_tol = 1e-5);

/// Max coefficientwise deviation of prod(factors) from the exact curve
/// polynomial, after matching the leading (corner) coefficients.
double factor_product_residual(const std::vector<NumBiPoly>& factors, const ExactBiPoly& curve);

struct Fraction {
    long num = 0;
    long den = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};
Fraction reduce_fraction(long num, long den);

/// Derived proportionality data for a two-factor split f' f'' of a separated
/// curve: the common ratios alpha = p'_j : p''_j and beta = q'_j : q''_j,
/// their coprime representation d'/d'', d = d' + d'', and the quotients
/// a_j = p_j / d, b_j = q_j / d.
struct ProportionalityReport {
    Fraction alpha, beta;
    int d_prime = 0;
    int d_double_prime = 0;
    int d = 0;
    std::vector<int> a, b;
    bool consistent = false;
};

/// factor_incidences and bidegrees must describe exactly two factors;
/// incidence point sets of the two factors must match up to `match_tol`.
/// Ratio or divisibility violations are reported via consistent = false.
ProportionalityReport proportionality_report(const std::vector<FactorIncidences>& factor_incidences,
                                             const std::vector<std::pair<int, int>>& bidegrees,
                                             double match_tol = 1e-5);

} // namespace lemni
