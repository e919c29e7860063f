#include "lemni/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lemni/monodromy.hpp"
#include "lemni/power.hpp"

namespace lemni {

namespace {

bool location_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

void sort_points(std::vector<InfinityIncidence::Point>& pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return location_less(a.location, b.location);
    });
}

} // namespace

std::complex<double> eval_numeric(const ExactBiPoly& f, std::complex<double> x,
                                  std::complex<double> y) {
    std::complex<double> acc = 0.0;
    for (int i = static_cast<int>(f.matrix().rows()) - 1; i >= 0; --i) {
        std::complex<double> inner = 0.0;
        for (int j = static_cast<int>(f.matrix().cols()) - 1; j >= 0; --j)
            inner = inner * y + to_complex(f.coeff(i, j));
        acc = acc * x + inner;
    }
    return acc;
}

NumBiPoly to_numeric(const ExactBiPoly& f) {
    NumBiPoly::Matrix m(f.matrix().rows(), f.matrix().cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = to_complex(f.matrix()(i, j));
    return NumBiPoly(f.vars()[0], f.vars()[1], std::move(m));
}

ExactBiPoly build_separated(const ExactPoly& p, const ExactPoly& q) {
    if (p.degree() < 1 || q.degree() < 1)
        throw ZeroOrConstantInput("separated curve needs two non-constant polynomials");
    if (p.var() == q.var())
        throw VariableMismatch("separated variables must be distinct, got '" + p.var() + "' twice");

    Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1> pc(p.degree() + 1);
    Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1> qc(q.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) pc(i) = p.coeff(i);
    for (int j = 0; j <= q.degree(); ++j) qc(j) = q.coeff(j);

    ExactBiPoly::Matrix m = pc * qc.transpose();
    m(0, 0) -= GaussianRational(1);
    return ExactBiPoly(p.var(), q.var(), std::move(m));
}

ExactBiPoly build_real_form(const ExactPoly& p) {
    if (p.degree() < 1) throw ZeroOrConstantInput("real form needs a non-constant polynomial");

    const GaussianRational i = GaussianRational::i();
    const ExactBiPoly x = ExactBiPoly::first_variable("x", "y");
    const ExactBiPoly y = ExactBiPoly::second_variable("x", "y");
    const ExactBiPoly z_sub = x + i * y;  // z = x + iy
    const ExactBiPoly w_sub = x - i * y;  // w = x - iy

    auto substitute = [](const ExactPoly& u, const ExactBiPoly& t) {
        ExactBiPoly acc = ExactBiPoly::constant("x", "y", u.coeff(u.degree()));
        for (int k = u.degree() - 1; k >= 0; --k)
            acc = acc * t + ExactBiPoly::constant("x", "y", u.coeff(k));
        return acc;
    };

    ExactBiPoly f = substitute(p, z_sub) * substitute(conjugate(p), w_sub) -
                    GaussianRational(1);
    for (Eigen::Index r = 0; r < f.matrix().rows(); ++r)
        for (Eigen::Index c = 0; c < f.matrix().cols(); ++c)
            if (!(f.matrix()(r, c).im == 0))
                throw Error("real form has a nonzero imaginary coefficient");
    return f;
}

std::vector<NumBiPoly> explicit_factors(const ExactPoly& p, const ExactPoly& q) {
    const ReducibilityVerdict v = decide_reducibility(p, q);
    if (!v.reducible) throw NotReducible();
    const int d = v.d;

    // P*Q - 1 = (gamma P1 Q1)^d - 1 with gamma^d = content(P) content(Q).
    const std::complex<double> gamma =
        std::pow(to_complex(v.p1.content * v.q1.content), 1.0 / d);
    const NumPoly p1 = to_numeric(v.p1.base);
    const NumPoly q1 = to_numeric(v.q1.base);

    Eigen::VectorXcd pc(p1.degree() + 1), qc(q1.degree() + 1);
    for (int i = 0; i <= p1.degree(); ++i) pc(i) = p1.coeff(i);
    for (int j = 0; j <= q1.degree(); ++j) qc(j) = q1.coeff(j);
    const NumBiPoly base(p.var(), q.var(), NumBiPoly::Matrix(gamma * (pc * qc.transpose())));

    std::vector<NumBiPoly> factors;
    factors.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / d;
        factors.push_back(base - std::complex<double>(std::cos(theta), std::sin(theta)));
    }
    return factors;
}

InfinityIncidence infinity_incidence(const ExactBiPoly& f, InfiniteLine axis) {
    if (f.is_zero()) throw DegenerateLeadingCoefficient("zero polynomial");
    const auto [dz, dw] = bidegree(f);
    const ExactPoly lead = axis == InfiniteLine::second_at_infinity
                               ? f.coeff_of_second_power(dw)
                               : f.coeff_of_first_power(dz);
    if (lead.is_zero()) throw DegenerateLeadingCoefficient();

    InfinityIncidence inc;
    inc.axis = axis;
    if (lead.degree() == 0) return inc;
    for (const auto& part : squarefree_decompose(lead).parts)
        for (const auto& root : univariate_roots(to_numeric(part.factor)))
            inc.points.push_back({root, part.exponent});
    sort_points(inc.points);
    return inc;
}

InfinityIncidence infinity_incidence(const NumBiPoly& f, InfiniteLine axis, double cluster_tol) {
    if (f.is_zero()) throw DegenerateLeadingCoefficient("zero polynomial");
    const auto [dz, dw] = bidegree(f);
    const NumPoly lead = axis == InfiniteLine::second_at_infinity ? f.coeff_of_second_power(dw)
                                                                  : f.coeff_of_first_power(dz);
    if (lead.is_zero()) throw DegenerateLeadingCoefficient();

    InfinityIncidence inc;
    inc.axis = axis;
    if (lead.degree() == 0) return inc;

    std::vector<std::complex<double>> roots = univariate_roots(lead);
    std::sort(roots.begin(), roots.end(), location_less);
    std::vector<std::complex<double>> sums;
    std::vector<int> counts;
    for (const auto& r : roots) {
        bool merged = false;
        for (std::size_t k = 0; k < sums.size(); ++k) {
            if (std::abs(r - sums[k] / static_cast<double>(counts[k])) <= cluster_tol) {
                sums[k] += r;
                ++counts[k];
                merged = true;
                break;
            }
        }
        if (!merged) {
            sums.push_back(r);
            counts.push_back(1);
        }
    }
    for (std::size_t k = 0; k < sums.size(); ++k)
        inc.points.push_back({sums[k] / static_cast<double>(counts[k]), counts[k]});
    sort_points(inc.points);
    return inc;
}

int germ_branch_count(const ExactPoly& p, const ExactPoly& q, std::size_t j) {
    const InfinityIncidence inc =
        infinity_incidence(build_separated(p, q), InfiniteLine::second_at_infinity);
    if (j >= inc.points.size())
        throw IndexOutOfRange("incidence point " + std::to_string(j) + " of " +
                              std::to_string(inc.points.size()));
    return std::gcd(q.degree(), inc.points[j].multiplicity);
}

Fraction reduce_fraction(long num, long den) {
    const long g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 0} : Fraction{num / g, den / g};
}

FactorIncidences factor_incidences(const NumBiPoly& f) {
    return {infinity_incidence(f, InfiniteLine::second_at_infinity),
            infinity_incidence(f, InfiniteLine::first_at_infinity)};
}

InfinityIncidence sum_incidences(const InfinityIncidence& a, const InfinityIncidence& b,
                                 double match_tol) {
    if (a.points.size() != b.points.size())
        throw InconsistentFactorData("factors meet the infinite line in different point counts");
    InfinityIncidence out;
    out.axis = a.axis;
    std::vector<bool> used(b.points.size(), false);
    for (const auto& pa : a.points) {
        int best = -1;
        double best_dist = match_tol;
        for (std::size_t k = 0; k < b.points.size(); ++k) {
            if (used[k]) continue;
            const double dist = std::abs(pa.location - b.points[k].location);
            if (dist <= best_dist) {
                best_dist = dist;
                best = static_cast<int>(k);
            }
        }
        if (best < 0) throw InconsistentFactorData("unmatched incidence point between factors");
        used[static_cast<std::size_t>(best)] = true;
        out.points.push_back(
            {pa.location, pa.multiplicity + b.points[static_cast<std::size_t>(best)].multiplicity});
    }
    return out;
}

double factor_product_residual(const std::vector<NumBiPoly>& factors, const ExactBiPoly& curve) {
    NumBiPoly product = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) product = product * factors[k];
    const NumBiPoly reference = to_numeric(curve);
    if (product.matrix().rows() != reference.matrix().rows() ||
        product.matrix().cols() != reference.matrix().cols())
        return std::numeric_limits<double>::infinity();

    const Eigen::Index r = reference.matrix().rows() - 1, c = reference.matrix().cols() - 1;
    const std::complex<double> scale = reference.matrix()(r, c) / product.matrix()(r, c);
    double residual = 0.0;
    for (Eigen::Index i = 0; i <= r; ++i)
        for (Eigen::Index j = 0; j <= c; ++j)
            residual = std::max(
                residual, std::abs(scale * product.matrix()(i, j) - reference.matrix()(i, j)));
    return residual;
}

namespace {

// Pair up the incidence points of two factors by location; every point of
// either factor must find exactly one partner.
std::vector<std::array<int, 2>> match_multiplicities(const InfinityIncidence& a,
                                                     const InfinityIncidence& b,
                                                     double match_tol) {
    if (a.points.size() != b.points.size())
        throw InconsistentFactorData("factors meet the infinite line in different point counts");
    std::vector<std::array<int, 2>> matched;
    std::vector<bool> used(b.points.size(), false);
    for (const auto& pa : a.points) {
        int best = -1;
        double best_dist = match_tol;
        for (std::size_t k = 0; k < b.points.size(); ++k) {
            if (used[k]) continue;
            const double dist = std::abs(pa.location - b.points[k].location);
            if (dist <= best_dist) {
                best_dist = dist;
                best = static_cast<int>(k);
            }
        }
        if (best < 0) throw InconsistentFactorData("unmatched incidence point between factors");
        used[static_cast<std::size_t>(best)] = true;
        matched.push_back({pa.multiplicity, b.points[static_cast<std::size_t>(best)].multiplicity});
    }
    return matched;
}

} // namespace

ProportionalityReport proportionality_report(const std::vector<FactorIncidences>& factor_incidences,
                                             const std::vector<std::pair<int, int>>& bidegrees,
                                             double match_tol) {
    if (factor_incidences.size() != 2 || bidegrees.size() != 2)
        throw InconsistentFactorData("exactly two factors required");

    const auto p_pairs = match_multiplicities(factor_incidences[0].second_at_inf,
                                              factor_incidences[1].second_at_inf, match_tol);
    const auto q_pairs = match_multiplicities(factor_incidences[0].first_at_inf,
                                              factor_incidences[1].first_at_inf, match_tol);
    if (p_pairs.empty() || q_pairs.empty())
        throw InconsistentFactorData("a factor has no incidence points on one axis");

    ProportionalityReport rep;
    rep.alpha = reduce_fraction(p_pairs[0][0], p_pairs[0][1]);
    rep.beta = reduce_fraction(q_pairs[0][0], q_pairs[0][1]);

    bool ok = rep.alpha == rep.beta;
    const auto [dp1, dq1] = bidegrees[0];  // (p', q')
    const auto [dp2, dq2] = bidegrees[1];  // (p'', q'')
    for (const auto& [pj1, pj2] : p_pairs) {
        ok = ok && pj1 * rep.alpha.den == pj2 * rep.alpha.num; // same ratio at every point
        ok = ok && pj1 * dq2 == pj2 * dq1;                     // p'_j / p''_j = q' / q''
    }
    for (const auto& [qj1, qj2] : q_pairs) {
        ok = ok && qj1 * rep.beta.den == qj2 * rep.beta.num;
        ok = ok && qj1 * dp2 == qj2 * dp1;                     // q'_j / q''_j = p' / p''
    }

    rep.d_prime = static_cast<int>(rep.alpha.num);
    rep.d_double_prime = static_cast<int>(rep.alpha.den);
    rep.d = rep.d_prime + rep.d_double_prime;
    for (const auto& [pj1, pj2] : p_pairs) {
        const int pj = pj1 + pj2;
        ok = ok && rep.d > 0 && pj % rep.d == 0;
        rep.a.push_back(rep.d > 0 ? pj / rep.d : 0);
    }
    for (const auto& [qj1, qj2] : q_pairs) {
        const int qj = qj1 + qj2;
        ok = ok && rep.d > 0 && qj % rep.d == 0;
        rep.b.push_back(rep.d > 0 ? qj / rep.d : 0);
    }
    rep.consistent = ok;
    return rep;
}

} // namespace lemni
