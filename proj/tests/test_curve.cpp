#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "helpers.hpp"
#include "lemni/bipoly.hpp"
#include "lemni/power.hpp"

using namespace lemni;
using namespace lemni::testing;
using cplx = std::complex<double>;

namespace {

ExactBiPoly from_entries(const std::string& v0, const std::string& v1, int rows, int cols,
                         const std::vector<long>& entries) {
    ExactBiPoly::Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = GaussianRational(rat(entries[static_cast<std::size_t>(i * cols + j)]));
    return ExactBiPoly(v0, v1, std::move(m));
}

} // namespace

TEST_CASE("separated curve construction") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");

    // zw - 1
    CHECK(build_separated(z, w) == from_entries("z", "w", 2, 2, {-1, 0, 0, 1}));
    // z^2 w^2 - 1
    CHECK(build_separated(pow(z, 2), pow(w, 2)) ==
          from_entries("z", "w", 3, 3, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    // (z^2-1)(w+1) - 1 = z^2 w + z^2 - w - 2
    const ExactBiPoly f = build_separated(ipoly("z", {-1, 0, 1}), ipoly("w", {1, 1}));
    CHECK(f == from_entries("z", "w", 3, 2, {-2, -1, 0, 0, 1, 1}));

    // evaluation bridge at random points
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 25; ++k) {
        const cplx zv(u(rng), u(rng)), wv(u(rng), u(rng));
        const cplx lhs = eval_numeric(f, zv, wv);
        const cplx rhs = eval_numeric(ipoly("z", {-1, 0, 1}), zv) *
                             eval_numeric(ipoly("w", {1, 1}), wv) -
                         1.0;
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    CHECK_THROWS_AS(build_separated(ExactPoly::constant("z", GaussianRational(2)), w),
                    ZeroOrConstantInput);
    CHECK_THROWS_AS(build_separated(z, ExactPoly::variable("z")), VariableMismatch);
}

TEST_CASE("real form of the lemniscate equation") {
    const ExactPoly z = ExactPoly::variable("z");

    // |z|^2 - 1 = x^2 + y^2 - 1
    CHECK(build_real_form(z) == from_entries("x", "y", 3, 3, {-1, 0, 1, 0, 0, 0, 1, 0, 0}));

    // |z - i|^2 - 1 = x^2 + y^2 - 2y
    const ExactPoly zmi = z - ExactPoly::constant("z", GaussianRational::i());
    CHECK(build_real_form(zmi) == from_entries("x", "y", 3, 3, {0, -2, 1, 0, 0, 0, 1, 0, 0}));

    // |z^2|^2 - 1 = (x^2+y^2)^2 - 1
    const ExactBiPoly xx_yy = from_entries("x", "y", 3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0});
    CHECK(build_real_form(pow(z, 2)) == xx_yy * xx_yy - GaussianRational(1));

    CHECK_THROWS_AS(build_real_form(ExactPoly::constant("z", GaussianRational(1))),
                    ZeroOrConstantInput);
}

TEST_CASE("real form: exact realness and numeric bridge on random inputs") {
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<int> deg(1, 10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        const ExactPoly p = random_poly(rng, deg(rng));
        const ExactBiPoly f = build_real_form(p);
        for (Eigen::Index i = 0; i < f.matrix().rows(); ++i)
            for (Eigen::Index j = 0; j < f.matrix().cols(); ++j)
                CHECK(f.matrix()(i, j).im == 0); // exact, no tolerance

        for (int k = 0; k < 10; ++k) {
            const double x = u(rng), y = u(rng);
            const double ref = std::norm(eval_numeric(p, {x, y})) - 1.0;
            const double got = eval_numeric(f, {x, 0.0}, {y, 0.0}).real();
            CHECK(std::abs(got - ref) <= 1e-9 * std::max({1.0, std::abs(ref), std::abs(got)}));
        }
    }
}

TEST_CASE("bidegree") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");
    CHECK((bidegree(build_separated(z, w)) == std::pair<int, int>(1, 1)));
    CHECK((bidegree(build_separated(pow(z, 2), pow(w, 2))) == std::pair<int, int>(2, 2)));
    CHECK_THROWS_AS(bidegree(ExactBiPoly("z", "w")), ZeroPolynomial);
}

TEST_CASE("explicit factorization in the reducible case") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");

    // z^2 w^2 - 1 = (zw - 1)(zw + 1)
    const auto factors1 = explicit_factors(pow(z, 2), pow(w, 2));
    REQUIRE(factors1.size() == 2);
    for (const auto& f : factors1) CHECK((bidegree(f) == std::pair<int, int>(1, 1)));
    CHECK(factor_product_residual(factors1, build_separated(pow(z, 2), pow(w, 2))) < 1e-12);

    // z^2 w^4 - 1 = (zw^2 - 1)(zw^2 + 1)
    const auto factors2 = explicit_factors(pow(z, 2), pow(w, 4));
    REQUIRE(factors2.size() == 2);
    CHECK(factor_product_residual(factors2, build_separated(pow(z, 2), pow(w, 4))) < 1e-12);

    // ((z^2-1)^2, w^6): factors (z^2-1)w^3 -+ 1
    const ExactPoly p3 = pow(ipoly("z", {-1, 0, 1}), 2);
    const auto factors3 = explicit_factors(p3, pow(w, 6));
    REQUIRE(factors3.size() == 2);
    CHECK(factor_product_residual(factors3, build_separated(p3, pow(w, 6))) < 1e-10);

    CHECK_THROWS_AS(explicit_factors(pow(z, 2), pow(w, 3)), NotReducible);
}

TEST_CASE("factor product on random planted pairs") {
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<int> d_dist(2, 4), deg(1, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = d_dist(rng);
        const ExactPoly p = pow(random_poly(rng, deg(rng), "z"), static_cast<unsigned>(d));
        const ExactPoly q = pow(random_poly(rng, deg(rng), "w"), static_cast<unsigned>(d));
        if (p.degree() + q.degree() > 8) continue;
        const auto factors = explicit_factors(p, q);
        CHECK(factors.size() == static_cast<std::size_t>(decide_reducibility(p, q).d));
        CHECK(factor_product_residual(factors, build_separated(p, q)) < 1e-8);
    }
}

TEST_CASE("incidence with the infinite lines") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");

    // z^2 w^2 - 1 meets {w = inf} only above z = 0, with multiplicity 2
    const auto inc1 =
        infinity_incidence(build_separated(pow(z, 2), pow(w, 2)), InfiniteLine::second_at_infinity);
    REQUIRE(inc1.points.size() == 1);
    CHECK(std::abs(inc1.points[0].location) < 1e-12);
    CHECK(inc1.points[0].multiplicity == 2);

    // numeric factor zw - 1
    const auto factors = explicit_factors(pow(z, 2), pow(w, 2));
    const auto inc2 = infinity_incidence(factors[0], InfiniteLine::second_at_infinity);
    REQUIRE(inc2.points.size() == 1);
    CHECK(std::abs(inc2.points[0].location) < 1e-9);
    CHECK(inc2.points[0].multiplicity == 1);

    // (z^2-1)w + (z^2-2): leading-in-w coefficient z^2 - 1
    const ExactBiPoly f = from_entries("z", "w", 3, 2, {-2, -1, 0, 0, 1, 1});
    const auto inc3 = infinity_incidence(f, InfiniteLine::second_at_infinity);
    REQUIRE(inc3.points.size() == 2);
    CHECK(std::abs(inc3.points[0].location - cplx(-1.0)) < 1e-12);
    CHECK(std::abs(inc3.points[1].location - cplx(1.0)) < 1e-12);
    CHECK(inc3.points[0].multiplicity == 1);
    CHECK(inc3.points[1].multiplicity == 1);
}

TEST_CASE("incidence sum rule equals the bidegree component") {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> deg(1, 4), d_dist(2, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const ExactPoly p = random_poly(rng, deg(rng), "z");
        const ExactPoly q = random_poly(rng, deg(rng), "w");
        const ExactBiPoly f = build_separated(p, q);
        const auto [dz, dw] = bidegree(f);
        CHECK(infinity_incidence(f, InfiniteLine::second_at_infinity).multiplicity_sum() == dz);
        CHECK(infinity_incidence(f, InfiniteLine::first_at_infinity).multiplicity_sum() == dw);

        // numeric factors obey the same rule within clustering
        const int d = d_dist(rng);
        const ExactPoly pd = pow(p, static_cast<unsigned>(d));
        const ExactPoly qd = pow(q, static_cast<unsigned>(d));
        for (const auto& factor : explicit_factors(pd, qd)) {
            const auto [fz, fw] = bidegree(factor);
            CHECK(infinity_incidence(factor, InfiniteLine::second_at_infinity).multiplicity_sum() ==
                  fz);
            CHECK(infinity_incidence(factor, InfiniteLine::first_at_infinity).multiplicity_sum() ==
                  fw);
        }
    }
}

TEST_CASE("germ branch counts") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");
    CHECK(germ_branch_count(pow(z, 2), pow(w, 2), 0) == 2); // gcd(2, 2)
    CHECK(germ_branch_count(pow(z, 2), pow(w, 3), 0) == 1); // gcd(3, 2)
    CHECK(germ_branch_count(z, w, 0) == 1);                 // gcd(1, 1)
    CHECK_THROWS_AS(germ_branch_count(z, w, 5), IndexOutOfRange);
}

TEST_CASE("proportionality bookkeeping across a factor pair") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");

    auto incidence_pair = [](const std::vector<NumBiPoly>& factors) {
        std::vector<FactorIncidences> incs;
        std::vector<std::pair<int, int>> degs;
        for (const auto& f : factors) {
            incs.push_back(factor_incidences(f));
            degs.push_back(bidegree(f));
        }
        return std::pair(incs, degs);
    };

    // (z^2, w^2): both factor multiplicities 1, d = 2, a = b = [1]
    {
        const auto [incs, degs] = incidence_pair(explicit_factors(pow(z, 2), pow(w, 2)));
        const ProportionalityReport rep = proportionality_report(incs, degs);
        CHECK(rep.consistent);
        CHECK((rep.alpha == Fraction{1, 1}));
        CHECK((rep.beta == Fraction{1, 1}));
        CHECK(rep.d_prime == 1);
        CHECK(rep.d_double_prime == 1);
        CHECK(rep.d == 2);
        CHECK(rep.a == std::vector<int>{1});
        CHECK(rep.b == std::vector<int>{1});
    }

    // (z^4, w^2): bidegrees (2,1) each, a = [2] reconstructs p_1 = 4 = a_1 d
    {
        const auto [incs, degs] = incidence_pair(explicit_factors(pow(z, 4), pow(w, 2)));
        CHECK((degs == std::vector<std::pair<int, int>>{{2, 1}, {2, 1}}));
        const ProportionalityReport rep = proportionality_report(incs, degs);
        CHECK(rep.consistent);
        CHECK((rep.alpha == Fraction{1, 1}));
        CHECK(rep.d == 2);
        CHECK(rep.a == std::vector<int>{2});
        CHECK(rep.b == std::vector<int>{1});
    }

    // a single factor violates the two-factor precondition
    {
        const auto factors = explicit_factors(pow(z, 2), pow(w, 2));
        const std::vector<FactorIncidences> one{factor_incidences(factors[0])};
        CHECK_THROWS_AS(proportionality_report(one, {bidegree(factors[0])}),
                        InconsistentFactorData);
    }
}

TEST_CASE("additivity of local intersection numbers across factors") {
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<int> deg(1, 3), d_dist(2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = d_dist(rng);
        const ExactPoly p = pow(random_poly(rng, deg(rng), "z"), static_cast<unsigned>(d));
        const ExactPoly q = pow(random_poly(rng, deg(rng), "w"), static_cast<unsigned>(d));

        const auto exact_inc =
            infinity_incidence(build_separated(p, q), InfiniteLine::second_at_infinity);
        const auto factors = explicit_factors(p, q);

        InfinityIncidence total = infinity_incidence(factors[0], InfiniteLine::second_at_infinity);
        for (std::size_t k = 1; k < factors.size(); ++k)
            total = sum_incidences(total,
                                   infinity_incidence(factors[k], InfiniteLine::second_at_infinity));

        REQUIRE(total.points.size() == exact_inc.points.size());
        for (const auto& pt : exact_inc.points) {
            bool found = false;
            for (const auto& tp : total.points)
                if (std::abs(tp.location - pt.location) < 1e-5 &&
                    tp.multiplicity == pt.multiplicity)
                    found = true;
            CHECK(found); // p_j = sum of factor multiplicities at z_j
        }
    }
}
