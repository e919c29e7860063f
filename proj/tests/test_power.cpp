#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "lemni/power.hpp"

using namespace lemni;
using namespace lemni::testing;

TEST_CASE("maximal power exponent") {
    const ExactPoly z = ExactPoly::variable("z");

    CHECK(max_power_exponent(z) == 1);
    CHECK(max_power_exponent(pow(ipoly("z", {-1, 0, 1}), 3)) == 3);

    // z^4 (z-1)^2 = (z^2 (z-1))^2, so the exponent is gcd(4, 2) = 2
    const ExactPoly p = pow(z, 4) * pow(ipoly("z", {-1, 1}), 2);
    CHECK(max_power_exponent(p) == 2);
    CHECK(p == pow(pow(z, 2) * ipoly("z", {-1, 1}), 2));

    CHECK_THROWS_AS(max_power_exponent(ExactPoly::constant("z", GaussianRational(5))),
                    ZeroOrConstantInput);
}

TEST_CASE("power form extraction") {
    const ExactPoly z = ExactPoly::variable("z");

    const ExactPoly cube = pow(ipoly("z", {-1, 0, 1}), 3);
    const PowerForm f1 = extract_power_form(cube, 3);
    CHECK(f1.content == GaussianRational(1));
    CHECK(f1.base == ipoly("z", {-1, 0, 1}));
    CHECK(pow(f1.base, 3) == cube);

    // d = 1 is always admissible: content carries the leading coefficient
    const ExactPoly p = ipoly("z", {1, 4, 0, 2});
    const PowerForm f2 = extract_power_form(p, 1);
    CHECK(f2.content == GaussianRational(2));
    CHECK(f2.base.leading() == GaussianRational(1));
    CHECK(f2.reconstruct() == p);

    // content stays outside the base even when it has an exact root: 4z^2
    const PowerForm f3 = extract_power_form(ipoly("z", {0, 0, 4}), 2);
    CHECK(f3.content == GaussianRational(4));
    CHECK(f3.base == z);

    CHECK_THROWS_AS(extract_power_form(pow(z, 4), 3), NotADivisor);
}

TEST_CASE("reducibility decision") {
    const ExactPoly z = ExactPoly::variable("z");
    const ExactPoly w = ExactPoly::variable("w");

    const ReducibilityVerdict v1 = decide_reducibility(pow(z, 2), pow(w, 2));
    CHECK(v1.reducible);
    CHECK(v1.d == 2);
    CHECK(v1.p1.base == z);
    CHECK(v1.q1.base == w);

    const ReducibilityVerdict v2 = decide_reducibility(pow(z, 2), pow(w, 3));
    CHECK_FALSE(v2.reducible);
    CHECK(v2.d == 1);

    const ReducibilityVerdict v3 = decide_reducibility(z, w);
    CHECK_FALSE(v3.reducible);
    CHECK(v3.d == 1);
}

TEST_CASE("lemniscate irreducibility") {
    const ExactPoly z = ExactPoly::variable("z");

    auto [irr1, form1] = lemniscate_irreducible(ipoly("z", {-1, 1}));
    CHECK(irr1);
    CHECK(form1.exponent == 1);

    auto [irr2, form2] = lemniscate_irreducible(pow(z, 2));
    CHECK_FALSE(irr2);
    CHECK(form2.base == z);
    CHECK(form2.exponent == 2);

    auto [irr3, form3] = lemniscate_irreducible(pow(z, 4) * pow(ipoly("z", {-1, 1}), 2));
    CHECK_FALSE(irr3);
    CHECK(form3.base == pow(z, 2) * ipoly("z", {-1, 1}));
    CHECK(form3.exponent == 2);
}

TEST_CASE("power law and extraction soundness on random inputs") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> deg(1, 5), k_dist(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const ExactPoly p = random_poly(rng, deg(rng));
        const int k = k_dist(rng);
        const ExactPoly pk = pow(p, static_cast<unsigned>(k));
        CHECK(max_power_exponent(pk) == k * max_power_exponent(p));

        const int d_max = max_power_exponent(pk);
        for (int d = 1; d <= d_max; ++d) {
            if (d_max % d != 0) continue;
            const PowerForm form = extract_power_form(pk, d);
            CHECK(form.reconstruct() == pk);
            CHECK(form.base.leading() == GaussianRational(1));
        }
        CHECK(max_power_exponent(extract_power_form(pk, d_max).base) == 1); // maximality
    }
}

TEST_CASE("decision symmetry") {
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> deg(1, 4), d_dist(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const ExactPoly p = pow(random_poly(rng, deg(rng), "z"),
                                static_cast<unsigned>(d_dist(rng)));
        const ExactPoly q = pow(random_poly(rng, deg(rng), "w"),
                                static_cast<unsigned>(d_dist(rng)));
        CHECK(decide_reducibility(p, q).reducible == decide_reducibility(q, p).reducible);
    }
}
