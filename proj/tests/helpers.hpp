#pragma once

#include <random>
#include <string>
#include <vector>

#include "lemni/polynomial.hpp"

namespace lemni::testing {

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline GaussianRational gr(long re_num, long re_den, long im_num, long im_den) {
    return {rat(re_num, re_den), rat(im_num, im_den)};
}

/// Real integer-coefficient polynomial, ascending coefficients.
inline ExactPoly ipoly(const std::string& var, const std::vector<long>& coeffs) {
    std::vector<GaussianRational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(rat(v));
    return ExactPoly(var, std::move(c));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, int span = 3) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 2);
    return {rat(num(rng), den(rng)), rat(num(rng), den(rng))};
}

/// Random polynomial of exactly the requested degree.
inline ExactPoly random_poly(std::mt19937_64& rng, int degree, const std::string& var = "z",
                             int span = 3) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = random_gaussian(rng, span);
    while (c.back().is_zero()) c.back() = random_gaussian(rng, span);
    return ExactPoly(var, std::move(c));
}

inline ExactPoly random_nonconstant(std::mt19937_64& rng, int max_degree,
                                    const std::string& var = "z", int span = 3) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    return random_poly(rng, deg(rng), var, span);
}

/// Product of random monic factors with prescribed exponents, times a random
/// nonzero content; gives inputs with controlled multiplicity structure.
inline ExactPoly random_with_multiplicities(std::mt19937_64& rng,
                                            const std::vector<std::pair<int, int>>& deg_exp,
                                            const std::string& var = "z") {
    GaussianRational content = random_gaussian(rng);
    while (content.is_zero()) content = random_gaussian(rng);
    ExactPoly p = ExactPoly::constant(var, content);
    for (const auto& [deg, exp] : deg_exp)
        p *= pow(monic(random_poly(rng, deg, var)), static_cast<unsigned>(exp));
    return p;
}

} // namespace lemni::testing
