#include "lemni/power.hpp"

#include <numeric>

namespace lemni {

int max_power_exponent(const ExactPoly& p) {
    if (p.degree() < 1) throw ZeroOrConstantInput("max_power_exponent needs degree >= 1");
    int g = 0;
    for (const auto& part : squarefree_decompose(p).parts)
        g = std::gcd(g, part.exponent);
    return g;
}

PowerForm extract_power_form(const ExactPoly& p, int d) {
    if (p.degree() < 1) throw ZeroOrConstantInput("extract_power_form needs degree >= 1");
    if (d < 1 || max_power_exponent(p) % d != 0)
        throw NotADivisor("d = " + std::to_string(d));

    auto sf = squarefree_decompose(p);
    ExactPoly base = ExactPoly::constant(p.var(), GaussianRational(1));
    for (const auto& part : sf.parts)
        base *= pow(part.factor, static_cast<unsigned>(part.exponent / d));

    PowerForm form{sf.content, std::move(base), d};
    if (form.reconstruct() != p) throw Error("power form reconstruction mismatch");
    return form;
}

ReducibilityVerdict decide_reducibility(const ExactPoly& p, const ExactPoly& q) {
    const int d = std::gcd(max_power_exponent(p), max_power_exponent(q));
    ReducibilityVerdict v;
    v.d = d;
    v.reducible = d > 1;
    v.p1 = extract_power_form(p, d);
    v.q1 = extract_power_form(q, d);
    return v;
}

std::pair<bool, PowerForm> lemniscate_irreducible(const ExactPoly& p) {
    const int d = max_power_exponent(p);
    return {d == 1, extract_power_form(p, d)};
}

} // namespace lemni
