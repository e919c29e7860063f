#include "lemni/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace lemni {

Json gaussian_to_json(const GaussianRational& g) {
    return Json{{"re", format_rational(g.re)}, {"im", format_rational(g.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw ParseError("coefficient must be an object with \"re\" and \"im\"");
    if (!j["re"].is_string() || !j["im"].is_string())
        throw ParseError("coefficient components must be rational strings, not numbers");
    return {parse_rational(j["re"].get<std::string>()),
            parse_rational(j["im"].get<std::string>())};
}

Json poly_to_document(const ExactPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(gaussian_to_json(c));
    return Json{{"variable", p.var()}, {"coeffs", std::move(coeffs)}};
}

ExactPoly poly_from_document(const Json& doc) {
    if (!doc.is_object()) throw ParseError("polynomial document must be an object");
    if (!doc.contains("variable") || !doc["variable"].is_string())
        throw ParseError("missing string field \"variable\"");
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array() || doc["coeffs"].empty())
        throw ParseError("missing non-empty array field \"coeffs\"");

    std::vector<GaussianRational> coeffs;
    for (const auto& entry : doc["coeffs"]) coeffs.push_back(gaussian_from_json(entry));
    if (coeffs.back().is_zero())
        throw ParseError("trailing zero coefficient (degree " +
                         std::to_string(coeffs.size() - 1) + ")");
    return ExactPoly(doc["variable"].get<std::string>(), std::move(coeffs));
}

ExactPoly load_poly(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(is);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return poly_from_document(doc);
}

Json power_form_to_document(const PowerForm& form) {
    Json doc = poly_to_document(form.base);
    doc["content"] = gaussian_to_json(form.content);
    doc["exponent"] = form.exponent;
    return doc;
}

Json verdict_to_document(const ReducibilityVerdict& v) {
    return Json{{"reducible", v.reducible},
                {"d", v.d},
                {"p1", power_form_to_document(v.p1)},
                {"q1", power_form_to_document(v.q1)}};
}

namespace {

Json complex_to_json(std::complex<double> z) {
    return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; // +0.0 folds away -0.0
}

} // namespace

Json certificate_to_document(const MonodromyCertificate& cert, std::uint64_t seed) {
    Json bps = Json::array();
    for (const auto& b : cert.branch_points) bps.push_back(complex_to_json(b));
    return Json{{"seed", seed},
                {"branch_points", std::move(bps)},
                {"permutations", cert.permutations},
                {"orbit_count", cert.orbit_count},
                {"orbits", cert.orbits}};
}

Json realform_to_document(const ExactBiPoly& f) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < f.matrix().rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < f.matrix().cols(); ++j)
            row.push_back(gaussian_to_json(f.matrix()(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"variables", Json::array({f.vars()[0], f.vars()[1]})},
                {"coeffs", std::move(rows)}};
}

Json proportionality_to_document(const ProportionalityReport& rep) {
    auto frac = [](const Fraction& f) {
        return std::to_string(f.num) + "/" + std::to_string(f.den);
    };
    return Json{{"alpha", frac(rep.alpha)},
                {"beta", frac(rep.beta)},
                {"d_prime", rep.d_prime},
                {"d_double_prime", rep.d_double_prime},
                {"d", rep.d},
                {"a", rep.a},
                {"b", rep.b},
                {"consistent", rep.consistent}};
}

bool verdicts_agree(const ReducibilityVerdict& v, const MonodromyCertificate& cert) {
    const int expected = v.reducible ? v.d : 1;
    return (v.reducible == (cert.orbit_count > 1)) && cert.orbit_count == expected;
}

} // namespace lemni
