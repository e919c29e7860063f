#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "lemni/bipoly.hpp"
#include "lemni/monodromy.hpp"
#include "lemni/power.hpp"
#include "lemni/tracer.hpp"

namespace lemni {

using Json = nlohmann::json;

// Polynomial documents carry every coefficient as an exact rational string
// "n/d"; floating literals are rejected so the exact/numeric boundary
// survives the process boundary.
Json poly_to_document(const ExactPoly& p);
ExactPoly poly_from_document(const Json& doc);
ExactPoly load_poly(const std::string& path);

Json gaussian_to_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const Json& j);

Json power_form_to_document(const PowerForm& form);
Json verdict_to_document(const ReducibilityVerdict& v);
Json certificate_to_document(const MonodromyCertificate& cert, std::uint64_t seed);
Json realform_to_document(const ExactBiPoly& f);
Json proportionality_to_document(const ProportionalityReport& rep);

/// The symbolic verdict and the monodromy certificate tell the same story:
/// orbit_count equals d when d > 1 and equals 1 otherwise.
bool verdicts_agree(const ReducibilityVerdict& v, const MonodromyCertificate& cert);

/// Entry point behind the `lemni` binary. Structured output goes to `out`,
/// diagnostics to `err`. Exit codes: 0 success/agreement, 1 usage error,
/// 2 input error, 3 verification disagreement, 4 numerical failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lemni
