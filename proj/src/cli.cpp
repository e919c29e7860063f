#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lemni/io.hpp"

namespace lemni {

namespace {

struct VerifyOutcome {
    Json doc;
    bool ok = false;
};

VerifyOutcome run_verify(const ExactPoly& p, const ExactPoly& q, std::uint64_t seed) {
    const ReducibilityVerdict verdict = decide_reducibility(p, q);
    const MonodromyCertificate cert = component_count(p, q, seed);

    VerifyOutcome res;
    res.doc = verdict_to_document(verdict);
    res.doc["seed"] = seed;
    res.doc["oracle_orbit_count"] = cert.orbit_count;
    const bool agree = verdicts_agree(verdict, cert);
    res.doc["agree"] = agree;
    res.ok = agree;

    if (verdict.reducible) {
        const std::vector<NumBiPoly> factors = explicit_factors(p, q);
        const double residual = factor_product_residual(factors, build_separated(p, q));
        const bool factorization_ok = residual < 1e-8;
        res.doc["factor_residual"] = residual;
        res.doc["factorization_ok"] = factorization_ok;

        auto incidence_json = [](const InfinityIncidence& inc) {
            Json arr = Json::array();
            for (const auto& pt : inc.points)
                arr.push_back(Json{{"re", pt.location.real() + 0.0},
                                   {"im", pt.location.imag() + 0.0},
                                   {"multiplicity", pt.multiplicity}});
            return arr;
        };
        Json incidences = Json::array();
        for (const auto& f : factors) {
            const FactorIncidences inc = factor_incidences(f);
            incidences.push_back(Json{{"second_at_infinity", incidence_json(inc.second_at_inf)},
                                      {"first_at_infinity", incidence_json(inc.first_at_inf)}});
        }
        res.doc["incidences"] = std::move(incidences);

        // binary split: first factor against the product of the rest
        FactorIncidences head = factor_incidences(factors[0]);
        FactorIncidences tail = factor_incidences(factors[1]);
        std::pair<int, int> tail_bidegree = bidegree(factors[1]);
        for (std::size_t k = 2; k < factors.size(); ++k) {
            const FactorIncidences next = factor_incidences(factors[k]);
            tail.second_at_inf = sum_incidences(tail.second_at_inf, next.second_at_inf);
            tail.first_at_inf = sum_incidences(tail.first_at_inf, next.first_at_inf);
            const auto [dz, dw] = bidegree(factors[k]);
            tail_bidegree.first += dz;
            tail_bidegree.second += dw;
        }
        const ProportionalityReport rep =
            proportionality_report({head, tail}, {bidegree(factors[0]), tail_bidegree});
        res.doc["proportionality"] = proportionality_to_document(rep);
        res.ok = res.ok && factorization_ok && rep.consistent && rep.d == verdict.d;
    }
    return res;
}

void print_doc(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// The curve P(z)Q(w) - 1 needs two distinct variables, whichever command
// consumes the pair.
std::pair<ExactPoly, ExactPoly> load_pair(const std::string& p_path, const std::string& q_path) {
    ExactPoly p = load_poly(p_path);
    ExactPoly q = load_poly(q_path);
    if (p.var() == q.var())
        throw VariableMismatch("P and Q both use variable '" + p.var() + "'");
    return {std::move(p), std::move(q)};
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separated-curve irreducibility toolkit: symbolic power-structure decisions "
                 "with a numerical monodromy cross-check and a lemniscate tracer."};
    app.name("lemni");
    app.require_subcommand(1);

    std::string p_path, q_path, poly_path, out_path;
    std::uint64_t seed = 42;
    int resolution = 256;
    std::string format = "svg";

    CLI::App* cmd_power = app.add_subcommand("power", "Maximal power exponent and power form of P");
    cmd_power->add_option("file", poly_path, "polynomial document")->required();

    CLI::App* cmd_decide =
        app.add_subcommand("decide", "Is P(z)Q(w) - 1 reducible? (symbolic decision)");
    cmd_decide->add_option("--p", p_path, "P document")->required();
    cmd_decide->add_option("--q", q_path, "Q document")->required();

    CLI::App* cmd_realform =
        app.add_subcommand("realform", "Exact real form P(x+iy) conj(P)(x-iy) - 1");
    cmd_realform->add_option("file", poly_path, "polynomial document")->required();

    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "Monodromy component count of {P(z)Q(w) = 1}");
    cmd_oracle->add_option("--p", p_path, "P document")->required();
    cmd_oracle->add_option("--q", q_path, "Q document")->required();
    cmd_oracle->add_option("--seed", seed, "basepoint seed");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Symbolic decision cross-checked against the oracle");
    cmd_verify->add_option("--p", p_path, "P document")->required();
    cmd_verify->add_option("--q", q_path, "Q document")->required();
    cmd_verify->add_option("--seed", seed, "basepoint seed");

    CLI::App* cmd_trace = app.add_subcommand("trace", "Trace the lemniscate |P(z)| = 1");
    cmd_trace->add_option("file", poly_path, "polynomial document")->required();
    cmd_trace->add_option("--resolution", resolution, "grid cells per axis")
        ->check(CLI::Range(16, 1 << 14));
    cmd_trace->add_option("--format", format, "svg or csv")
        ->check(CLI::IsMember({"svg", "csv"}));
    cmd_trace->add_option("--out", out_path, "output file")->required();

    std::vector<const char*> argv;
    argv.push_back("lemni");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_power->parsed()) {
            const ExactPoly p = load_poly(poly_path);
            const auto [irreducible, form] = lemniscate_irreducible(p);
            Json doc{{"d_max", form.exponent},
                     {"lemniscate_irreducible", irreducible},
                     {"power_form", power_form_to_document(form)}};
            print_doc(out, doc);
            return 0;
        }
        if (cmd_decide->parsed()) {
            const auto [p, q] = load_pair(p_path, q_path);
            print_doc(out, verdict_to_document(decide_reducibility(p, q)));
            return 0;
        }
        if (cmd_realform->parsed()) {
            print_doc(out, realform_to_document(build_real_form(load_poly(poly_path))));
            return 0;
        }
        if (cmd_oracle->parsed()) {
            const auto [p, q] = load_pair(p_path, q_path);
            print_doc(out, certificate_to_document(component_count(p, q, seed), seed));
            return 0;
        }
        if (cmd_verify->parsed()) {
            const auto [p, q] = load_pair(p_path, q_path);
            const VerifyOutcome res = run_verify(p, q, seed);
            print_doc(out, res.doc);
            if (!res.ok) err << "verification disagreement\n";
            return res.ok ? 0 : 3;
        }
        if (cmd_trace->parsed()) {
            const ExactPoly p = load_poly(poly_path);
            const CurveSet curve = trace_lemniscate(p, resolution);
            if (format == "svg")
                emit_svg(curve, out_path);
            else
                emit_csv(curve, out_path);
            Json doc{{"file", out_path},
                     {"format", format},
                     {"resolution", resolution},
                     {"components", component_count_numeric(curve)},
                     {"polylines", curve.polylines.size()},
                     {"vertices", curve.vertex_count()}};
            print_doc(out, doc);
            return 0;
        }
        err << "no subcommand\n";
        return 1;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroOrConstantInput& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const VariableMismatch& e) {
        err << "input error: " << e.what()
            << " (P and Q must use distinct variable tags)\n";
        return 2;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 4;
    }
}

} // namespace lemni
