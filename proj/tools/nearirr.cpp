#include "nearirr/errors.hpp"
#include "nearirr/expr.hpp"
#include "nearirr/gcd_resultant.hpp"
#include "nearirr/report.hpp"
#include "nearirr/svg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nearirr::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

int emit_error(const std::string& kind, const std::string& message, int code) {
    std::cerr << nearirr::error_json(kind, message).dump() << '\n';
    return code;
}

// Maps an exception from the library to the documented exit codes; parse
// errors additionally carry the byte offset.
int handle_failure(std::exception_ptr ep) {
    try {
        std::rethrow_exception(ep);
    } catch (const nearirr::ParseError& e) {
        Json err = nearirr::error_json("parse_error", e.what());
        err["position"] = e.position();
        std::cerr << err.dump() << '\n';
        return kExitUsage;
    } catch (const nearirr::DomainError& e) {
        return emit_error("precondition", e.what(), kExitPrecondition);
    } catch (const nearirr::InternalError& e) {
        return emit_error("internal", e.what(), kExitInternal);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), kExitInternal);
    }
}

nearirr::Polynomial parse_nonconstant(const std::string& text) {
    nearirr::Polynomial f = nearirr::parse_polynomial(text);
    if (f.is_zero() || f.is_constant())
        throw nearirr::DomainError("polynomial must have positive degree");
    return f;
}

std::string read_single_expression(const std::string& arg) {
    if (!arg.empty()) return arg;
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

int run_check_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) return emit_error("usage", "cannot open batch file: " + path, kExitUsage);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const nearirr::Polynomial f = parse_nonconstant(line);
            std::cout << nearirr::check_report(f).dump() << '\n';
        } catch (const std::exception& e) {
            Json err;
            err["input"] = line;
            err["line"] = lineno;
            err["error"] = e.what();
            std::cout << err.dump() << '\n';
        }
    }
    return kExitOk;
}

int run_check(const std::string& poly_arg, const std::string& batch_path) {
    if (!batch_path.empty()) return run_check_batch(batch_path);
    const nearirr::Polynomial f = parse_nonconstant(read_single_expression(poly_arg));
    std::cout << nearirr::check_report(f).dump(2) << '\n';
    return kExitOk;
}

int run_diagram(const std::string& poly_arg, const std::string& svg_path) {
    const nearirr::Polynomial f =
        nearirr::parse_polynomial(read_single_expression(poly_arg));
    if (f.is_zero()) throw nearirr::DomainError("the zero polynomial has no diagram");

    Json out;
    out["input"] = nearirr::format_polynomial(f);
    const Json diagram = nearirr::diagram_json(f);
    out["diagram"] = {{"vertices", diagram["vertices"]},
                      {"doubled_area", diagram["doubled_area"]}};
    out["edges"] = diagram["edges"];

    if (!svg_path.empty()) {
        const nearirr::LatticePolygon poly = nearirr::newton_diagram(f);
        const std::string svg =
            nearirr::render_svg(poly, nearirr::edges_of(poly), f.support(), {});
        std::ofstream file(svg_path);
        if (!file) return emit_error("usage", "cannot write SVG file: " + svg_path, kExitUsage);
        file << svg;
        out["svg"] = svg_path;
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

nearirr::WeightVector parse_weight(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw nearirr::DomainError("weight must be given as p,q");
    try {
        const std::int64_t p = std::stoll(spec.substr(0, comma));
        const std::int64_t q = std::stoll(spec.substr(comma + 1));
        return nearirr::primitive_weight(p, q);
    } catch (const nearirr::DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw nearirr::DomainError("weight must be a pair of integers p,q");
    }
}

int run_initform(const std::string& poly_arg, const std::string& weight_spec) {
    const nearirr::Polynomial f =
        nearirr::parse_polynomial(read_single_expression(poly_arg));
    if (f.is_zero())
        throw nearirr::DomainError("the zero polynomial has no initial form");
    const nearirr::WeightVector w = parse_weight(weight_spec);
    const nearirr::FacePolynomial fp = nearirr::face_polynomial(f, w);

    Json out;
    out["input"] = nearirr::format_polynomial(f);
    out["weight"] = nearirr::weight_json(w);
    out["d_w"] = nearirr::d_w(f, w);
    out["init"] = nearirr::format_polynomial(nearirr::init_form(f, w));
    Json face;
    face["base"] = nearirr::point_json(fp.base);
    face["step"] = nearirr::point_json(fp.step);
    Json coeffs = Json::array();
    for (const nearirr::Rational& c : fp.phi.coeffs())
        coeffs.push_back(nearirr::rational_to_string(c));
    face["coefficients"] = coeffs;
    out["face_poly"] = face;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int run_nu(const std::string& f_arg, const std::string& g_arg) {
    const nearirr::Polynomial f = nearirr::parse_polynomial(f_arg);
    const nearirr::Polynomial g = nearirr::parse_polynomial(g_arg);
    Json out;
    out["f"] = nearirr::format_polynomial(f);
    out["g"] = nearirr::format_polynomial(g);
    out["nu"] = nearirr::rational_to_string(nearirr::nu_infinity(f, g));
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int run_kb(const std::string& f_arg, const std::string& g_arg) {
    const nearirr::Polynomial f = parse_nonconstant(f_arg);
    const nearirr::Polynomial g = parse_nonconstant(g_arg);
    const nearirr::KBRecord rec = nearirr::kb_verify(f, g);
    Json out;
    out["f"] = nearirr::format_polynomial(f);
    out["g"] = nearirr::format_polynomial(g);
    out.update(nearirr::kb_json(rec));
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int run_factors(const std::string& poly_arg, const std::vector<std::string>& factor_args) {
    const nearirr::Polynomial f = parse_nonconstant(poly_arg);
    std::vector<nearirr::Polynomial> factors;
    factors.reserve(factor_args.size());
    for (const std::string& text : factor_args)
        factors.push_back(nearirr::parse_polynomial(text));

    if (!nearirr::validate_factorization(f, factors))
        throw nearirr::DomainError("factorization does not multiply back to the polynomial");

    Json out;
    out["input"] = nearirr::format_polynomial(f);
    Json flist = Json::array();
    for (const nearirr::Polynomial& p : factors)
        flist.push_back(nearirr::format_polynomial(p));
    out["factors"] = flist;
    out["valid"] = true;

    bool all_meet = true;
    Json pairs = Json::array();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            Json pj;
            pj["g"] = nearirr::format_polynomial(factors[i]);
            pj["h"] = nearirr::format_polynomial(factors[j]);
            const bool shared =
                !nearirr::bivar_gcd(factors[i], factors[j]).is_constant();
            pj["shared_component"] = shared;
            bool meet = shared;
            if (!shared) {
                const std::int64_t sum = nearirr::intersection_sum(factors[i], factors[j]);
                pj["intersection_sum"] = sum;
                meet = sum > 0;
            }
            pj["common_zero"] = meet;
            all_meet = all_meet && meet;
            pairs.push_back(pj);
        }
    }
    out["pairs"] = pairs;
    out["nearly_irreducible_on_factors"] = all_meet;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Near-irreducibility and intersection-bound checker for bivariate "
                 "polynomials over Q"};
    app.require_subcommand(1);

    std::string poly_arg;
    std::string batch_path;
    auto* check = app.add_subcommand(
        "check", "Run the full criterion pipeline and print a JSON report");
    check->add_option("poly", poly_arg, "Polynomial expression (reads stdin if omitted)");
    check->add_option("--batch", batch_path,
                      "File with one polynomial per line; emits JSON Lines");

    std::string dia_poly;
    std::string svg_path;
    auto* diagram =
        app.add_subcommand("diagram", "Print the Newton diagram as JSON");
    diagram->add_option("poly", dia_poly, "Polynomial expression (reads stdin if omitted)");
    diagram->add_option("--svg", svg_path, "Also render the diagram to this SVG file");

    std::string init_poly;
    std::string weight_spec;
    auto* initform = app.add_subcommand(
        "initform", "Print the initial form and face polynomial for a weight");
    initform->add_option("poly", init_poly, "Polynomial expression (reads stdin if omitted)");
    initform->add_option("-w,--weight", weight_spec, "Weight vector p,q")->required();

    std::string nu_f, nu_g;
    auto* nu = app.add_subcommand("nu", "Print the area defect of a pair");
    nu->add_option("f", nu_f, "First polynomial")->required();
    nu->add_option("g", nu_g, "Second polynomial")->required();

    std::string kb_f, kb_g;
    auto* kb = app.add_subcommand(
        "kb", "Compare the intersection count of a coprime pair with its area bound");
    kb->add_option("f", kb_f, "First polynomial")->required();
    kb->add_option("g", kb_g, "Second polynomial")->required();

    std::string fac_poly;
    std::vector<std::string> fac_factors;
    auto* factors = app.add_subcommand(
        "factors", "Validate a factorization and test pairwise common zeros");
    factors->add_option("poly", fac_poly, "The product polynomial")->required();
    factors->add_option("factor", fac_factors, "Its factors")->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what(), kExitUsage);
    }

    try {
        if (check->parsed()) return run_check(poly_arg, batch_path);
        if (diagram->parsed()) return run_diagram(dia_poly, svg_path);
        if (initform->parsed()) return run_initform(init_poly, weight_spec);
        if (nu->parsed()) return run_nu(nu_f, nu_g);
        if (kb->parsed()) return run_kb(kb_f, kb_g);
        if (factors->parsed()) return run_factors(fac_poly, fac_factors);
    } catch (...) {
        return handle_failure(std::current_exception());
    }
    return emit_error("usage", "no subcommand given", kExitUsage);
}
