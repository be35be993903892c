#include "polyexp/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <regex>

#include "polyexp/checks.hpp"
#include "polyexp/composition.hpp"
#include "polyexp/constants.hpp"
#include "polyexp/error.hpp"
#include "polyexp/integrals.hpp"
#include "polyexp/oracle.hpp"
#include "polyexp/series.hpp"

namespace polyexp::cli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "polyexp/1";

std::string fmt17(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// nlohmann prints the shortest round-trip form; numbers go in as tagged
// strings and are spliced back with 17 significant digits after dump().
std::string num(double x) { return "@@" + (std::isfinite(x) ? fmt17(x) : std::string("null")) + "@@"; }

std::string dump(const ordered_json& j) {
    static const std::regex tagged("\"@@([^@\"]*)@@\"");
    return std::regex_replace(j.dump(2), tagged, "$1");
}

ordered_json complex_json(Complex z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

double parse_double(std::string_view t) {
    if (t.empty()) throw ParseError("empty number");
    if (t.front() == '+') t.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw ParseError("not a number: " + std::string(t));
    return v;
}

enum class Format { Json, Csv, Human };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"human", Format::Human}};

bool meets(const EvalResult& r, double tol) {
    return r.converged && (r.abs_error == 0 || r.abs_error <= tol * std::abs(r.value));
}

struct EvalRequest {
    std::string fn;
    std::string index;
    std::string z;
    double tol = 1e-10;
    std::string method = "auto";
    std::optional<int> n_opt;
    Format format = Format::Json;
};

int do_eval(const EvalRequest& q, std::ostream& out) {
    const Composition s = Composition::parse(q.index);
    const Complex z = parse_complex(q.z);
    if (!(q.tol > 0)) throw ParseError("--tol must be positive");
    EvalResult r;
    if (q.fn == "el" || q.fn == "EL") {
        if (q.method != "auto" && q.method != "taylor")
            throw DomainError(q.fn + " is only evaluated by its Taylor series");
        r = q.fn == "el" ? el_eval(s, z) : EL_eval(s, z);
    } else {
        if (z == Complex(0.0, 0.0)) throw DomainError("ELi has a logarithmic singularity at z = 0");
        if (q.method == "auto") {
            ELiOptions opt;
            opt.tol = q.tol;
            r = ELi_eval(s, z, opt);
        } else if (q.method == "asymptotic") {
            r = ELi_asymptotic(s, z, q.n_opt);
        } else if (q.method == "relation") {
            r = ELi_relation_eval(s, z);
        } else if (q.method == "quadrature") {
            if (z.imag() != 0) throw DomainError("the quadrature oracle takes real z < 0");
            r = quad_defining_ELi(s, z.real());
        } else {
            throw DomainError("ELi has no method " + q.method);
        }
    }
    const bool ok = meets(r, q.tol);
    switch (q.format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = kSchema;
            j["command"] = "eval";
            j["fn"] = q.fn;
            j["index"] = s.to_string();
            j["z"] = complex_json(z);
            j["value"] = complex_json(r.value);
            j["abs_error"] = num(r.abs_error);
            j["method"] = to_string(r.method);
            j["terms_used"] = r.terms_used;
            j["converged"] = r.converged;
            j["tol"] = num(q.tol);
            j["meets_tol"] = ok;
            out << dump(j) << "\n";
            break;
        }
        case Format::Csv:
            out << "fn,index,z_re,z_im,value_re,value_im,abs_error,method,terms_used,converged,meets_tol\n";
            out << q.fn << "," << csv_field(s.to_string()) << "," << fmt17(z.real()) << "," << fmt17(z.imag()) << ","
                << fmt17(r.value.real()) << "," << fmt17(r.value.imag()) << "," << fmt17(r.abs_error) << ","
                << to_string(r.method) << "," << r.terms_used << "," << (r.converged ? "true" : "false") << ","
                << (ok ? "true" : "false") << "\n";
            break;
        case Format::Human:
            out << q.fn << "_{" << s.to_string() << "}(" << fmt17(z.real()) << (z.imag() < 0 ? "" : "+")
                << fmt17(z.imag()) << "i) = " << fmt17(r.value.real()) << (r.value.imag() < 0 ? " - " : " + ")
                << fmt17(std::abs(r.value.imag())) << "i\n  abs_error " << fmt17(r.abs_error) << ", method "
                << to_string(r.method) << ", terms " << r.terms_used << (ok ? "" : ", tolerance NOT met") << "\n";
            break;
    }
    return ok ? kOk : kCheckFailure;
}

int do_coeffs(const std::string& index, int N, Format format, std::ostream& out) {
    const Composition s = Composition::parse(index);
    if (N < 1) throw DomainError("--N must be >= 1");
    const auto rec = asymptotic_coeffs_recurrence(s, N);
    const auto closed = asymptotic_coeffs_closed(s, N);
    const auto rows = coefficient_rows(rec);
    const auto closed_rows = coefficient_rows(closed);
    bool all = true;
    for (int j = 1; j <= N; ++j) all = all && rec.c(j) == closed.c(j);
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = kSchema;
            j["command"] = "coeffs";
            j["index"] = s.to_string();
            j["parity"] = to_string(rec.parity);
            j["start_index"] = asymptotic_start_index(s);
            j["rows"] = ordered_json::array();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                j["rows"].push_back({{"j", rows[i].j},
                                     {"numerator", rows[i].numerator},
                                     {"denominator", rows[i].denominator},
                                     {"closed_numerator", closed_rows[i].numerator},
                                     {"closed_denominator", closed_rows[i].denominator},
                                     {"match", rec.c(rows[i].j) == closed.c(rows[i].j)}});
            }
            j["all_match"] = all;
            out << dump(j) << "\n";
            break;
        }
        case Format::Csv:
            out << "j,numerator,denominator,closed_numerator,closed_denominator,match\n";
            for (std::size_t i = 0; i < rows.size(); ++i)
                out << rows[i].j << "," << rows[i].numerator << "," << rows[i].denominator << ","
                    << closed_rows[i].numerator << "," << closed_rows[i].denominator << ","
                    << (rec.c(rows[i].j) == closed.c(rows[i].j) ? "true" : "false") << "\n";
            break;
        case Format::Human:
            out << "ELi_{" << s.to_string() << "} asymptotic coefficients (" << to_string(rec.parity) << ")\n";
            for (std::size_t i = 0; i < rows.size(); ++i)
                out << "  c_" << rows[i].j << " = " << to_string(rec.c(rows[i].j))
                    << (rec.c(rows[i].j) == closed.c(rows[i].j) ? "" : "   MISMATCH closed form " +
                                                                         to_string(closed.c(rows[i].j)))
                    << "\n";
            break;
    }
    return all ? kOk : kCheckFailure;
}

struct ConstantRow {
    std::string name;
    ConstantValue v;
};

int do_constants(int max_weight, const std::string& kind, Format format, std::ostream& out) {
    if (max_weight < 1) throw DomainError("--max-weight must be >= 1");
    std::vector<ConstantRow> rows;
    if (kind == "all" || kind == "basic") {
        rows.push_back({"gamma", euler_gamma()});
        for (int k = 1; k <= max_weight; ++k)
            rows.push_back({"gamma_deriv_at_one(" + std::to_string(k) + ")", gamma_deriv_at_one(k)});
    }
    if (kind == "all" || kind == "mzv")
        for (const auto& s : compositions_up_to_weight(max_weight))
            if (s.front() >= 2) rows.push_back({"zeta(" + s.to_string() + ")", mzv(s)});
    if (kind == "all" || kind == "cLi")
        for (const auto& s : compositions_up_to_weight(max_weight))
            if (s.level() >= 2) rows.push_back({"cLi(" + s.to_string() + ")", cLi_constant(s)});
    if (rows.empty()) throw DomainError("unknown constant kind " + kind);
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = kSchema;
            j["command"] = "constants";
            j["entries"] = ordered_json::array();
            for (const auto& r : rows)
                j["entries"].push_back({{"name", r.name},
                                        {"value", num(r.v.value)},
                                        {"abs_error", num(r.v.abs_error)},
                                        {"provenance", to_string(r.v.provenance)}});
            out << dump(j) << "\n";
            break;
        }
        case Format::Csv:
            out << "name,value,abs_error,provenance\n";
            for (const auto& r : rows)
                out << csv_field(r.name) << "," << fmt17(r.v.value) << "," << fmt17(r.v.abs_error) << ","
                    << to_string(r.v.provenance) << "\n";
            break;
        case Format::Human:
            for (const auto& r : rows)
                out << r.name << " = " << fmt17(r.v.value) << "  (+- " << fmt17(r.v.abs_error) << ", "
                    << to_string(r.v.provenance) << ")\n";
            break;
    }
    return kOk;
}

int report(const std::string& command, const std::vector<CheckResult>& checks, Format format, std::ostream& out) {
    int failed = 0;
    for (const auto& c : checks) failed += !c.passed;
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = kSchema;
            j["command"] = command;
            j["checks"] = ordered_json::array();
            for (const auto& c : checks)
                j["checks"].push_back({{"group", c.group},
                                       {"name", c.name},
                                       {"passed", c.passed},
                                       {"measured", num(c.measured)},
                                       {"tolerance", num(c.tolerance)},
                                       {"detail", c.detail}});
            j["passed"] = static_cast<int>(checks.size()) - failed;
            j["failed"] = failed;
            out << dump(j) << "\n";
            break;
        }
        case Format::Csv:
            out << "group,name,passed,measured,tolerance,detail\n";
            for (const auto& c : checks)
                out << c.group << "," << csv_field(c.name) << "," << (c.passed ? "true" : "false") << ","
                    << fmt17(c.measured) << "," << fmt17(c.tolerance) << "," << csv_field(c.detail) << "\n";
            break;
        case Format::Human:
            for (const auto& c : checks)
                out << (c.passed ? "PASS " : "FAIL ") << c.group << "  " << c.name << "  measured "
                    << fmt17(c.measured) << " tol " << fmt17(c.tolerance) << (c.detail.empty() ? "" : "  " + c.detail)
                    << "\n";
            out << checks.size() - failed << " passed, " << failed << " failed\n";
            break;
    }
    return failed ? kCheckFailure : kOk;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty complex number");
    if (t.back() != 'i' && t.back() != 'j') return {parse_double(t), 0.0};
    t.pop_back();
    // split before the last sign that is not an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            cut = k;
            break;
        }
    std::string re = cut == std::string::npos ? "" : t.substr(0, cut);
    std::string im = cut == std::string::npos ? t : t.substr(cut);
    double imv;
    if (im.empty() || im == "+")
        imv = 1;
    else if (im == "-")
        imv = -1;
    else
        imv = parse_double(im);
    return {re.empty() ? 0.0 : parse_double(re), imv};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple polyexponential functions and integrals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kSchema));
    Format format = Format::Json;
    app.add_option("--format", format, "json, csv or human")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->capture_default_str();

    EvalRequest eq;
    auto* eval = app.add_subcommand("eval", "evaluate el, EL or ELi at one point");
    eval->add_option("--fn", eq.fn, "el, EL or ELi")->required()->check(CLI::IsMember({"el", "EL", "ELi"}));
    eval->add_option("--index", eq.index, "comma separated, e.g. 2,1")->required();
    eval->add_option("--z", eq.z, "complex point a+bi; quote negative values")->required();
    eval->add_option("--tol", eq.tol, "relative tolerance")->capture_default_str();
    eval->add_option("--method", eq.method, "auto, taylor, asymptotic, relation or quadrature")
        ->check(CLI::IsMember({"auto", "taylor", "asymptotic", "relation", "quadrature"}))
        ->capture_default_str();
    eval->add_option("--N", eq.n_opt, "truncation order for --method asymptotic");

    std::string coeff_index;
    int coeff_n = 12;
    auto* coeffs = app.add_subcommand("coeffs", "asymptotic coefficient table from both derivations");
    coeffs->add_option("--index", coeff_index, "comma separated")->required();
    coeffs->add_option("--N", coeff_n, "number of coefficients")->capture_default_str();

    int const_weight = 4;
    std::string const_kind = "all";
    auto* constants = app.add_subcommand("constants", "gamma derivatives, MZVs and cLi constants");
    constants->add_option("--max-weight", const_weight)->capture_default_str();
    constants->add_option("--kind", const_kind)->check(CLI::IsMember({"all", "basic", "mzv", "cLi"}))->capture_default_str();

    bool id_alpha = false, id_appendix = false;
    int id_max = 4, id_m_max = 12, id_weight = 4;
    double id_tol = 1e-10;
    auto* identities = app.add_subcommand("identities", "quadratic identities and exact harmonic identities");
    identities->add_flag("--alpha", id_alpha, "alpha tables and quadratic residuals");
    identities->add_flag("--appendix", id_appendix, "exact harmonic-number identities");
    identities->add_option("--max", id_max, "largest n of the (m,n) sweep")->capture_default_str();
    identities->add_option("--m-max", id_m_max, "largest m of the harmonic sweep")->capture_default_str();
    identities->add_option("--weight-max", id_weight, "largest index weight of the harmonic sweep")->capture_default_str();
    identities->add_option("--tol", id_tol, "residual tolerance")->capture_default_str();

    int verify_weight = 4;
    auto* verify = app.add_subcommand("verify", "quadrature and finite-difference cross-checks");
    verify->add_option("--max-weight", verify_weight)->capture_default_str();

    for (auto* sub : {eval, coeffs, constants, identities, verify})
        sub->add_option("--format", format, "json, csv or human")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kSchema << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseFailure;
    }

    try {
        if (*eval) {
            eq.format = format;
            return do_eval(eq, out);
        }
        if (*coeffs) return do_coeffs(coeff_index, coeff_n, format, out);
        if (*constants) return do_constants(const_weight, const_kind, format, out);
        if (*identities) {
            if (!id_alpha && !id_appendix) id_alpha = id_appendix = true;
            std::vector<CheckResult> checks;
            if (id_alpha) checks = quadratic_identity_checks(id_max, id_tol);
            if (id_appendix) {
                auto more = appendix_identity_checks(id_m_max, id_weight);
                checks.insert(checks.end(), more.begin(), more.end());
            }
            return report("identities", checks, format, out);
        }
        if (*verify) return report("verify", oracle_checks(verify_weight), format, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainFailure;
    } catch (const RegimeError& e) {
        err << "regime error: " << e.what() << " (achieved " << fmt17(e.achieved_error()) << ")\n";
        return kCheckFailure;
    } catch (const QuadratureError& e) {
        err << "quadrature error: " << e.what() << " (achieved " << fmt17(e.achieved_error()) << ")\n";
        return kCheckFailure;
    }
    return kParseFailure;
}

}  // namespace polyexp::cli
