#include "logint/basis.hpp"
#include "logint/catalog.hpp"
#include "logint/oracle.hpp"
#include "logint/reduce.hpp"
#include "logint/specfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace logint;

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const char* kind_name(reduce::CallKind k) {
    switch (k) {
        case reduce::CallKind::H1: return "h1";
        case reduce::CallKind::H2: return "h2";
        case reduce::CallKind::PolyLogPiece: return "poly_log_piece";
        case reduce::CallKind::ElementaryRational: return "elementary-rational";
        case reduce::CallKind::ElementaryArctan: return "elementary-arctan";
        case reduce::CallKind::ElementaryLog: return "elementary-log";
    }
    return "?";
}

catalog::ParamMap parse_params(const std::vector<std::string>& kvs) {
    catalog::ParamMap m;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::domain_error("--param expects name=value, got '" + kv + "'");
        m[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return m;
}

reduce::Upper parse_upper(const std::string& s) {
    if (s == "inf" || s == "infinity") return reduce::Upper::inf();
    const auto slash = s.find('/');
    if (slash != std::string::npos)
        return reduce::Upper::finite(std::stod(s.substr(0, slash)) /
                                     std::stod(s.substr(slash + 1)));
    return reduce::Upper::finite(std::stod(s));
}

std::string params_brief(const catalog::CatalogEntry& e) {
    std::string s;
    for (const auto& p : e.params) {
        if (!s.empty()) s += ",";
        s += p.name;
    }
    return s;
}

int cmd_list(bool json) {
    if (json) {
        std::cout << catalog::export_json();
        return 0;
    }
    std::printf("%-24s %-8s %s\n", "ID", "PARAMS", "DESCRIPTION");
    for (const auto& e : catalog::entries())
        std::printf("%-24s %-8s %s\n", e.id.c_str(), params_brief(e).c_str(),
                    e.description.c_str());
    return 0;
}

int cmd_show(const std::string& id) {
    const auto& e = catalog::lookup(id);
    std::cout << "id:          " << e.id << "\n";
    std::cout << "description: " << e.description << "\n";
    if (!e.params.empty()) {
        std::cout << "params:     ";
        for (const auto& p : e.params)
            std::cout << " " << p.name << " = " << fmt15(p.default_value) << " (" << p.domain
                      << ")";
        std::cout << "\n";
    }
    std::cout << "closed form: " << e.closed_form.to_string() << " = "
              << fmt15(e.closed_form.to_float()) << "\n";
    if (e.printed_value)
        std::cout << "printed:     " << e.printed_value->to_string() << " = "
                  << fmt15(e.printed_value->to_float()) << "\n";
    if (e.erratum_note) std::cout << "erratum:     " << *e.erratum_note << "\n";
    return 0;
}

int cmd_eval(const std::string& id, const std::vector<std::string>& kvs, bool json) {
    const auto& e = catalog::lookup(id);
    catalog::ParamMap p = e.defaults();
    for (const auto& [k, v] : parse_params(kvs)) {
        if (!p.count(k)) throw std::domain_error("entry " + id + " has no parameter '" + k + "'");
        p[k] = v;
    }
    const double v = e.closed_fn(p);
    if (json) {
        nlohmann::ordered_json doc;
        doc["id"] = id;
        doc["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, val] : p) doc["params"][k] = val;
        doc["value"] = v;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << id;
        if (!p.empty()) {
            std::cout << "(";
            bool first = true;
            for (const auto& [k, val] : p) {
                if (!first) std::cout << ", ";
                first = false;
                std::cout << k << "=" << fmt15(val);
            }
            std::cout << ")";
        }
        std::cout << " = " << fmt15(v) << "\n";
    }
    return 0;
}

void print_report(const catalog::VerifyReport& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " closed=" << fmt15(r.closed)
              << " numeric=" << fmt15(r.numeric.value) << " |diff|=" << fmt3(r.abs_diff)
              << " evals=" << r.numeric.n_evals;
    if (r.erratum_flag) {
        std::cout << " [ERRATUM corrected";
        if (r.printed)
            std::cout << "; printed=" << fmt15(*r.printed)
                      << " |printed-numeric|=" << fmt3(*r.printed_diff);
        std::cout << "]";
    }
    if (!r.pass && !r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
}

nlohmann::ordered_json report_json(const catalog::VerifyReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["pass"] = r.pass;
    j["closed"] = r.closed;
    j["numeric"] = r.numeric.value;
    j["abs_diff"] = r.abs_diff;
    j["err_estimate"] = r.numeric.err_estimate;
    j["n_evals"] = r.numeric.n_evals;
    j["converged"] = r.numeric.converged;
    j["erratum"] = r.erratum_flag;
    if (r.printed) {
        j["printed"] = *r.printed;
        j["printed_diff"] = *r.printed_diff;
    }
    return j;
}

int cmd_verify(const std::string& id, bool all, double tol,
               const std::vector<std::string>& kvs, bool json) {
    if (all) {
        const auto s = catalog::verify_all(tol);
        if (json) {
            nlohmann::ordered_json doc;
            doc["tol"] = tol;
            doc["n_pass"] = s.n_pass;
            doc["n_fail"] = s.n_fail;
            doc["n_errata"] = s.n_errata;
            doc["reports"] = nlohmann::ordered_json::array();
            for (const auto& r : s.reports) doc["reports"].push_back(report_json(r));
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& r : s.reports) print_report(r);
            std::cout << "passed " << s.n_pass << "/" << (s.n_pass + s.n_fail)
                      << ", errata flagged " << s.n_errata << "\n";
        }
        return s.n_fail == 0 ? 0 : 1;
    }
    const auto r = catalog::verify_entry(id, parse_params(kvs), tol);
    if (json) {
        nlohmann::ordered_json doc;
        doc["tol"] = tol;
        doc["reports"] = nlohmann::ordered_json::array({report_json(r)});
        std::cout << doc.dump(2) << "\n";
    } else {
        print_report(r);
    }
    return r.pass ? 0 : 1;
}

std::string pf_to_string(const reduce::PartialFractionForm& pf) {
    std::string s;
    auto append = [&s](const std::string& piece) {
        if (!s.empty()) s += " + ";
        s += piece;
    };
    if (!pf.poly_part.is_zero()) append(pf.poly_part.to_string());
    for (const auto& t : pf.linear_terms) {
        if (t.coeff == 0) continue;
        std::string d = "(x+" + logint::to_string(t.a) + ")";
        if (t.k > 1) d += "^" + std::to_string(t.k);
        append("[" + logint::to_string(t.coeff) + "]/" + d);
    }
    for (const auto& t : pf.quad_terms) {
        if (t.p == 0 && t.q == 0) continue;
        std::string d = "(x^2+" + logint::to_string(t.a * t.a) + ")";
        if (t.k > 1) d += "^" + std::to_string(t.k);
        append("[" + logint::to_string(t.p) + "*x + " + logint::to_string(t.q) + "]/" + d);
    }
    return s.empty() ? "0" : s;
}

int cmd_reduce(const std::string& expr, const std::string& upper_text, bool explain_flag,
               bool json) {
    const auto integrand = reduce::parse_integrand(expr);
    const auto upper = parse_upper(upper_text);
    const auto pf = reduce::partial_fractions(integrand);
    const auto bc = reduce::reduce_to_basis(pf, upper);
    const auto val = reduce::evaluate_combination(bc);
    if (json) {
        nlohmann::ordered_json doc;
        doc["input"] = expr;
        doc["upper"] = upper.infinite ? nlohmann::ordered_json("inf")
                                      : nlohmann::ordered_json(upper.b);
        doc["partial_fractions"] = pf_to_string(pf);
        doc["terms"] = nlohmann::ordered_json::array();
        for (const auto& t : bc.terms)
            doc["terms"].push_back({{"weight", t.weight},
                                    {"kind", kind_name(t.kind)},
                                    {"call", t.name},
                                    {"value", t.value}});
        doc["value"] = val.value;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (explain_flag) {
        std::cout << "integrand: " << expr << (integrand.has_log ? "  (with ln x)" : "")
                  << "\n";
        std::cout << "partial fractions: " << pf_to_string(pf)
                  << (integrand.has_log ? "  times ln(x)" : "") << "\n";
        std::cout << reduce::explain(bc);
    } else {
        std::cout << "value = " << fmt15(val.value) << "\n";
    }
    return 0;
}

int cmd_quad(const std::string& expr, const std::string& upper_text, double tol) {
    const auto integrand = reduce::parse_integrand(expr);
    const auto upper = parse_upper(upper_text);
    auto f = oracle::Integrand(
        [&integrand](double x, double, double) { return integrand.eval(x); });
    const auto iv =
        upper.infinite ? oracle::Interval::half_line() : oracle::Interval::finite(0, upper.b);
    const auto r = oracle::integrate(f, iv, tol);
    std::cout << "value = " << fmt15(r.value) << "  err_estimate = " << fmt3(r.err_estimate)
              << "  n_evals = " << r.n_evals << "  converged = " << (r.converged ? "yes" : "no")
              << "\n";
    return r.converged ? 0 : 3;
}

int cmd_constants() {
    std::printf("%-10s %-12s %s\n", "NAME", "SYMBOLIC", "VALUE");
    for (const auto& c : specfun::constants())
        std::printf("%-10s %-12s %s\n", c.name.c_str(), c.symbolic.to_string().c_str(),
                    fmt15(c.value).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed forms, reduction and numerical verification of "
                 "log-rational and log-trigonometric definite integrals"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list catalog entries");
    bool list_json = false;
    list->add_flag("--json", list_json, "emit the registry as JSON");

    auto* show = app.add_subcommand("show", "show one catalog entry");
    std::string show_id;
    show->add_option("id", show_id, "entry id")->required();

    auto* eval = app.add_subcommand("eval", "evaluate an entry's closed form");
    std::string eval_id;
    std::vector<std::string> eval_params;
    bool eval_json = false;
    eval->add_option("id", eval_id, "entry id")->required();
    eval->add_option("--param", eval_params, "parameter as name=value");
    eval->add_flag("--json", eval_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "check closed forms against quadrature");
    std::string verify_id;
    bool verify_all_flag = false, verify_json = false;
    double verify_tol = 1e-10;
    std::vector<std::string> verify_params;
    verify->add_option("id", verify_id, "entry id");
    verify->add_flag("--all", verify_all_flag, "verify every entry at its defaults");
    verify->add_option("--tol", verify_tol, "absolute tolerance");
    verify->add_option("--param", verify_params, "parameter as name=value");
    verify->add_flag("--json", verify_json, "JSON output");

    auto* red = app.add_subcommand("reduce", "reduce an integrand to basis integrals");
    std::string red_expr, red_upper;
    bool red_explain = false, red_json = false;
    red->add_option("expr", red_expr, "integrand, e.g. \"x*ln(x)/((x+1)^2*(x^2+4))\"")
        ->required();
    red->add_option("--upper", red_upper, "upper limit (number or inf)")->required();
    red->add_flag("--explain", red_explain, "print the derivation");
    red->add_flag("--json", red_json, "JSON output");

    auto* quad = app.add_subcommand("quad", "integrate an expression numerically");
    std::string quad_expr, quad_upper;
    double quad_tol = 1e-10;
    quad->add_option("expr", quad_expr, "integrand")->required();
    quad->add_option("--upper", quad_upper, "upper limit (number or inf)")->required();
    quad->add_option("--tol", quad_tol, "absolute tolerance");

    app.add_subcommand("constants", "print the named constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand("list")) return cmd_list(list_json);
        if (app.got_subcommand("show")) return cmd_show(show_id);
        if (app.got_subcommand("eval")) return cmd_eval(eval_id, eval_params, eval_json);
        if (app.got_subcommand("verify")) {
            if (!verify_all_flag && verify_id.empty()) {
                std::cerr << "verify: give an entry id or --all\n";
                return 2;
            }
            return cmd_verify(verify_id, verify_all_flag, verify_tol, verify_params,
                              verify_json);
        }
        if (app.got_subcommand("reduce"))
            return cmd_reduce(red_expr, red_upper, red_explain, red_json);
        if (app.got_subcommand("quad")) return cmd_quad(quad_expr, quad_upper, quad_tol);
        if (app.got_subcommand("constants")) return cmd_constants();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
