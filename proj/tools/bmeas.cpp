#include "bmeas/corollary.hpp"
#include "bmeas/entire.hpp"
#include "bmeas/format.hpp"
#include "bmeas/hessenberg.hpp"
#include "bmeas/integrands.hpp"
#include "bmeas/legendre.hpp"
#include "bmeas/measure.hpp"
#include "bmeas/oracle.hpp"
#include "bmeas/qpoly.hpp"
#include "bmeas/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace bmeas;

// Flag-level problems exit 2; anything a module throws during the actual
// computation exits 1 with the module's message.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const std::string& format) {
    if (format == "json") {
        nlohmann::json out;
        out["command"] = t.command;
        auto rows = nlohmann::json::array();
        for (const auto& r : t.rows) {
            nlohmann::json row = nlohmann::json::object();
            for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = r[c];
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
        return;
    }
    const auto line = [](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += ',';
            s += cells[c];
        }
        return s;
    };
    std::cout << line(t.columns) << "\n";
    for (const auto& r : t.rows) std::cout << line(r) << "\n";
}

ParsedNumber parse_arg(const std::string& text, const char* flag) {
    try {
        return parse_number(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

double real_arg(const std::string& text, const char* flag) {
    const ParsedNumber v = parse_arg(text, flag);
    if (v.kind == ParsedNumber::Kind::complex) throw UsageError(std::string(flag) + " must be real");
    return v.cplx.real();
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

int env_precision_digits() {
    const char* s = std::getenv("BMEAS_PRECISION_DIGITS");
    if (s == nullptr || *s == '\0') return EvalConfig{}.precision_digits;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 34) throw UsageError("BMEAS_PRECISION_DIGITS must be an integer in [1, 34]");
    return static_cast<int>(v);
}

EvalConfig env_config() {
    EvalConfig cfg;
    cfg.precision_digits = env_precision_digits();
    return cfg;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Table run_moments(const std::string& p_text, int n, const std::string& method) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    if (method != "recurrence" && method != "det") throw UsageError("--method must be recurrence or det");
    const ParsedNumber p = parse_arg(p_text, "--p");
    if (p.kind == ParsedNumber::Kind::complex) throw UsageError("--p must be rational or real for moments");
    Table t{"moments", {"k", "j"}, {}};
    if (p.kind == ParsedNumber::Kind::rational) {
        if (method == "recurrence") {
            const auto j = moments_recurrence(p.rat, n);
            for (int k = 0; k <= n; ++k)
                t.rows.push_back({std::to_string(k), format_rational(j[static_cast<std::size_t>(k)])});
        } else {
            const PascalForm form = p.rat == 1 ? PascalForm::regularized : PascalForm::compact;
            for (int k = 0; k <= n; ++k)
                t.rows.push_back({std::to_string(k), format_rational(moment_det(form, k, p.rat))});
        }
    } else {
        const double pd = p.cplx.real();
        if (method == "recurrence") {
            const auto j = moments_double(pd, n);
            for (int k = 0; k <= n; ++k)
                t.rows.push_back({std::to_string(k), format_double(j[static_cast<std::size_t>(k)])});
        } else {
            const PascalForm form = pd == 1.0 ? PascalForm::regularized : PascalForm::compact;
            for (int k = 0; k <= n; ++k)
                t.rows.push_back({std::to_string(k), format_double(moment_det(form, k, pd))});
        }
    }
    return t;
}

template <class T>
T integrate_one(const std::string& method, const Polynomial<T>& r, const T& p) {
    if (method == "moments") return integrate_poly_via_moments(r, p);
    if (method == "det3") return integrate_polynomial_det(PascalForm::compact, r, p);
    return integrate_polynomial_det(PascalForm::regularized, r, p);
}

Table run_integrate(const std::string& p_text, const std::string& poly_text, const std::string& method) {
    if (method != "moments" && method != "det3" && method != "det104")
        throw UsageError("--method must be moments, det3 or det104");
    const ParsedNumber p = parse_arg(p_text, "--p");
    std::vector<ParsedNumber> coeffs;
    for (const auto& tok : split_list(poly_text)) coeffs.push_back(parse_arg(tok, "--poly"));
    bool any_complex = p.kind == ParsedNumber::Kind::complex;
    bool all_rational = p.kind == ParsedNumber::Kind::rational;
    for (const auto& c : coeffs) {
        any_complex = any_complex || c.kind == ParsedNumber::Kind::complex;
        all_rational = all_rational && c.kind == ParsedNumber::Kind::rational;
    }
    Table t{"integrate", {"value"}, {}};
    if (all_rational) {
        std::vector<Rational> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].rat;
        t.rows.push_back({format_rational(integrate_one(method, Polynomial<Rational>(std::move(c)), p.rat))});
    } else if (any_complex) {
        std::vector<Complex> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].cplx;
        t.rows.push_back({format_complex(integrate_one(method, Polynomial<Complex>(std::move(c)), p.cplx))});
    } else {
        std::vector<double> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].cplx.real();
        t.rows.push_back({format_double(integrate_one(method, Polynomial<double>(std::move(c)), p.cplx.real()))});
    }
    return t;
}

Table run_eval(const std::string& p_text, const std::string& w_text, const std::string& method, bool tol_set,
               double tol) {
    EvalConfig cfg = env_config();
    if (tol_set) {
        if (!(tol > 0.0)) throw UsageError("--tol must be positive");
        cfg.product_tol = tol;
    }
    const ComplexPoint pt{parse_arg(p_text, "--p").cplx, parse_arg(w_text, "--omega").cplx};
    Complex v;
    if (method == "product") {
        v = ip_product(pt, cfg);
    } else if (method == "taylor") {
        v = ip_taylor(pt, cfg);
    } else if (method == "reduce") {
        v = ip_reduce(pt, cfg);
    } else if (method == "logseries") {
        v = std::exp(log_series_eval(pt.p, pt.omega, 60));
    } else {
        throw UsageError("--method must be product, taylor, reduce or logseries");
    }
    return {"eval", {"value"}, {{format_complex(v)}}};
}

Table run_fourier(const std::string& p_text, long k) {
    const Complex c = fourier_coefficient(parse_arg(p_text, "--p").cplx, k, env_config());
    return {"fourier", {"k", "re", "im"}, {{std::to_string(k), format_double(c.real()), format_double(c.imag())}}};
}

Table run_legendre(const std::string& p_text, int n) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    const ParsedNumber p = parse_arg(p_text, "--p");
    if (p.kind == ParsedNumber::Kind::complex) throw UsageError("--p must be rational or real for legendre");
    const double norm = legendre_normalizer(n);
    Table t{"legendre", {"n", "exact_part", "normalizer", "value"}, {}};
    if (p.kind == ParsedNumber::Kind::rational) {
        const Rational e = legendre_coeff_exact_part(p.rat, n);
        t.rows.push_back({std::to_string(n), format_rational(e), format_double(norm),
                          format_double(scalar_from_rational<double>(e) * norm)});
    } else {
        const double e = legendre_coeff_exact_part(p.cplx.real(), n);
        t.rows.push_back({std::to_string(n), format_double(e), format_double(norm), format_double(e * norm)});
    }
    return t;
}

Table run_qpoly(int n, bool roots) {
    if (n < 1) throw UsageError("--n must be >= 1");
    const Polynomial<BigInt>& q = q_polynomial(n);
    std::string joined;
    for (std::size_t k = 0; k < q.coeffs.size(); ++k) {
        if (k) joined += ';';
        joined += format_bigint(q.coeffs[k]);
    }
    Table t{"qpoly", {"n", "coefficients"}, {}};
    std::vector<std::string> row{std::to_string(n), joined};
    if (roots) {
        t.columns.insert(t.columns.end(), {"root_count", "all_simple"});
        const RootCertificate cert = root_certificate({n, q});
        row.push_back(std::to_string(cert.root_count_in_unit_interval));
        row.push_back(bool_name(cert.all_simple));
    }
    t.rows.push_back(std::move(row));
    return t;
}

Table run_corollary(const std::string& which, const std::string& p_text, const std::string& w_text,
                    const std::string& alpha_text, int terms) {
    if (which != "exp" && which != "log" && which != "pow") throw UsageError("--which must be exp, log or pow");
    if (terms < 1) throw UsageError("--terms must be >= 1");
    const ParsedNumber p = parse_arg(p_text, "--p");
    const ParsedNumber w = parse_arg(w_text, "--omega");
    const bool is_pow = which == "pow";
    ParsedNumber a;
    if (is_pow) {
        if (alpha_text.empty()) throw UsageError("--alpha is required when --which pow");
        a = parse_arg(alpha_text, "--alpha");
    }
    const bool any_complex = p.kind == ParsedNumber::Kind::complex || w.kind == ParsedNumber::Kind::complex ||
                             (is_pow && a.kind == ParsedNumber::Kind::complex);
    const bool all_rational = p.kind == ParsedNumber::Kind::rational && w.kind == ParsedNumber::Kind::rational &&
                              (!is_pow || a.kind == ParsedNumber::Kind::rational);
    Table t{"corollary", {"value"}, {}};
    if (all_rational) {
        const Rational v = which == "exp"   ? exp_integral_series(p.rat, w.rat, terms)
                           : which == "log" ? log_integral_series(p.rat, w.rat, terms)
                                            : power_integral_series(p.rat, w.rat, a.rat, terms);
        t.rows.push_back({format_rational(v)});
    } else if (any_complex) {
        const Complex v = which == "exp"   ? exp_integral_series(p.cplx, w.cplx, terms)
                          : which == "log" ? log_integral_series(p.cplx, w.cplx, terms)
                                           : power_integral_series(p.cplx, w.cplx, a.cplx, terms);
        t.rows.push_back({format_complex(v)});
    } else {
        const double pd = p.cplx.real(), wd = w.cplx.real();
        const double v = which == "exp"   ? exp_integral_series(pd, wd, terms)
                         : which == "log" ? log_integral_series(pd, wd, terms)
                                          : power_integral_series(pd, wd, a.cplx.real(), terms);
        t.rows.push_back({format_double(v)});
    }
    return t;
}

int run_verify(const std::string& suite, const std::string& grid, const std::string& format) {
    if (grid != "default") throw UsageError("--grid supports only 'default'");
    bool known = suite == "all";
    for (const auto& name : identity_suite_names()) known = known || name == suite;
    if (!known) throw UsageError("--suite must be one of functional, symmetry, reciprocal, split, remark1, all");
    const SuiteReport rep = run_identity_suite(suite, env_config());
    Table t{"verify", {"suite", "p", "omega", "m", "residual", "tolerance", "pass"}, {}};
    for (const auto& row : rep.rows) {
        t.rows.push_back({row.suite, format_complex(row.p), format_complex(row.omega), std::to_string(row.m_terms),
                          format_double(row.residual), format_double(row.tolerance), bool_name(row.pass)});
    }
    emit(t, format);
    return rep.all_pass ? 0 : 1;
}

Integrand cli_integrand(const std::string& name, double omega, double alpha) {
    try {
        return make_integrand(name, omega, alpha);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());  // unknown family or bad exponent is a flag problem
    }
}

Table run_oracle(const std::string& f_name, const std::string& p_text, int depth, const std::string& w_text,
                 const std::string& alpha_text) {
    const double p = real_arg(p_text, "--p");
    const Integrand fn = cli_integrand(f_name, real_arg(w_text, "--omega"), real_arg(alpha_text, "--alpha"));
    const double budget = fn.lipschitz >= 0.0 ? fn.lipschitz * std::ldexp(1.0, -depth - 1) : -1.0;
    const DyadicResult r = dyadic_integrate(fn.f, p, depth, budget);
    return {"oracle",
            {"value", "error_bound", "bound_estimated"},
            {{format_double(r.value), format_double(r.error_bound), bool_name(r.bound_estimated)}}};
}

Table run_oracle_mc(const std::string& f_name, const std::string& p_text, std::uint64_t samples, std::uint64_t seed,
                    int digits, const std::string& w_text, const std::string& alpha_text) {
    if (samples == 0) throw UsageError("--samples must be >= 1");
    if (digits < 1 || digits > 64) throw UsageError("--digits must be in [1, 64]");
    const double p = real_arg(p_text, "--p");
    const Integrand fn = cli_integrand(f_name, real_arg(w_text, "--omega"), real_arg(alpha_text, "--alpha"));
    const McResult r = mc_integrate(fn.f, p, samples, seed, digits);
    return {"oracle-mc",
            {"value", "std_error", "samples", "seed"},
            {{format_double(r.value), format_double(r.std_error), std::to_string(r.samples), std::to_string(r.seed)}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrals against the binary digit measure mu_p"};
    app.require_subcommand(1);

    std::string format = "csv";
    const auto with_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format: csv (default) or json");
        return sub;
    };

    std::string mo_p, mo_method = "recurrence";
    int mo_n = 0;
    auto* mo = with_format(app.add_subcommand("moments", "moments J_0..J_n of mu_p"));
    mo->add_option("--p", mo_p, "measure parameter (rational a/b or float)")->required();
    mo->add_option("--n", mo_n, "highest moment order")->required();
    mo->add_option("--method", mo_method, "recurrence (default) or det");

    std::string in_p, in_poly, in_method = "moments";
    auto* in = with_format(app.add_subcommand("integrate", "integral of a polynomial against mu_p"));
    in->add_option("--p", in_p, "measure parameter")->required();
    in->add_option("--poly", in_poly, "coefficients r0,r1,... (ascending)")->required();
    in->add_option("--method", in_method, "moments (default), det3 or det104");

    std::string ev_p, ev_w, ev_method = "product";
    double ev_tol = 0.0;
    auto* ev = with_format(app.add_subcommand("eval", "entire function I_p(omega)"));
    ev->add_option("--p", ev_p, "measure parameter (may be complex)")->required();
    ev->add_option("--omega", ev_w, "argument (may be complex)")->required();
    ev->add_option("--method", ev_method, "product (default), taylor, reduce or logseries");
    auto* ev_tol_opt = ev->add_option("--tol", ev_tol, "product truncation tolerance");

    std::string fo_p;
    long fo_k = 0;
    auto* fo = with_format(app.add_subcommand("fourier", "trigonometric coefficient I_p(2 pi i k)"));
    fo->add_option("--p", fo_p, "measure parameter")->required();
    fo->add_option("--k", fo_k, "frequency index")->required();

    std::string le_p;
    int le_n = 0;
    auto* le = with_format(app.add_subcommand("legendre", "shifted Legendre coefficient of mu_p"));
    le->add_option("--p", le_p, "measure parameter (rational or float)")->required();
    le->add_option("--n", le_n, "polynomial index")->required();

    int qp_n = 0;
    bool qp_roots = false;
    auto* qp = with_format(app.add_subcommand("qpoly", "log-derivative polynomial Q_n"));
    qp->add_option("--n", qp_n, "index (>= 1)")->required();
    qp->add_flag("--roots", qp_roots, "append the Sturm root certificate");

    std::string co_which, co_p, co_w, co_alpha;
    int co_terms = 0;
    auto* co = with_format(app.add_subcommand("corollary", "truncated transcendental integrals"));
    co->add_option("--which", co_which, "exp, log or pow")->required();
    co->add_option("--p", co_p, "measure parameter")->required();
    co->add_option("--omega", co_w, "argument")->required();
    co->add_option("--alpha", co_alpha, "exponent for --which pow");
    co->add_option("--terms", co_terms, "truncation order (>= 1)")->required();

    std::string ve_suite = "all", ve_grid = "default";
    auto* ve = with_format(app.add_subcommand("verify", "identity residual suite"));
    ve->add_option("--suite", ve_suite, "functional, symmetry, reciprocal, split, remark1 or all (default)");
    ve->add_option("--grid", ve_grid, "evaluation grid (only 'default')");

    std::string or_f, or_p, or_w = "1", or_alpha = "1/2";
    int or_depth = 0;
    auto* orc = with_format(app.add_subcommand("oracle", "brute-force dyadic quadrature"));
    orc->add_option("--f", or_f, "integrand: x^k, exp, log1m or pow")->required();
    orc->add_option("--p", or_p, "measure parameter (real)")->required();
    orc->add_option("--depth", or_depth, "cylinder depth (cost 2^depth)")->required();
    orc->add_option("--omega", or_w, "integrand parameter (default 1)");
    orc->add_option("--alpha", or_alpha, "pow exponent (default 1/2)");

    std::string mc_f, mc_p, mc_w = "1", mc_alpha = "1/2";
    std::uint64_t mc_samples = 0, mc_seed = 1;
    int mc_digits = 53;
    auto* mc = with_format(app.add_subcommand("oracle-mc", "Monte Carlo oracle over digit draws"));
    mc->add_option("--f", mc_f, "integrand: x^k, exp, log1m or pow")->required();
    mc->add_option("--p", mc_p, "measure parameter in (0,1)")->required();
    mc->add_option("--samples", mc_samples, "number of draws")->required();
    mc->add_option("--seed", mc_seed, "mt19937_64 seed (default 1)");
    mc->add_option("--digits", mc_digits, "bits per draw (default 53)");
    mc->add_option("--omega", mc_w, "integrand parameter (default 1)");
    mc->add_option("--alpha", mc_alpha, "pow exponent (default 1/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
        if (mo->parsed()) {
            emit(run_moments(mo_p, mo_n, mo_method), format);
        } else if (in->parsed()) {
            emit(run_integrate(in_p, in_poly, in_method), format);
        } else if (ev->parsed()) {
            emit(run_eval(ev_p, ev_w, ev_method, ev_tol_opt->count() > 0, ev_tol), format);
        } else if (fo->parsed()) {
            emit(run_fourier(fo_p, fo_k), format);
        } else if (le->parsed()) {
            emit(run_legendre(le_p, le_n), format);
        } else if (qp->parsed()) {
            emit(run_qpoly(qp_n, qp_roots), format);
        } else if (co->parsed()) {
            emit(run_corollary(co_which, co_p, co_w, co_alpha, co_terms), format);
        } else if (ve->parsed()) {
            return run_verify(ve_suite, ve_grid, format);
        } else if (orc->parsed()) {
            emit(run_oracle(or_f, or_p, or_depth, or_w, or_alpha), format);
        } else if (mc->parsed()) {
            emit(run_oracle_mc(mc_f, mc_p, mc_samples, mc_seed, mc_digits, mc_w, mc_alpha), format);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
