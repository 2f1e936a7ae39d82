#include "cli.hpp"

#include "wrightfrac/errors.hpp"
#include "wrightfrac/json_io.hpp"
#include "wrightfrac/series.hpp"
#include "wrightfrac/special_core.hpp"
#include "wrightfrac/transforms.hpp"
#include "wrightfrac/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wrightfrac::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
constexpr double kEvalTol = 1e-15;

/// Bad command-line input detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Params {
    double lambda = kUnset;
    double mu = kUnset;
    double z = kUnset;
    double t = kUnset;
    double nu = kUnset;
    double alpha = kUnset;
    double beta = kUnset;
    double m = kUnset;
    double power = kUnset;
    double tol = kUnset;
    std::string sign = "+";
    std::string format;
    std::string out_path;
    std::string var = "t";
    int order = -1;
    int grid_order = 40;
    std::string mode = "both";
    double coef_tol = kCoefficientTol;
    double grid_tol = kGridTol;
    double t_from = kUnset;
    double t_to = kUnset;
    double x_from = kUnset;
    double x_to = kUnset;
    int points = 25;
    double from = kUnset;
    double to = kUnset;
    int table_points = -1;
    std::string s_list;
};

double need(double v, const char* flag) {
    if (std::isnan(v)) throw UsageError(std::string("missing required option --") + flag);
    return v;
}

double or_default(double v, double fallback) {
    return std::isnan(v) ? fallback : v;
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1" || s == "plus") return 1;
    if (s == "-" || s == "-1" || s == "minus") return -1;
    throw UsageError("--sign must be + or -");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + item + "'");
        }
        if (used != item.size()) throw UsageError("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty --s list");
    return out;
}

const std::vector<std::string> kEvalSelectors = {"wright",   "ml",         "c0",       "besselj",
                                                  "besseli",  "clifford",   "tricomi-jt", "genbessel"};
const std::vector<std::string> kClaims = {"eq1", "thm31", "higher", "prop41", "remark", "prop42", "prop43", "all"};

double tolerance(const Params& p) {
    const double tol = or_default(p.tol, kEvalTol);
    if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
    return tol;
}

// Evaluates the selected function; `arg` replaces the selector's main argument
// (z, or t for c0) when finite.
EvalResult evaluate(const std::string& sel, const Params& p, double arg) {
    const double tol = tolerance(p);
    const auto main_arg = [&](double v, const char* flag) { return std::isnan(arg) ? need(v, flag) : arg; };
    // Parameters are read in declaration order so a missing flag is reported
    // deterministically, before the main argument.
    if (sel == "wright") {
        const double lambda = need(p.lambda, "lambda");
        const double mu = need(p.mu, "mu");
        const double z = main_arg(p.z, "z");
        return wright_eval(WrightParams(lambda, mu), z, tol);
    }
    if (sel == "ml") {
        const double alpha = need(p.alpha, "alpha");
        const double beta = need(p.beta, "beta");
        const double z = main_arg(p.z, "z");
        return ml_eval(alpha, beta, z, tol);
    }
    if (sel == "c0") return tricomi_c0(main_arg(p.t, "t"), tol);
    if (sel == "genbessel") {
        const double lambda = need(p.lambda, "lambda");
        const double nu = need(p.nu, "nu");
        const double z = main_arg(p.z, "z");
        return wright_gen_bessel(lambda, nu, z, tol);
    }
    if (sel == "besselj" || sel == "besseli" || sel == "clifford" || sel == "tricomi-jt") {
        const double nu = need(p.nu, "nu");
        const double z = main_arg(p.z, "z");
        if (sel == "besselj") return bessel_j_wright(nu, z, tol);
        if (sel == "besseli") return bessel_i_wright(nu, z, tol);
        if (sel == "clifford") return bessel_clifford(nu, z, tol);
        return tricomi_jt(nu, z, tol);
    }
    throw UsageError("unknown function selector '" + sel + "'");
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (f == a) return;
    }
    throw UsageError("unsupported --format '" + f + "' for this command");
}

int cmd_eval(const std::string& sel, const Params& p, std::ostream& out) {
    const std::string format = p.format.empty() ? "plain" : p.format;
    require_format(format, {"plain", "json", "csv"});
    const EvalResult r = evaluate(sel, p, kUnset);
    if (format == "json") {
        Json j = to_json(r);
        j["function"] = sel;
        out << dump_canonical(j) << '\n';
    } else if (format == "csv") {
        out << "value,error_bound\n" << format_double(r.value) << ',' << format_double(r.abs_error_bound) << '\n';
    } else {
        out << format_double(r.value) << ' ' << format_double(r.abs_error_bound) << '\n';
    }
    return kExitPass;
}

int cmd_table(const std::string& sel, const Params& p, std::ostream& out) {
    const std::string format = p.format.empty() ? "csv" : p.format;
    require_format(format, {"csv", "json"});
    const double from = need(p.from, "from");
    const double to = need(p.to, "to");
    if (p.table_points < 2) throw UsageError("--points must be >= 2");
    if (!(from < to)) throw UsageError("--from must be < --to");
    const Window w{from, to, p.table_points};

    Json rows = Json::array();
    std::ostringstream csv;
    csv << "arg,value,error_bound\n";
    for (double arg : w.samples()) {
        const EvalResult r = evaluate(sel, p, arg);
        rows.push_back(Json{{"arg", number_or_null(arg)},
                            {"value", number_or_null(r.value)},
                            {"error_bound", number_or_null(r.abs_error_bound)}});
        csv << format_double(arg) << ',' << format_double(r.value) << ',' << format_double(r.abs_error_bound)
            << '\n';
    }
    if (format == "json") {
        out << dump_canonical(rows) << '\n';
    } else {
        out << csv.str();
    }
    return kExitPass;
}

int cmd_series(const std::string& sel, const Params& p, std::ostream& out) {
    const std::string format = p.format.empty() ? "json" : p.format;
    require_format(format, {"json", "plain"});
    const int order = p.order < 0 ? 8 : p.order;
    GenPowerSeries s;
    if (sel == "wright") {
        const double lambda = need(p.lambda, "lambda");
        const double mu = need(p.mu, "mu");
        SeriesSpec spec{WrightParams(lambda, mu), parse_sign(p.sign), or_default(p.power, lambda), order};
        s = wright_series(spec, p.var);
    } else if (sel == "higher") {
        const double beta = need(p.beta, "beta");
        const double nu = need(p.nu, "nu");
        s = higher_order_series(beta, nu, order, p.var);
    } else {
        throw UsageError("unknown series selector '" + sel + "'");
    }
    if (format == "json") {
        out << dump_canonical(to_json(s)) << '\n';
    } else {
        for (const Term& t : s.terms()) out << format_double(t.coeff) << ' ' << format_double(t.exponent) << '\n';
    }
    return kExitPass;
}

struct ClaimOutcome {
    Json report;
    bool pass;
};

VerifyOptions options_for(const Params& p, ResidualMode mode, Window frac, Window aux) {
    VerifyOptions o = mode == ResidualMode::coefficient ? VerifyOptions::coefficient(p.order < 0 ? 8 : p.order)
                                                        : VerifyOptions::grid(p.grid_order);
    o.tol = mode == ResidualMode::coefficient ? p.coef_tol : p.grid_tol;
    if (!std::isnan(p.tol)) o.tol = p.tol;
    if (!(o.tol > 0.0)) throw UsageError("tolerances must be > 0");
    o.frac_window = frac;
    o.aux_window = aux;
    return o;
}

std::vector<ResidualMode> modes_for(const std::string& mode) {
    if (mode == "coefficient") return {ResidualMode::coefficient};
    if (mode == "grid") return {ResidualMode::grid};
    if (mode == "both") return {ResidualMode::coefficient, ResidualMode::grid};
    throw UsageError("--mode must be coefficient, grid or both");
}

void run_claim(const std::string& claim, const Params& p, bool use_defaults, std::vector<ClaimOutcome>& out) {
    const auto val = [&](double v, double fallback) { return use_defaults ? fallback : or_default(v, fallback); };
    const Window t_win{val(p.t_from, 0.1), val(p.t_to, 2.0), p.points};
    const Window x_win{val(p.x_from, 0.0), val(p.x_to, 3.0), p.points};
    const std::vector<ResidualMode> modes = modes_for(use_defaults ? std::string("both") : p.mode);

    const auto push = [&](const ResidualReport& r) { out.push_back({to_json(r), r.pass}); };
    if (claim == "higher") {
        const EigenfactorReport r = verify_higher_order(val(p.beta, 0.5), val(p.nu, 1.2), p.order < 0 ? 8 : p.order);
        out.push_back({to_json(r), r.pass});
        return;
    }
    for (ResidualMode mode : modes) {
        if (claim == "eq1") {
            push(verify_eq1(val(p.lambda, 0.5), options_for(p, mode, t_win, x_win)));
        } else if (claim == "thm31") {
            push(verify_theorem31(val(p.beta, 0.5), val(p.nu, 0.8), options_for(p, mode, t_win, x_win)));
        } else if (claim == "prop41") {
            push(verify_prop41(val(p.beta, 0.5), val(p.nu, 0.8), options_for(p, mode, t_win, x_win)));
        } else if (claim == "remark") {
            push(verify_remark(options_for(p, mode, t_win, x_win)));
        } else if (claim == "prop42") {
            push(verify_prop42(val(p.lambda, 0.5), val(p.m, 2.0), options_for(p, mode, t_win, x_win)));
        } else if (claim == "prop43") {
            const Window space{val(p.x_from, 0.1), val(p.x_to, 2.0), p.points};
            const Window time{val(p.t_from, 0.0), val(p.t_to, 2.0), p.points};
            push(verify_prop43(val(p.beta, 0.5), val(p.nu, 0.8), options_for(p, mode, space, time)));
        } else {
            throw UsageError("unknown claim '" + claim + "'");
        }
    }
}

int cmd_verify(const std::string& claim, const Params& p, std::ostream& out) {
    const std::string format = p.format.empty() ? "json" : p.format;
    require_format(format, {"json", "plain"});
    if (p.points < 2) throw UsageError("--points must be >= 2");
    std::vector<ClaimOutcome> outcomes;
    if (claim == "all") {
        for (const std::string& c : kClaims) {
            if (c != "all") run_claim(c, p, true, outcomes);
        }
    } else {
        run_claim(claim, p, false, outcomes);
    }
    bool all_pass = true;
    Json arr = Json::array();
    for (const ClaimOutcome& o : outcomes) {
        all_pass = all_pass && o.pass;
        arr.push_back(o.report);
    }
    if (format == "json") {
        out << dump_canonical(arr) << '\n';
    } else {
        for (const ClaimOutcome& o : outcomes) {
            const Json& r = o.report;
            out << r["claim_id"].get<std::string>() << ' ' << r["mode"].get<std::string>() << ' '
                << (o.pass ? "PASS" : "FAIL");
            if (r.contains("max_abs_residual")) {
                out << " max_abs=" << format_double(r["max_abs_residual"].get<double>())
                    << " max_rel=" << format_double(r["max_rel_residual"].get<double>());
            } else {
                out << " winner=" << r["winner"].get<std::string>();
            }
            out << '\n';
        }
    }
    return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_laplace(const std::string& kind, const Params& p, std::ostream& out) {
    const std::string format = p.format.empty() ? "json" : p.format;
    require_format(format, {"json", "plain"});
    if (p.s_list.empty()) throw UsageError("missing required option --s");
    const std::vector<double> s = parse_list(p.s_list);
    for (double v : s) {
        if (!(v > 0.0)) throw UsageError("--s values must be > 0");
    }
    const double tol = or_default(p.tol, kLaplaceTol);
    LaplaceCheckReport r;
    if (kind == "first") {
        r = check_laplace_first_kind(WrightParams(need(p.lambda, "lambda"), or_default(p.mu, 1.0)),
                                     parse_sign(p.sign), s, tol);
    } else {
        r = check_laplace_second_kind(need(p.nu, "nu"), or_default(p.mu, 1.0), s, tol);
    }
    if (format == "json") {
        out << dump_canonical(to_json(r)) << '\n';
    } else {
        for (std::size_t i = 0; i < r.s_values.size(); ++i) {
            out << "s=" << format_double(r.s_values[i]) << " numeric=" << format_double(r.numeric[i])
                << " closed_form=" << format_double(r.closed_form[i]) << '\n';
        }
        out << (r.pass ? "PASS" : "FAIL") << " max_rel_gap=" << format_double(r.max_rel_gap) << '\n';
    }
    return r.pass ? kExitPass : kExitCheckFailed;
}

void add_function_params(CLI::App* cmd, Params& p) {
    cmd->add_option("--lambda", p.lambda, "Wright parameter lambda");
    cmd->add_option("--mu", p.mu, "Wright parameter mu");
    cmd->add_option("--z", p.z, "argument z");
    cmd->add_option("--t", p.t, "argument t (c0)");
    cmd->add_option("--nu", p.nu, "Bessel order nu");
    cmd->add_option("--alpha", p.alpha, "Mittag-Leffler alpha");
    cmd->add_option("--beta", p.beta, "Mittag-Leffler beta");
    cmd->add_option("--tol", p.tol, "absolute truncation tolerance (default 1e-15)");
}

void add_output(CLI::App* cmd, Params& p) {
    cmd->add_option("--format", p.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--out", p.out_path, "write output to PATH instead of standard output");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wright functions, Caputo operators and solution-claim verification", "wrightfrac"};
    app.require_subcommand(1);
    Params p;
    std::string selector;

    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    eval->add_option("function", selector, "function selector")->required()->check(CLI::IsMember(kEvalSelectors));
    add_function_params(eval, p);
    add_output(eval, p);

    auto* series = app.add_subcommand("series", "print a truncated generalized power series");
    series->add_option("family", selector, "series family")->required()->check(CLI::IsMember({"wright", "higher"}));
    series->add_option("--lambda", p.lambda);
    series->add_option("--mu", p.mu);
    series->add_option("--beta", p.beta);
    series->add_option("--nu", p.nu);
    series->add_option("--sign", p.sign, "+ or -");
    series->add_option("--power", p.power, "exponent step (default lambda)");
    series->add_option("--order", p.order, "number of terms (default 8)");
    series->add_option("--var", p.var, "variable name");
    add_output(series, p);

    auto* table = app.add_subcommand("table", "tabulate a special function on a window");
    table->add_option("function", selector, "function selector")->required()->check(CLI::IsMember(kEvalSelectors));
    add_function_params(table, p);
    table->add_option("--from", p.from)->required();
    table->add_option("--to", p.to)->required();
    table->add_option("--points", p.table_points)->required();
    add_output(table, p);

    auto* verify = app.add_subcommand("verify", "verify a solution claim");
    verify->add_option("claim", selector, "claim id")->required()->check(CLI::IsMember(kClaims));
    verify->add_option("--lambda", p.lambda);
    verify->add_option("--beta", p.beta);
    verify->add_option("--nu", p.nu);
    verify->add_option("--m", p.m);
    verify->add_option("--order", p.order, "coefficient-mode truncation order (default 8)");
    verify->add_option("--grid-order", p.grid_order, "grid-mode truncation order (default 40)");
    verify->add_option("--mode", p.mode, "coefficient, grid or both")
        ->check(CLI::IsMember({"coefficient", "grid", "both"}));
    verify->add_option("--coef-tol", p.coef_tol, "absolute coefficient tolerance (default 1e-11)");
    verify->add_option("--grid-tol", p.grid_tol, "relative grid tolerance (default 1e-8)");
    verify->add_option("--tol", p.tol, "tolerance for every selected mode (overrides --coef-tol and --grid-tol)");
    verify->add_option("--t-from", p.t_from);
    verify->add_option("--t-to", p.t_to);
    verify->add_option("--x-from", p.x_from);
    verify->add_option("--x-to", p.x_to);
    verify->add_option("--points", p.points, "samples per axis (default 25)");
    add_output(verify, p);

    auto* laplace = app.add_subcommand("laplace", "check a Wright / Mittag-Leffler Laplace pair");
    laplace->add_option("kind", selector, "first or second")->required()->check(CLI::IsMember({"first", "second"}));
    laplace->add_option("--lambda", p.lambda);
    laplace->add_option("--mu", p.mu, "default 1");
    laplace->add_option("--nu", p.nu);
    laplace->add_option("--sign", p.sign, "+ or - (first kind)");
    laplace->add_option("--s", p.s_list, "comma-separated s values")->allow_extra_args(false);
    laplace->add_option("--tol", p.tol, "relative gap tolerance (default 1e-6)");
    add_output(laplace, p);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    std::ostringstream buffer;
    if (!p.out_path.empty()) sink = &buffer;

    int code = kExitBadInput;
    try {
        if (eval->parsed()) {
            code = cmd_eval(selector, p, *sink);
        } else if (series->parsed()) {
            code = cmd_series(selector, p, *sink);
        } else if (table->parsed()) {
            code = cmd_table(selector, p, *sink);
        } else if (verify->parsed()) {
            code = cmd_verify(selector, p, *sink);
        } else if (laplace->parsed()) {
            code = cmd_laplace(selector, p, *sink);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const TailNotCertified& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }

    if (!p.out_path.empty()) {
        file.open(p.out_path);
        if (!file) {
            err << "error: cannot open " << p.out_path << '\n';
            return kExitBadInput;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace wrightfrac::cli
