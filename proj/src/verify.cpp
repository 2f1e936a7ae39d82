#include "wrightfrac/verify.hpp"

#include "wrightfrac/errors.hpp"
#include "wrightfrac/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace wrightfrac {

namespace {

constexpr double kEvalTol = 1e-16;
constexpr double kInitialConditionTol = 1e-15;
constexpr double kCancellationTol = 1e-13;
constexpr double kSeparationTol = 1e-12;
constexpr double kEigenTol = 1e-10;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void require_unit_order(double beta, const char* name) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0, 1]");
    }
}

void require_power_rule_hypothesis(double beta, double nu) {
    require_unit_order(beta, "beta");
    if (!std::isfinite(nu)) throw DomainError("nu must be finite");
    if (!(nu > 1.0 - beta)) {
        throw PreconditionViolation("nu = " + fmt(nu) + " <= 1 - beta = " + fmt(1.0 - beta) +
                                    ": exponents beta k + nu - 1 leave the power rule's range s > 0");
    }
}

void require_options(const VerifyOptions& opt, int min_order) {
    if (opt.order < min_order) {
        throw DomainError("truncation order must be >= " + std::to_string(min_order));
    }
    if (!(opt.tol > 0.0) || !std::isfinite(opt.tol)) throw DomainError("tolerance must be > 0");
    if (opt.mode == ResidualMode::grid) {
        opt.frac_window.validate();
        opt.aux_window.validate();
    }
}

ResidualReport start_report(std::string claim_id, const VerifyOptions& opt) {
    ResidualReport r;
    r.claim_id = std::move(claim_id);
    r.mode = opt.mode;
    r.tolerance = opt.tol;
    r.truncation_order = opt.order;
    return r;
}

void add_check(ResidualReport& r, std::string name, double value, double threshold) {
    r.checks.push_back({std::move(name), value, threshold, value <= threshold});
}

bool checks_pass(const ResidualReport& r) {
    return std::all_of(r.checks.begin(), r.checks.end(), [](const NamedCheck& c) { return c.pass; });
}

// |l - r| / max(|l|, |r|), 0 when both vanish.
double relative_gap(double l, double r) {
    const double scale = std::max(std::fabs(l), std::fabs(r));
    return scale == 0.0 ? 0.0 : std::fabs(l - r) / scale;
}

struct CoefficientComparison {
    double max_abs = 0.0;
    double max_rel = 0.0;
    std::vector<GridPoint> pairs;
};

// Pairs coefficients of equal exponent (up to the merge tolerance) through `through`.
CoefficientComparison compare_coefficients(const GenPowerSeries& lhs, const GenPowerSeries& rhs,
                                           double through) {
    const GenPowerSeries l = lhs.truncated_through(through);
    const GenPowerSeries r = rhs.truncated_through(through);
    const GenPowerSeries diff = series_linear_combine(1.0, l, -1.0, r);

    CoefficientComparison out;
    auto li = l.terms().begin();
    auto ri = r.terms().begin();
    const auto close = [](double a, double b) {
        return std::fabs(a - b) <= kExponentMatchTol * (1.0 + std::fabs(std::min(a, b)));
    };
    while (li != l.terms().end() || ri != r.terms().end()) {
        GridPoint p;
        if (ri == r.terms().end() || (li != l.terms().end() && li->exponent < ri->exponent &&
                                      !close(li->exponent, ri->exponent))) {
            p = {{li->exponent}, li->coeff, 0.0};
            ++li;
        } else if (li == l.terms().end() || (ri->exponent < li->exponent && !close(li->exponent, ri->exponent))) {
            p = {{ri->exponent}, 0.0, ri->coeff};
            ++ri;
        } else {
            p = {{ri->exponent}, li->coeff, ri->coeff};
            ++li;
            ++ri;
        }
        out.pairs.push_back(std::move(p));
    }
    out.max_abs = diff.max_abs_coeff();
    const double scale = std::max(r.max_abs_coeff(), l.max_abs_coeff());
    out.max_rel = scale == 0.0 ? out.max_abs : out.max_abs / scale;
    return out;
}

void fill_coefficient(ResidualReport& r, const GenPowerSeries& lhs, const GenPowerSeries& rhs,
                      double through) {
    CoefficientComparison c = compare_coefficients(lhs, rhs, through);
    r.max_abs_residual = c.max_abs;
    r.max_rel_residual = c.max_rel;
    r.points = std::move(c.pairs);
    r.pass = r.max_abs_residual <= r.tolerance && checks_pass(r);
}

// Pointwise grid accumulation. The allowed relative gap at a point is the
// report tolerance plus a truncation budget expressed in absolute terms.
class GridAccumulator {
public:
    explicit GridAccumulator(ResidualReport& r) : r_(r) {}

    void add(std::vector<double> coords, double lhs, double rhs, double budget_abs) {
        const double abs_gap = std::fabs(lhs - rhs);
        const double rel = relative_gap(lhs, rhs);
        const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
        const double allowed = r_.tolerance + (scale == 0.0 ? 0.0 : budget_abs / scale);
        r_.max_abs_residual = std::max(r_.max_abs_residual, abs_gap);
        r_.max_rel_residual = std::max(r_.max_rel_residual, rel);
        if (rel > allowed) ++failures_;
        r_.points.push_back({std::move(coords), lhs, rhs});
    }

    void finish() {
        if (failures_ > 0) {
            r_.diagnostics.push_back(std::to_string(failures_) + " grid point(s) exceed the relative tolerance");
        }
        r_.pass = failures_ == 0 && checks_pass(r_);
    }

private:
    ResidualReport& r_;
    std::size_t failures_ = 0;
};

// Magnitude estimate of the tail dropped when the identity shifts the
// summation index: twice the last retained term of the candidate series.
double last_term_estimate(const GenPowerSeries& s, double t) {
    if (s.empty()) return 0.0;
    const Term& last = s.terms().back();
    return 2.0 * std::fabs(last.coeff * std::pow(t, last.exponent));
}

double wright_at(const WrightParams& p, double z, double& bound) {
    const EvalResult e = wright_eval(p, z, kEvalTol);
    bound = e.abs_error_bound;
    return e.value;
}

std::string winner_diagnostic(const std::vector<HypothesisResult>& hyps) {
    std::vector<std::string> passing;
    for (const auto& h : hyps) {
        if (h.pass) passing.push_back(h.label);
    }
    if (passing.empty()) return "no hypothesis passes";
    if (passing.size() == hyps.size()) return "hypotheses coincide: all pass";
    std::string out = "passing hypothesis: ";
    for (std::size_t i = 0; i < passing.size(); ++i) {
        if (i > 0) out += ", ";
        out += passing[i];
    }
    return out;
}

} // namespace

const char* to_string(ResidualMode mode) noexcept {
    return mode == ResidualMode::coefficient ? "coefficient" : "grid";
}

void Window::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw DomainError("window requires finite lo < hi");
    }
    if (points < 2) throw DomainError("window requires at least 2 points");
}

std::vector<double> Window::samples() const {
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        out[static_cast<std::size_t>(i)] = i == points - 1 ? hi : lo + step * static_cast<double>(i);
    }
    return out;
}

VerifyOptions VerifyOptions::coefficient(int order) {
    VerifyOptions o;
    o.mode = ResidualMode::coefficient;
    o.order = order;
    o.tol = kCoefficientTol;
    return o;
}

VerifyOptions VerifyOptions::grid(int order) {
    VerifyOptions o;
    o.mode = ResidualMode::grid;
    o.order = order;
    o.tol = kGridTol;
    return o;
}

ResidualReport verify_eq1(double lambda, const VerifyOptions& opt) {
    require_unit_order(lambda, "lambda");
    require_options(opt, 3);
    ResidualReport r = start_report("eq1", opt);
    const int n = opt.order;
    const WrightParams params(lambda, 1.0);
    const GenPowerSeries u = wright_series({params, +1, lambda, n});
    add_check(r, "initial_condition_u0_equals_1", std::fabs(series_eval(u, 0.0) - 1.0), kInitialConditionTol);
    const GenPowerSeries lhs = eq1_operator(u, lambda);

    if (opt.mode == ResidualMode::coefficient) {
        const GenPowerSeries rhs =
            series_scale(series_mul_power(u, lambda - 1.0, NegativeExponents::allow), lambda);
        fill_coefficient(r, lhs, rhs, lambda * (n - 1) - 1.0);
        return r;
    }
    GridAccumulator acc(r);
    for (double t : opt.frac_window.samples()) {
        if (t <= 0.0 && lambda < 1.0) {
            r.diagnostics.push_back("t = 0 skipped: t^(lambda-1) is singular");
            continue;
        }
        double bound = 0.0;
        const double w = wright_at(params, std::pow(t, lambda), bound);
        const double factor = lambda * std::pow(t, lambda - 1.0);
        acc.add({t}, series_eval(lhs, t), factor * w, factor * (bound + last_term_estimate(u, t)));
    }
    acc.finish();
    return r;
}

ResidualReport verify_theorem31(double beta, double nu, const VerifyOptions& opt) {
    require_power_rule_hypothesis(beta, nu);
    require_options(opt, 3);
    ResidualReport r = start_report("thm31", opt);
    const int n = opt.order;
    const WrightParams params(beta, nu);
    const GenPowerSeries f = wright_series({params, +1, beta, n});
    add_check(r, "initial_condition_f0_equals_recip_gamma_nu",
              std::fabs(series_eval(f, 0.0) - recip_gamma(nu)), kInitialConditionTol);
    const GenPowerSeries lhs = laguerre_frac_operator(f, CaputoOrder(beta), nu);

    if (opt.mode == ResidualMode::coefficient) {
        const GenPowerSeries rhs = series_scale(series_mul_power(f, nu - 1.0, NegativeExponents::allow), beta);
        fill_coefficient(r, lhs, rhs, beta * (n - 2) + nu - 1.0);
        return r;
    }
    GridAccumulator acc(r);
    for (double t : opt.frac_window.samples()) {
        if (t <= 0.0 && !lhs.evaluable_at_zero()) {
            r.diagnostics.push_back("t = 0 skipped: t^(nu-1) is singular");
            continue;
        }
        double bound = 0.0;
        const double w = wright_at(params, std::pow(t, beta), bound);
        const double factor = beta * std::pow(t, nu - 1.0);
        acc.add({t}, series_eval(lhs, t), factor * w, factor * (bound + last_term_estimate(f, t)));
    }
    acc.finish();
    return r;
}

EigenfactorReport verify_higher_order(double beta, double nu, int order) {
    require_power_rule_hypothesis(beta, nu);
    if (order < 4) throw DomainError("truncation order must be >= 4");

    EigenfactorReport rep;
    rep.claim_id = "higher";
    rep.truncation_order = order;

    const GenPowerSeries u = higher_order_series(beta, nu, order);
    const GenPowerSeries lhs = higher_laguerre_operator(u, CaputoOrder(beta), nu);
    const GenPowerSeries base = series_mul_power(u, nu - 1.0, NegativeExponents::allow);
    const CoefficientComparison c = compare_coefficients(lhs, base, beta * (order - 2) + nu - 1.0);

    for (const GridPoint& p : c.pairs) {
        if (p.rhs == 0.0 || !std::isfinite(p.lhs / p.rhs)) {
            rep.diagnostics.push_back("unpaired coefficient at exponent " + fmt(p.coords.front()));
            continue;
        }
        rep.per_coefficient_ratios.push_back(p.lhs / p.rhs);
    }
    const auto& ratios = rep.per_coefficient_ratios;
    if (ratios.empty()) {
        rep.diagnostics.push_back("no coefficient ratios available");
        return rep;
    }
    double sum = 0.0;
    for (double v : ratios) sum += v;
    rep.fitted_factor = sum / static_cast<double>(ratios.size());
    const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
    rep.ratio_spread = (*mx - *mn) / std::fabs(rep.fitted_factor);

    const auto deviation = [&](double value) {
        double d = 0.0;
        for (double v : ratios) d = std::max(d, std::fabs(v - value));
        return d;
    };
    rep.candidates.push_back({"A: beta (stated)", beta, deviation(beta)});
    rep.candidates.push_back({"B: beta^2 (termwise)", beta * beta, deviation(beta * beta)});

    const auto& a = rep.candidates[0];
    const auto& b = rep.candidates[1];
    const bool a_ok = a.max_deviation <= kEigenTol;
    const bool b_ok = b.max_deviation <= kEigenTol;
    if (a_ok && b_ok) {
        rep.winner = "A and B coincide";
    } else if (a_ok) {
        rep.winner = a.label;
    } else if (b_ok) {
        rep.winner = b.label;
    } else {
        rep.winner = "none";
    }
    rep.pass = rep.ratio_spread <= kEigenTol && (a_ok || b_ok);
    rep.diagnostics.push_back("ratio spread " + fmt(rep.ratio_spread) + ", fitted factor " +
                              fmt(rep.fitted_factor) + ", matching candidate: " + rep.winner);
    return rep;
}

ResidualReport verify_prop41(double beta, double nu, const VerifyOptions& opt) {
    require_power_rule_hypothesis(beta, nu);
    require_options(opt, 3);
    ResidualReport r = start_report("prop41", opt);
    const int n = opt.order;
    const WrightParams params(beta, nu);
    const GenPowerSeries f = wright_series({params, -1, beta, n});
    add_check(r, "initial_condition_f0_equals_recip_gamma_nu",
              std::fabs(series_eval(f, 0.0) - recip_gamma(nu)), kInitialConditionTol);
    const GenPowerSeries op = laguerre_frac_operator(f, CaputoOrder(beta), nu);

    if (opt.mode == ResidualMode::coefficient) {
        r.diagnostics.push_back("separated form u = f(t) e^{-x}: u u_x = -u^2 cancels the -u^2 term; "
                                "reduced to D^beta t^nu f' = -beta t^{nu-1} f");
        const GenPowerSeries rhs =
            series_scale(series_mul_power(f, nu - 1.0, NegativeExponents::allow), -beta);
        fill_coefficient(r, op, rhs, beta * (n - 2) + nu - 1.0);
        return r;
    }

    // t^{1-nu} D^beta (t^nu f') has nonnegative exponents beta (k-1).
    const GenPowerSeries time_part = series_mul_power(op, 1.0 - nu, NegativeExponents::allow);
    double max_cancellation = 0.0;
    std::vector<double> e_minus_x;
    for (double x : opt.aux_window.samples()) e_minus_x.push_back(std::exp(-x));
    const std::vector<double> xs = opt.aux_window.samples();

    GridAccumulator acc(r);
    for (double t : opt.frac_window.samples()) {
        double bound = 0.0;
        const double fv = wright_at(params, -std::pow(t, beta), bound);
        const double tp = series_eval(time_part, t);
        const double budget_t = beta * (bound + last_term_estimate(f, t));
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const double g = e_minus_x[j];
            const double u = fv * g;
            const double u_x = fv * -g;
            const double nonlinear = u * u_x;
            if (u != 0.0) {
                max_cancellation = std::max(max_cancellation, std::fabs(nonlinear + u * u) / (u * u));
            }
            const double lhs = tp * g + nonlinear;
            const double rhs = -u * u - beta * u;
            acc.add({xs[j], t}, lhs, rhs, budget_t * g);
        }
    }
    add_check(r, "nonlinear_cancellation_max_rel", max_cancellation, kCancellationTol);
    acc.finish();
    return r;
}

ResidualReport verify_remark(const VerifyOptions& opt) {
    require_options(opt, 3);
    ResidualReport r = start_report("remark", opt);
    const int n = opt.order;
    const GenPowerSeries g = wright_series({WrightParams(1.0, 1.0), -1, 1.0, n});
    add_check(r, "initial_condition_c0_at_0_equals_1", std::fabs(series_eval(g, 0.0) - 1.0),
              kInitialConditionTol);
    const GenPowerSeries dt = series_derivative(series_mul_power(series_derivative(g), 1.0));

    if (opt.mode == ResidualMode::coefficient) {
        fill_coefficient(r, dt, series_scale(g, -1.0), static_cast<double>(n - 2));
        return r;
    }
    const std::vector<double> xs = opt.aux_window.samples();
    GridAccumulator acc(r);
    for (double t : opt.frac_window.samples()) {
        const EvalResult c0 = tricomi_c0(-t, kEvalTol);
        const double lap = series_eval(dt, t);
        const double budget_t = c0.abs_error_bound + last_term_estimate(g, t);
        for (double x : xs) {
            const double e = std::exp(-x);
            const double u = c0.value * e;
            const double u_x = c0.value * -e;
            const double lhs = lap * e + u * u_x;
            const double rhs = -u * u - u;
            acc.add({x, t}, lhs, rhs, budget_t * e);
        }
    }
    acc.finish();
    return r;
}

ResidualReport verify_prop42(double lambda, double m, const VerifyOptions& opt) {
    require_unit_order(lambda, "lambda");
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("m must be > 0");
    require_options(opt, 3);
    ResidualReport r = start_report("prop42", opt);
    const int n = opt.order;
    const WrightParams params(lambda, 1.0);
    const GenPowerSeries f = wright_series({params, -1, lambda, n});

    // (u^m)_xx with u^m = f^m x: the x-profile x^{1/m} raised to m is linear.
    const GenPowerSeries profile("x", {{1.0, 1.0 / m}});
    const GenPowerSeries profile_pow_m("x", {{1.0, profile.terms().front().exponent * m}});
    const GenPowerSeries second = series_derivative(series_derivative(profile_pow_m, NegativeExponents::allow),
                                                    NegativeExponents::allow);
    add_check(r, "spatial_term_second_derivative_of_u_pow_m", second.max_abs_coeff(), 0.0);

    // t^{1-lambda} d/dt t^lambda D^lambda f, exponents lambda (k - 1).
    const GenPowerSeries op = series_mul_power(eq1_operator(f, lambda), 1.0 - lambda, NegativeExponents::allow);
    const std::vector<std::pair<std::string, double>> hyps = {
        {"A: -u (as stated)", 1.0},
        {"B: -lambda u (Wright ODE scaling)", lambda},
    };

    if (opt.mode == ResidualMode::coefficient) {
        std::vector<CoefficientComparison> comps;
        for (const auto& [label, c] : hyps) {
            comps.push_back(compare_coefficients(op, series_scale(f, -c), lambda * (n - 2)));
            r.hypotheses.push_back({label, comps.back().max_abs, comps.back().max_rel,
                                    comps.back().max_abs <= r.tolerance});
        }
        const std::size_t best = comps[0].max_abs <= comps[1].max_abs ? 0 : 1;
        r.max_abs_residual = comps[best].max_abs;
        r.max_rel_residual = comps[best].max_rel;
        r.points = comps[best].pairs;
    } else {
        const std::vector<double> xs = opt.aux_window.samples();
        std::vector<double> max_abs(hyps.size(), 0.0);
        std::vector<double> max_rel(hyps.size(), 0.0);
        std::vector<std::vector<GridPoint>> pts(hyps.size());
        std::vector<bool> ok(hyps.size(), true);
        for (double t : opt.frac_window.samples()) {
            double bound = 0.0;
            const double fv = wright_at(params, -std::pow(t, lambda), bound);
            const double opv = series_eval(op, t);
            const double budget_t = bound + last_term_estimate(f, t);
            for (double x : xs) {
                const double prof = std::pow(x, 1.0 / m);
                const double u = fv * prof;
                const double lhs = opv * prof;
                for (std::size_t h = 0; h < hyps.size(); ++h) {
                    const double rhs = 0.0 - hyps[h].second * u;
                    const double rel = relative_gap(lhs, rhs);
                    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
                    const double budget = hyps[h].second * budget_t * prof;
                    if (rel > r.tolerance + (scale == 0.0 ? 0.0 : budget / scale)) ok[h] = false;
                    max_abs[h] = std::max(max_abs[h], std::fabs(lhs - rhs));
                    max_rel[h] = std::max(max_rel[h], rel);
                    pts[h].push_back({{x, t}, lhs, rhs});
                }
            }
        }
        for (std::size_t h = 0; h < hyps.size(); ++h) {
            r.hypotheses.push_back({hyps[h].first, max_abs[h], max_rel[h], static_cast<bool>(ok[h])});
        }
        const std::size_t best = max_rel[0] <= max_rel[1] ? 0 : 1;
        r.max_abs_residual = max_abs[best];
        r.max_rel_residual = max_rel[best];
        r.points = std::move(pts[best]);
    }
    r.diagnostics.push_back(winner_diagnostic(r.hypotheses));
    const bool any = std::any_of(r.hypotheses.begin(), r.hypotheses.end(),
                                 [](const HypothesisResult& h) { return h.pass; });
    r.pass = any && checks_pass(r);
    return r;
}

ResidualReport verify_prop43(double beta, double nu, const VerifyOptions& opt) {
    require_power_rule_hypothesis(beta, nu);
    require_options(opt, 3);
    ResidualReport r = start_report("prop43", opt);
    const int n = opt.order;
    const WrightParams params(beta, nu);
    const GenPowerSeries g = wright_series({params, -1, beta, n}, "x");
    // (1 / (beta x^{nu-1})) D^beta_x (x^nu g'), exponents beta (k - 1).
    const GenPowerSeries space = series_scale(
        series_mul_power(laguerre_frac_operator(g, CaputoOrder(beta), nu), 1.0 - nu, NegativeExponents::allow),
        1.0 / beta);

    if (opt.mode == ResidualMode::coefficient) {
        r.diagnostics.push_back("separated form u = e^{-t} g(x): u_t = -u; reduced to "
                                "(1/(beta x^{nu-1})) D^beta x^nu g' = -g");
        fill_coefficient(r, space, series_scale(g, -1.0), beta * (n - 2));
        return r;
    }
    const std::vector<double> ts = opt.aux_window.samples();
    double max_spread = 0.0;
    GridAccumulator acc(r);
    for (double x : opt.frac_window.samples()) {
        double bound = 0.0;
        const double gv = wright_at(params, -std::pow(x, beta), bound);
        const double sv = series_eval(space, x);
        const double budget_x = bound + last_term_estimate(g, x);
        double first_rel = 0.0;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const double e = std::exp(-ts[j]);
            const double lhs = -e * gv;
            const double rhs = e * sv;
            const double rel = relative_gap(lhs, rhs);
            if (j == 0) first_rel = rel;
            max_spread = std::max(max_spread, std::fabs(rel - first_rel));
            acc.add({x, ts[j]}, lhs, rhs, budget_x * e);
        }
    }
    add_check(r, "residual_independent_of_t", max_spread, kSeparationTol);
    acc.finish();
    return r;
}

} // namespace wrightfrac
