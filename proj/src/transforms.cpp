#include "wrightfrac/transforms.hpp"

#include "wrightfrac/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wrightfrac {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesTol = 1e-16;
constexpr unsigned kMaxDepth = 12;
constexpr double kPanelRelTol = 1e-13;
constexpr double kPanelRelMax = 1e-3;
constexpr int kSamplesPerUnit = 64;
// Margin above the exponential order for sign = +1 first-kind transforms.
constexpr double kGrowthMargin = 0.5;
constexpr double kTmaxStart = 4.0;
constexpr double kTmaxStep = 1.0;
constexpr double kTmaxLimit = 120.0;
// Share of the comparison tolerance spent on quadrature, tail and rounding.
constexpr double kBudgetFraction = 0.1;

struct Envelope {
    double last = 0.0;    // max |f| e^{-rate t} over the final window
    double earlier = 0.0; // max over [0, start of the final window]
    double noise = 0.0;   // max noise_scale e^{-rate t} over the final window
};

Envelope sample_envelope(const LaplaceIntegrand& f, double t_max, TailModel tail) {
    Envelope env;
    const double rate = tail.rate;
    const double split = std::max(0.0, t_max - std::max(1.0, tail.window_fraction * t_max));
    const int earlier_n = std::max(8, static_cast<int>(std::ceil(split)) * 8);
    for (int i = 0; i <= earlier_n && split > 0.0; ++i) {
        const double t = split * static_cast<double>(i) / earlier_n;
        const IntegrandSample v = f(t);
        env.earlier = std::max(env.earlier, std::fabs(v.value) * std::exp(-rate * t));
    }
    const int last_n = std::max(kSamplesPerUnit, static_cast<int>(std::ceil(t_max - split)) * kSamplesPerUnit);
    for (int i = 0; i <= last_n; ++i) {
        const double t = split + (t_max - split) * static_cast<double>(i) / last_n;
        const IntegrandSample v = f(t);
        const double w = std::exp(-rate * t);
        env.last = std::max(env.last, std::fabs(v.value) * w);
        env.noise = std::max(env.noise, v.noise_scale * w);
    }
    return env;
}

double tail_bound(const Envelope& env, double s, double t_max, double rate) {
    const double c = env.last + 4.0 * kEps * env.noise;
    return c * std::exp((rate - s) * t_max) / (s - rate);
}

void require_s(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("Laplace variable s must be > 0");
    }
}

// Smallest t_max on the schedule whose tail bound fits the budget.
double choose_t_max(const LaplaceIntegrand& f, double s, TailModel tail, double budget) {
    const double rate = tail.rate;
    for (double t_max = kTmaxStart; t_max <= kTmaxLimit; t_max += kTmaxStep) {
        const Envelope env = sample_envelope(f, t_max, tail);
        // Rounding noise of the samples dominates everything beyond this point.
        if (4.0 * kEps * env.noise * std::exp((rate - s) * t_max) > budget) break;
        if (env.last > env.earlier * (1.0 + 1e-12) && env.earlier > 0.0) continue;
        if (tail_bound(env, s, t_max, rate) <= budget) return t_max;
    }
    throw TailNotCertified("Laplace tail not certified for s = " + std::to_string(s));
}

IntegrandSample wright_sample(const WrightParams& p, int sign, double t) {
    const EvalResult e = wright_eval(p, sign * t, kSeriesTol);
    return {e.value, e.magnitude_sum};
}

// The Mittag-Leffler side must be resolved well inside the comparison budget.
void require_reliable(const EvalResult& ml, double scale, double budget, double s) {
    const double err = (ml.abs_error_bound + 4.0 * kEps * ml.magnitude_sum) / scale;
    if (!(err <= 0.5 * budget)) {
        throw NonConvergenceError("Mittag-Leffler closed form loses precision to cancellation at s = " +
                                  std::to_string(s));
    }
}

} // namespace

const char* to_string(LaplaceKind kind) noexcept {
    return kind == LaplaceKind::first ? "first" : "second";
}

LaplaceValue laplace_numeric(const std::function<double(double)>& f, double s, double t_max, double tol,
                             TailModel tail) {
    return laplace_numeric(LaplaceIntegrand([&f](double t) { return IntegrandSample{f(t), 0.0}; }), s, t_max,
                           tol, tail);
}

LaplaceValue laplace_numeric(const LaplaceIntegrand& f, double s, double t_max, double tol, TailModel tail) {
    require_s(s);
    if (!(t_max >= 1.0) || !std::isfinite(t_max)) throw DomainError("t_max must be >= 1");
    if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
    if (!(s > tail.rate)) {
        throw TailNotCertified("s must exceed the assumed exponential order " + std::to_string(tail.rate));
    }

    LaplaceValue out;
    double max_noise = 0.0;
    const auto integrand = [&](double t) {
        const IntegrandSample v = f(t);
        const double w = std::exp(-s * t);
        max_noise = std::max(max_noise, v.noise_scale * w);
        return w * v.value;
    };

    using boost::math::quadrature::gauss_kronrod;
    const double panels = std::ceil(t_max);
    double l1_total = 0.0;
    for (double a = 0.0; a < t_max; a += 1.0) {
        const double b = std::min(a + 1.0, t_max);
        double err = 0.0;
        double l1 = 0.0;
        // Boost stops on a relative criterion; convert this panel's share of
        // the absolute target using a single-rule estimate of its L1 norm.
        gauss_kronrod<double, 15>::integrate(integrand, a, b, 0, 0.0, &err, &l1);
        const double share = 0.5 * tol / panels;
        const double panel_tol = l1 > 0.0 ? std::clamp(share / l1, kPanelRelTol, kPanelRelMax) : kPanelRelMax;
        out.value += gauss_kronrod<double, 15>::integrate(integrand, a, b, kMaxDepth, panel_tol, &err, &l1);
        out.quadrature_error += err;
        l1_total += l1;
    }

    const Envelope env = sample_envelope(f, t_max, tail);
    if (env.earlier > 0.0 && env.last > env.earlier * (1.0 + 1e-12)) {
        throw TailNotCertified("|f| e^{-rate t} still grows at t_max = " + std::to_string(t_max));
    }
    out.tail_bound = tail_bound(env, s, t_max, tail.rate);
    out.rounding_bound = 4.0 * kEps * (max_noise * t_max + l1_total);
    out.error_bound = out.quadrature_error + out.tail_bound + out.rounding_bound;
    return out;
}

LaplaceCheckReport check_laplace_first_kind(const WrightParams& p, int sign, const std::vector<double>& s_list,
                                            double tol) {
    if (!p.is_first_kind()) throw DomainError("first-kind Laplace pair requires lambda >= 0");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    if (s_list.empty()) throw DomainError("s list is empty");
    if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
    const double rate = sign > 0 ? 1.0 : 0.0;
    for (double s : s_list) {
        require_s(s);
        if (sign > 0 && !(s > rate + kGrowthMargin)) {
            throw DomainError("sign = + needs s > " + std::to_string(rate + kGrowthMargin) +
                              " (exponential order 1 plus margin)");
        }
    }

    LaplaceCheckReport rep;
    rep.kind = LaplaceKind::first;
    rep.params = p;
    rep.sign = sign;
    rep.tolerance = tol;
    const LaplaceIntegrand f = [&p, sign](double t) { return wright_sample(p, sign, t); };
    for (double s : s_list) {
        const EvalResult ml = ml_eval(p.lambda(), p.mu(), sign / s, kSeriesTol);
        const double closed = ml.value / s;
        const double budget = kBudgetFraction * tol * std::max(std::fabs(closed), 1e-300);
        require_reliable(ml, s, budget, s);
        // W(-t) oscillates with a local period growing like t^{lambda/(1+lambda)},
        // and for lambda >= 1 its amplitude can grow subexponentially; the
        // weight e^{-s t / 4} makes the envelope eventually non-increasing.
        const TailModel tail{sign > 0 ? rate : 0.25 * s, 0.5};
        const double t_max = choose_t_max(f, s, tail, 0.5 * budget);
        const LaplaceValue num = laplace_numeric(f, s, t_max, budget, tail);

        rep.s_values.push_back(s);
        rep.numeric.push_back(num.value);
        rep.closed_form.push_back(closed);
        rep.quadrature_error.push_back(num.error_bound);
        rep.series_error.push_back((ml.abs_error_bound + 4.0 * kEps * ml.magnitude_sum) / s);
        rep.t_max.push_back(t_max);
        rep.max_rel_gap = std::max(rep.max_rel_gap, std::fabs(num.value - closed) / std::fabs(closed));
    }
    rep.pass = rep.max_rel_gap <= tol;
    return rep;
}

LaplaceCheckReport check_laplace_second_kind(double nu, double mu, const std::vector<double>& s_list,
                                             double tol) {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("second-kind Laplace pair requires 0 < nu < 1");
    if (!std::isfinite(mu)) throw DomainError("mu must be finite");
    if (s_list.empty()) throw DomainError("s list is empty");
    if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
    for (double s : s_list) require_s(s);

    LaplaceCheckReport rep;
    rep.kind = LaplaceKind::second;
    rep.params = WrightParams(-nu, mu);
    rep.sign = -1;
    rep.tolerance = tol;
    rep.diagnostics.push_back("second kind checked on the negative real axis only; s restricted to the "
                              "certified Mittag-Leffler series region");
    const WrightParams p = rep.params;
    const LaplaceIntegrand f = [&p](double t) { return wright_sample(p, -1, t); };
    for (double s : s_list) {
        const EvalResult ml = ml_eval(nu, mu + nu, -s, kSeriesTol);
        const double closed = ml.value;
        const double budget = kBudgetFraction * tol * std::max(std::fabs(closed), 1e-300);
        require_reliable(ml, 1.0, budget, s);
        // On the negative axis the second kind decays without oscillating.
        const TailModel tail{0.0, 0.0};
        const double t_max = choose_t_max(f, s, tail, 0.5 * budget);
        const LaplaceValue num = laplace_numeric(f, s, t_max, budget, tail);

        rep.s_values.push_back(s);
        rep.numeric.push_back(num.value);
        rep.closed_form.push_back(closed);
        rep.quadrature_error.push_back(num.error_bound);
        rep.series_error.push_back(ml.abs_error_bound + 4.0 * kEps * ml.magnitude_sum);
        rep.t_max.push_back(t_max);
        rep.max_rel_gap = std::max(rep.max_rel_gap, std::fabs(num.value - closed) / std::fabs(closed));
    }
    rep.pass = rep.max_rel_gap <= tol;
    return rep;
}

} // namespace wrightfrac
