#include "wrightfrac/fracops.hpp"

#include "wrightfrac/errors.hpp"

#include <cmath>
#include <string>

namespace wrightfrac {

namespace {

// Caputo of the series after the inner operator has produced `inner`;
// a negative exponent there is outside the power rule's hypothesis.
GenPowerSeries caputo_of_inner(const GenPowerSeries& inner, CaputoOrder order, const char* op) {
    if (!inner.evaluable_at_zero()) {
        throw PreconditionViolation(std::string(op) + ": inner series has exponent " +
                                    std::to_string(inner.min_exponent()) +
                                    " < 0; the power rule needs s > 0 (nu > 1 - beta)");
    }
    return caputo_series(inner, order);
}

} // namespace

CaputoOrder::CaputoOrder(double beta) : beta_(beta) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw DomainError("Caputo order must lie in (0, 1]");
    }
}

void GridFunction::validate() const {
    if (!(t0 >= 0.0) || !std::isfinite(t0)) throw DomainError("grid start must be >= 0");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid step must be > 0");
    if (values.size() < 2) throw DomainError("grid function needs at least two samples");
}

double caputo_power_rule(double s, CaputoOrder order) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw DomainError("Caputo power rule requires s >= 0");
    }
    if (s == 0.0) return 0.0;
    if (order.is_classical()) return s;
    return gamma_ratio(s + 1.0, s + 1.0 - order.beta());
}

GenPowerSeries caputo_series(const GenPowerSeries& s, CaputoOrder order) {
    if (!s.evaluable_at_zero()) {
        throw DomainError("caputo_series: input has a negative exponent");
    }
    if (order.is_classical()) {
        return series_derivative(s, NegativeExponents::allow);
    }
    std::vector<Term> out;
    out.reserve(s.size());
    for (const Term& t : s.terms()) {
        if (t.exponent == 0.0) continue;
        out.push_back({t.coeff * caputo_power_rule(t.exponent, order), t.exponent - order.beta()});
    }
    return GenPowerSeries(s.var(), std::move(out), NegativeExponents::allow);
}

GridFunction caputo_l1(const GridFunction& f, CaputoOrder order) {
    f.validate();
    if (order.is_classical()) {
        throw DomainError("caputo_l1 covers beta in (0, 1); use the classical derivative for beta = 1");
    }
    if (f.t0 != 0.0) {
        throw DomainError("caputo_l1 requires the grid to start at the lower limit t0 = 0");
    }
    const double beta = order.beta();
    const std::size_t n = f.values.size() - 1;

    std::vector<double> weights(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = static_cast<double>(k);
        weights[k] = std::pow(dk + 1.0, 1.0 - beta) - std::pow(dk, 1.0 - beta);
    }
    std::vector<double> diffs(n);
    for (std::size_t i = 0; i < n; ++i) diffs[i] = f.values[i + 1] - f.values[i];

    const double scale = std::pow(f.h, -beta) * recip_gamma(2.0 - beta);
    GridFunction out{f.h, f.h, std::vector<double>(n)};
    for (std::size_t i = 1; i <= n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < i; ++k) {
            acc += weights[k] * diffs[i - k - 1];
        }
        out.values[i - 1] = scale * acc;
    }
    return out;
}

GenPowerSeries laguerre_frac_operator(const GenPowerSeries& s, CaputoOrder order, double nu) {
    const GenPowerSeries inner =
        series_mul_power(series_derivative(s, NegativeExponents::allow), nu, NegativeExponents::allow);
    return caputo_of_inner(inner, order, "laguerre_frac_operator");
}

GenPowerSeries higher_laguerre_operator(const GenPowerSeries& s, CaputoOrder order, double nu) {
    const GenPowerSeries t_ds =
        series_mul_power(series_derivative(s, NegativeExponents::allow), 1.0, NegativeExponents::allow);
    const GenPowerSeries inner =
        series_mul_power(series_derivative(t_ds, NegativeExponents::allow), nu, NegativeExponents::allow);
    return caputo_of_inner(inner, order, "higher_laguerre_operator");
}

GenPowerSeries eq1_operator(const GenPowerSeries& s, double lambda) {
    const CaputoOrder order(lambda);
    const GenPowerSeries frac = caputo_series(s, order);
    return series_derivative(series_mul_power(frac, lambda, NegativeExponents::allow),
                             NegativeExponents::allow);
}

} // namespace wrightfrac
