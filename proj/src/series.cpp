#include "wrightfrac/series.hpp"

#include "wrightfrac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace wrightfrac {

namespace {

bool within_match(double lo, double hi, double match_tol) {
    return hi - lo <= match_tol * (1.0 + std::fabs(lo));
}

void check_exponents(const std::vector<Term>& terms, NegativeExponents policy, const char* what) {
    if (policy == NegativeExponents::allow) return;
    for (const Term& t : terms) {
        if (t.exponent < 0.0) {
            throw InvariantViolation(std::string(what) + ": negative exponent " +
                                     std::to_string(t.exponent) + " in generalized power series");
        }
    }
}

} // namespace

std::vector<Term> normalize_terms(std::vector<Term> terms, double match_tol) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.exponent < b.exponent; });

    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (const Term& t : terms) {
        Term cur = t;
        if (std::fabs(cur.exponent) <= match_tol) cur.exponent = 0.0;
        if (!merged.empty() && within_match(merged.back().exponent, cur.exponent, match_tol)) {
            merged.back().coeff += cur.coeff;
        } else {
            merged.push_back(cur);
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
    return merged;
}

GenPowerSeries::GenPowerSeries(std::string var, std::vector<Term> terms, NegativeExponents policy,
                               double match_tol)
    : var_(std::move(var)) {
    for (const Term& t : terms) {
        if (!std::isfinite(t.coeff) || !std::isfinite(t.exponent)) {
            throw InvariantViolation("generalized power series terms must be finite");
        }
    }
    terms_ = normalize_terms(std::move(terms), match_tol);
    check_exponents(terms_, policy, "GenPowerSeries");
}

double GenPowerSeries::min_exponent() const noexcept {
    return terms_.empty() ? 0.0 : terms_.front().exponent;
}

double GenPowerSeries::max_exponent() const noexcept {
    return terms_.empty() ? 0.0 : terms_.back().exponent;
}

double GenPowerSeries::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, std::fabs(t.coeff));
    return m;
}

GenPowerSeries GenPowerSeries::truncated_through(double max_exponent) const {
    GenPowerSeries out;
    out.var_ = var_;
    for (const Term& t : terms_) {
        if (t.exponent <= max_exponent || within_match(max_exponent, t.exponent, kExponentMatchTol)) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

GenPowerSeries GenPowerSeries::renamed(std::string var) const {
    GenPowerSeries out = *this;
    out.var_ = std::move(var);
    return out;
}

void SeriesSpec::validate() const {
    if (sign != 1 && sign != -1) throw DomainError("series sign must be +1 or -1");
    if (!(power > 0.0) || !std::isfinite(power)) throw DomainError("series power must be > 0");
    if (order < 1) throw DomainError("series order must be >= 1");
}

GenPowerSeries wright_series(const SeriesSpec& spec, const std::string& var) {
    spec.validate();
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(spec.order));
    double inv_factorial = 1.0;
    for (int k = 0; k < spec.order; ++k) {
        const double dk = static_cast<double>(k);
        if (k > 0) inv_factorial /= dk;
        const double rg = recip_gamma(spec.params.lambda() * dk + spec.params.mu());
        double c = rg * inv_factorial;
        if (spec.sign < 0 && (k % 2 == 1)) c = -c;
        terms.push_back({c, spec.power * dk});
    }
    return GenPowerSeries(var, std::move(terms));
}

GenPowerSeries higher_order_series(double beta, double nu, int order, const std::string& var) {
    if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("higher_order_series requires beta in (0, 1]");
    if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("higher_order_series requires nu > 0");
    if (order < 1) throw DomainError("series order must be >= 1");
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(order));
    double inv_factorial = 1.0;
    for (int k = 0; k < order; ++k) {
        const double dk = static_cast<double>(k);
        if (k > 0) inv_factorial /= dk;
        const double c = recip_gamma(beta * dk + nu) * inv_factorial * inv_factorial;
        terms.push_back({c, beta * dk});
    }
    return GenPowerSeries(var, std::move(terms));
}

double series_eval(const GenPowerSeries& s, double t) {
    if (!(t >= 0.0)) throw DomainError("series_eval requires t >= 0");
    if (t == 0.0 && !s.evaluable_at_zero()) {
        throw DomainError("series has negative exponents and is singular at 0");
    }
    double sum = 0.0;
    for (const Term& term : s.terms()) {
        sum += term.coeff * std::pow(t, term.exponent);
    }
    return sum;
}

GenPowerSeries series_derivative(const GenPowerSeries& s, NegativeExponents policy) {
    std::vector<Term> out;
    out.reserve(s.size());
    for (const Term& t : s.terms()) {
        if (t.exponent == 0.0) continue;
        out.push_back({t.coeff * t.exponent, t.exponent - 1.0});
    }
    check_exponents(out, policy, "series_derivative");
    return GenPowerSeries(s.var(), std::move(out), NegativeExponents::allow);
}

GenPowerSeries series_mul_power(const GenPowerSeries& s, double rho, NegativeExponents policy) {
    if (!std::isfinite(rho)) throw InvariantViolation("series_mul_power: rho must be finite");
    std::vector<Term> out;
    out.reserve(s.size());
    for (const Term& t : s.terms()) {
        out.push_back({t.coeff, t.exponent + rho});
    }
    check_exponents(out, policy, "series_mul_power");
    return GenPowerSeries(s.var(), std::move(out), NegativeExponents::allow);
}

GenPowerSeries series_scale(const GenPowerSeries& s, double a) {
    std::vector<Term> out(s.terms().begin(), s.terms().end());
    for (Term& t : out) t.coeff *= a;
    return GenPowerSeries(s.var(), std::move(out), NegativeExponents::allow);
}

GenPowerSeries series_linear_combine(double a, const GenPowerSeries& s1, double b,
                                     const GenPowerSeries& s2, double match_tol) {
    if (s1.var() != s2.var()) {
        throw std::invalid_argument("series_linear_combine: variables differ ('" + s1.var() + "' vs '" +
                                    s2.var() + "')");
    }
    std::vector<Term> out;
    out.reserve(s1.size() + s2.size());
    for (const Term& t : s1.terms()) out.push_back({a * t.coeff, t.exponent});
    for (const Term& t : s2.terms()) out.push_back({b * t.coeff, t.exponent});
    return GenPowerSeries(s1.var(), std::move(out), NegativeExponents::allow, match_tol);
}

} // namespace wrightfrac
