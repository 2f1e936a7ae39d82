#pragma once

#include "wrightfrac/special_core.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wrightfrac {

/// One term coeff * var^exponent of a generalized power series.
struct Term {
    double coeff = 0.0;
    double exponent = 0.0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Whether an operation may produce negative exponents.
///
/// Composite operators pass through intermediate series with negative
/// exponents (t^{beta k - 1} after differentiating t^{beta k}) and some of
/// their results are legitimately singular at 0 (t^{nu - 1} with nu < 1).
/// Everything else rejects them.
enum class NegativeExponents { reject, allow };

/// Default relative exponent-merging threshold: exponents e1 <= e2 are merged
/// when e2 - e1 <= kExponentMatchTol * (1 + |e1|).
inline constexpr double kExponentMatchTol = 1e-12;

/// Finite sum of real coefficients times real powers of a variable, kept in
/// normal form: exponents strictly increasing, no exactly-zero coefficients,
/// exponents that agree up to roundoff merged into one term.
class GenPowerSeries {
public:
    GenPowerSeries() = default;

    /// Normalizes the given terms. Throws InvariantViolation on negative
    /// exponents unless `policy` allows them, and on non-finite input.
    GenPowerSeries(std::string var, std::vector<Term> terms,
                   NegativeExponents policy = NegativeExponents::reject,
                   double match_tol = kExponentMatchTol);

    const std::string& var() const noexcept { return var_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Smallest exponent; 0 for the empty series.
    double min_exponent() const noexcept;
    /// Largest exponent; 0 for the empty series.
    double max_exponent() const noexcept;
    /// False when some exponent is negative (the function is singular at 0).
    bool evaluable_at_zero() const noexcept { return min_exponent() >= 0.0; }

    /// Largest |coeff|; 0 for the empty series.
    double max_abs_coeff() const noexcept;

    /// Keeps terms with exponent <= max_exponent (up to merge tolerance).
    GenPowerSeries truncated_through(double max_exponent) const;

    /// Returns a copy renamed to another variable.
    GenPowerSeries renamed(std::string var) const;

    friend bool operator==(const GenPowerSeries&, const GenPowerSeries&) = default;

private:
    std::string var_ = "t";
    std::vector<Term> terms_;
};

/// Sorts, merges near-equal exponents, snaps |e| below the threshold to 0 and
/// drops exactly-zero coefficients. Idempotent.
std::vector<Term> normalize_terms(std::vector<Term> terms, double match_tol = kExponentMatchTol);

/// Identifies the family W_{lambda,mu}(sign * t^power) truncated to `order` terms.
struct SeriesSpec {
    WrightParams params{0.0, 1.0};
    int sign = 1;
    double power = 1.0;
    int order = 1;

    /// Throws DomainError if sign is not +-1, power <= 0 or order < 1.
    void validate() const;
};

/// sum_{k<N} sign^k t^{power k} / (k! Gamma(lambda k + mu)).
GenPowerSeries wright_series(const SeriesSpec& spec, const std::string& var = "t");

/// sum_{k<N} t^{beta k} / (k!^2 Gamma(beta k + nu)).
GenPowerSeries higher_order_series(double beta, double nu, int order, const std::string& var = "t");

/// Sum of coeff * t^exponent in increasing-exponent order; DomainError for
/// t < 0, or t == 0 when a negative exponent is present.
double series_eval(const GenPowerSeries& s, double t);

/// Termwise d/dt. Constant terms vanish.
GenPowerSeries series_derivative(const GenPowerSeries& s,
                                 NegativeExponents policy = NegativeExponents::reject);

/// Multiplies by var^rho (shifts every exponent by rho).
GenPowerSeries series_mul_power(const GenPowerSeries& s, double rho,
                                NegativeExponents policy = NegativeExponents::reject);

/// Multiplies every coefficient by a.
GenPowerSeries series_scale(const GenPowerSeries& s, double a);

/// a * s1 + b * s2 in normal form. Throws std::invalid_argument when the
/// variables differ.
GenPowerSeries series_linear_combine(double a, const GenPowerSeries& s1, double b,
                                     const GenPowerSeries& s2, double match_tol = kExponentMatchTol);

} // namespace wrightfrac
