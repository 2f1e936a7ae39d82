#pragma once

#include "wrightfrac/series.hpp"

#include <cstddef>
#include <vector>

namespace wrightfrac {

/// Caputo differentiation order beta in (0, 1]; beta == 1 is the classical derivative.
class CaputoOrder {
public:
    explicit CaputoOrder(double beta);

    double beta() const noexcept { return beta_; }
    bool is_classical() const noexcept { return beta_ == 1.0; }

private:
    double beta_;
};

/// Samples on the uniform grid t_i = t0 + i h.
struct GridFunction {
    double t0 = 0.0;
    double h = 1.0;
    std::vector<double> values;

    double at(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * h; }
    /// Throws DomainError unless t0 >= 0, h > 0 and there are at least two samples.
    void validate() const;
};

/// Samples f on n + 1 points t_i = t0 + i h.
template <class F>
GridFunction sample_grid(F&& f, double t0, double h, std::size_t n) {
    GridFunction g{t0, h, {}};
    g.values.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g.values.push_back(f(g.at(i)));
    return g;
}

/// Coefficient of the Caputo power rule D^beta t^s = Gamma(s+1)/Gamma(s+1-beta) t^{s-beta}.
/// Zero for s == 0; DomainError for s < 0.
double caputo_power_rule(double s, CaputoOrder order);

/// Termwise Caputo derivative of a series with nonnegative exponents.
///
/// Constants are annihilated. Exponents in (0, beta) map to negative
/// exponents; the result is then singular at 0 (evaluable_at_zero() is false).
GenPowerSeries caputo_series(const GenPowerSeries& s, CaputoOrder order);

/// L1 discretization of the Caputo derivative of grid samples anchored at t0 = 0.
///
/// Output sample j (j >= 0) sits at t = (j + 1) h and equals
///   h^{-beta} / Gamma(2 - beta) * sum_{k<i} w_k (f_{i-k} - f_{i-k-1}),  i = j + 1,
/// with w_k = (k+1)^{1-beta} - k^{1-beta}.
GridFunction caputo_l1(const GridFunction& f, CaputoOrder order);

/// d^beta/dt^beta ( t^nu d/dt s ).
///
/// PreconditionViolation when t^nu s' carries a nonpositive non-constant
/// exponent, i.e. outside the power rule's s > 0 hypothesis.
GenPowerSeries laguerre_frac_operator(const GenPowerSeries& s, CaputoOrder order, double nu);

/// d^beta/dt^beta ( t^nu d/dt t d/dt s ).
GenPowerSeries higher_laguerre_operator(const GenPowerSeries& s, CaputoOrder order, double nu);

/// d/dt ( t^lambda d^lambda/dt^lambda s ), lambda in (0, 1].
GenPowerSeries eq1_operator(const GenPowerSeries& s, double lambda);

} // namespace wrightfrac
