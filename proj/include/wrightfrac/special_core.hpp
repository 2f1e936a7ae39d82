#pragma once

#include <cstddef>

namespace wrightfrac {

/// Parameters (lambda, mu) of the Wright function W_{lambda,mu}.
///
/// The series sum_n z^n / (n! Gamma(lambda n + mu)) is entire for every
/// lambda > -1. Functions with lambda >= 0 are of the first kind, those with
/// -1 < lambda < 0 of the second kind.
class WrightParams {
public:
    /// Throws DomainError unless lambda > -1 and both values are finite.
    WrightParams(double lambda, double mu);

    double lambda() const noexcept { return lambda_; }
    double mu() const noexcept { return mu_; }

    bool is_first_kind() const noexcept { return lambda_ >= 0.0; }
    bool is_second_kind() const noexcept { return lambda_ < 0.0; }

    friend bool operator==(const WrightParams&, const WrightParams&) = default;

private:
    double lambda_;
    double mu_;
};

/// Truncated series value together with a rigorous bound on the discarded tail.
struct EvalResult {
    double value = 0.0;
    /// Bound on |exact - value| from truncation only (rounding not included).
    double abs_error_bound = 0.0;
    std::size_t terms_used = 0;
    /// Sum of |term| over the summed terms; value * eps-scale rounding noise
    /// of the partial sum is about magnitude_sum * eps.
    double magnitude_sum = 0.0;
};

/// Hard cap on the number of series terms before NonConvergenceError.
inline constexpr std::size_t kMaxSeriesTerms = 10000;

/// 1 / Gamma(x); exactly zero at the poles 0, -1, -2, ...
double recip_gamma(double x);

/// ln Gamma(x) for x > 0; DomainError otherwise.
double log_gamma(double x);

/// ln |1/Gamma(x)| and its sign, finite everywhere except at the poles of
/// Gamma, where sign is 0 and the log is -inf.
struct LogRecipGamma {
    double log_abs;
    int sign;
};
LogRecipGamma log_recip_gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0.
double gamma_ratio(double a, double b);

/// Wright function W_{lambda,mu}(z) by its power series.
///
/// Summation stops at the first term index n for which the remaining terms
/// are provably dominated by a geometric series of ratio 1/2 and the dominating
/// term is below tol; the reported bound is that geometric tail.
EvalResult wright_eval(const WrightParams& p, double z, double tol);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) = sum z^n / Gamma(alpha n + beta).
///
/// alpha > 0 uses the certified series. alpha == 0 is accepted for z < 1 and
/// evaluated in closed form 1 / (Gamma(beta) (1 - z)), the analytic continuation
/// of the geometric series.
EvalResult ml_eval(double alpha, double beta, double z, double tol);

/// Tricomi function C0(t) = sum t^k / k!^2 = W_{1,1}(t).
EvalResult tricomi_c0(double t, double tol);

/// Bessel J_nu(z) = (z/2)^nu W_{1,nu+1}(-z^2/4).
EvalResult bessel_j_wright(double nu, double z, double tol);

/// Modified Bessel I_nu(z) = (z/2)^nu W_{1,nu+1}(z^2/4).
EvalResult bessel_i_wright(double nu, double z, double tol);

/// Bessel-Clifford function sum (-1)^k z^k / (k! Gamma(k+nu+1)) = W_{1,nu+1}(-z).
EvalResult bessel_clifford(double nu, double z, double tol);

/// Tricomi's entire Bessel variant (z/2)^{-nu} J_nu(z) = W_{1,nu+1}(-z^2/4).
EvalResult tricomi_jt(double nu, double z, double tol);

/// Wright generalized Bessel function (z/2)^nu W_{lambda,nu+1}(-z^2/4), lambda >= 0.
EvalResult wright_gen_bessel(double lambda, double nu, double z, double tol);

} // namespace wrightfrac
