#pragma once

#include "wrightfrac/series.hpp"

#include <string>
#include <vector>

namespace wrightfrac {

enum class ResidualMode { coefficient, grid };

const char* to_string(ResidualMode mode) noexcept;

/// Closed sampling window [lo, hi] with `points` equispaced samples.
struct Window {
    double lo = 0.0;
    double hi = 1.0;
    int points = 25;

    /// DomainError unless lo < hi, points >= 2 and the bounds are finite.
    void validate() const;
    std::vector<double> samples() const;
};

inline constexpr double kCoefficientTol = 1e-11;
inline constexpr double kGridTol = 1e-8;

struct VerifyOptions {
    ResidualMode mode = ResidualMode::coefficient;
    /// Number of series terms of the candidate solution.
    int order = 8;
    /// Absolute coefficient tolerance, or relative pointwise tolerance on grids.
    double tol = kCoefficientTol;
    /// Axis of the variable carrying the fractional operator (t, or x for verify_prop43).
    Window frac_window{0.1, 2.0, 25};
    /// Axis of the separated variable (x, or t for verify_prop43).
    Window aux_window{0.0, 3.0, 25};

    static VerifyOptions coefficient(int order = 8);
    static VerifyOptions grid(int order = 40);
};

struct GridPoint {
    std::vector<double> coords;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Auxiliary named check carried inside a report (initial conditions,
/// nonlinear cancellation, separation structure).
struct NamedCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Residual of one candidate right-hand side when the claimed constant is in question.
struct HypothesisResult {
    std::string label;
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    bool pass = false;
};

struct ResidualReport {
    std::string claim_id;
    ResidualMode mode = ResidualMode::coefficient;
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    /// Coefficient mode: coords = {exponent}, lhs/rhs = matching coefficients.
    /// Grid mode: coords = sample coordinates, lhs/rhs = function values.
    std::vector<GridPoint> points;
    int truncation_order = 0;
    bool pass = false;
    std::vector<std::string> diagnostics;
    std::vector<NamedCheck> checks;
    std::vector<HypothesisResult> hypotheses;
};

struct EigenfactorCandidate {
    std::string label;
    double value = 0.0;
    double max_deviation = 0.0;
};

struct EigenfactorReport {
    std::string claim_id;
    int truncation_order = 0;
    std::vector<double> per_coefficient_ratios;
    double fitted_factor = 0.0;
    /// (max ratio - min ratio) / |fitted_factor|
    double ratio_spread = 0.0;
    std::vector<EigenfactorCandidate> candidates;
    std::string winner;
    bool pass = false;
    std::vector<std::string> diagnostics;
};

/// d/dt t^lambda D^lambda u = lambda t^{lambda-1} u with u = W_{lambda,1}(t^lambda), u(0) = 1.
ResidualReport verify_eq1(double lambda, const VerifyOptions& opt);

/// D^beta (t^nu f') = beta t^{nu-1} f with f = W_{beta,nu}(t^beta).
/// PreconditionViolation when nu <= 1 - beta.
ResidualReport verify_theorem31(double beta, double nu, const VerifyOptions& opt);

/// Per-coefficient factor c in D^beta t^nu d/dt t d/dt u = c t^{nu-1} u for
/// u = sum t^{k beta} / (k!^2 Gamma(k beta + nu)), tested against c = beta and c = beta^2.
EigenfactorReport verify_higher_order(double beta, double nu, int order);

/// t^{1-nu} D^beta_t t^nu u_t + u u_x = -u^2 - beta u with u = e^{-x} W_{beta,nu}(-t^beta).
ResidualReport verify_prop41(double beta, double nu, const VerifyOptions& opt);

/// (t u_t)_t + u u_x + u^2 + u = 0 with u = C0(-t) e^{-x}.
ResidualReport verify_remark(const VerifyOptions& opt);

/// t^{1-lambda} d/dt t^lambda D^lambda u = (u^m)_xx - c u with u = W_{lambda,1}(-t^lambda) x^{1/m},
/// evaluated for both c = 1 and c = lambda.
ResidualReport verify_prop42(double lambda, double m, const VerifyOptions& opt);

/// u_t = (1 / (beta x^{nu-1})) D^beta_x (x^nu u_x) with u = e^{-t} W_{beta,nu}(-x^beta).
ResidualReport verify_prop43(double beta, double nu, const VerifyOptions& opt);

} // namespace wrightfrac
