#include "wrightfrac/special_core.hpp"

#include "wrightfrac/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wrightfrac {

namespace {

// Gamma is increasing on [x_min, inf) with x_min ~ 1.46163.
constexpr double kGammaIncreasingFrom = 1.5;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::floor(x) == x;
}

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    double sign = 1.0;
    if (r > 1.0) {
        r -= 1.0;
        sign = -1.0;
    }
    if (r > 0.5) r = 1.0 - r;
    return sign * std::sin(std::numbers::pi * r);
}

// Thread-safe lgamma for x > 0 (std::lgamma writes the global signgam).
double lgamma_positive(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

void require_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a positive finite number");
    }
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be finite");
    }
}

// (z/2)^nu, rejecting the complex branch.
double bessel_prefactor(double nu, double z) {
    if (nu == 0.0) return 1.0;
    if (z < 0.0 && std::floor(nu) != nu) {
        throw DomainError("negative argument with non-integer order has no real value");
    }
    return std::pow(0.5 * z, nu);
}

void require_order(double nu) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw DomainError("Bessel order nu must be finite and >= 0");
    }
}

// Evaluates prefactor * W_{lambda, nu+1}(arg) with the tolerance rescaled so
// that the bound on the product stays within tol.
EvalResult scaled_wright(double prefactor, const WrightParams& p, double arg, double tol) {
    if (prefactor == 0.0) {
        return EvalResult{0.0, 0.0, 1, 0.0};
    }
    const double scale = std::fabs(prefactor);
    const double inner_tol = scale > 1.0 ? tol / scale : tol;
    EvalResult w = wright_eval(p, arg, inner_tol);
    w.value *= prefactor;
    w.abs_error_bound *= scale;
    w.magnitude_sum *= scale;
    return w;
}

} // namespace

WrightParams::WrightParams(double lambda, double mu) : lambda_(lambda), mu_(mu) {
    if (!std::isfinite(lambda) || !std::isfinite(mu)) {
        throw DomainError("Wright parameters must be finite");
    }
    if (!(lambda > -1.0)) {
        throw DomainError("Wright parameter lambda must be > -1");
    }
}

double recip_gamma(double x) {
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 170.0) return std::exp(-lgamma_positive(x));
    if (x < -170.0) {
        // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
        const LogRecipGamma l = log_recip_gamma(x);
        return l.sign * std::exp(l.log_abs);
    }
    return 1.0 / std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma requires x > 0");
    }
    if (x == 1.0 || x == 2.0) return 0.0;
    return lgamma_positive(x);
}

LogRecipGamma log_recip_gamma(double x) {
    if (x > 0.0) {
        return {-lgamma_positive(x), 1};
    }
    if (is_nonpositive_integer(x)) {
        return {-std::numeric_limits<double>::infinity(), 0};
    }
    const double s = sin_pi(x);
    const double log_abs = std::log(std::fabs(s)) + lgamma_positive(1.0 - x) - std::log(std::numbers::pi);
    return {log_abs, s > 0.0 ? 1 : -1};
}

double gamma_ratio(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("gamma_ratio requires positive arguments");
    }
    if (a == b) return 1.0;
    if (a < 170.0 && b < 170.0) {
        return std::tgamma(a) / std::tgamma(b);
    }
    return std::exp(lgamma_positive(a) - lgamma_positive(b));
}

EvalResult wright_eval(const WrightParams& p, double z, double tol) {
    require_tol(tol);
    require_finite(z, "z");

    const double lambda = p.lambda();
    const double mu = p.mu();
    if (z == 0.0) {
        return EvalResult{recip_gamma(mu), 0.0, 1, std::fabs(recip_gamma(mu))};
    }

    const double abs_z = std::fabs(z);
    const double log_abs_z = std::log(abs_z);
    const double ell = -lambda; // only meaningful for the second kind

    double sum = 0.0;
    double magnitude = 0.0;
    double power = 1.0; // z^n / n!
    for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
        const double dn = static_cast<double>(n);
        if (n > 0) power *= z / dn;
        const double x = lambda * dn + mu;

        double term = 0.0;
        const double rg = recip_gamma(x);
        if (std::isfinite(rg) && std::fabs(rg) < 1e290 && std::fabs(power) > 1e-290) {
            term = power * rg;
        } else {
            const LogRecipGamma lr = log_recip_gamma(x);
            if (lr.sign != 0) {
                const double log_abs = dn * log_abs_z - lgamma_positive(dn + 1.0) + lr.log_abs;
                const bool odd_negative = z < 0.0 && (n % 2 == 1);
                term = (odd_negative ? -lr.sign : lr.sign) * std::exp(log_abs);
            }
        }
        sum += term;
        magnitude += std::fabs(term);

        // Tail certification: every later term ratio is at most 1/2, so the
        // tail is bounded by the dominating quantity at index n.
        if (p.is_first_kind()) {
            const bool ratio_small = abs_z / (dn + 1.0) <= 0.5;
            const bool gamma_monotone = lambda == 0.0 || x >= kGammaIncreasingFrom;
            if (ratio_small && gamma_monotone && std::fabs(term) <= tol) {
                return EvalResult{sum, std::fabs(term), n + 1, magnitude};
            }
        } else if (x <= 0.0) {
            // |1/Gamma(x)| <= Gamma(1 - x) / pi for x <= 0; the envelope
            // e_m = |z|^m Gamma(1 - x_m) / (pi m!) has ratio at most
            // |z| y_m^ell / (m + 1) with y_m = 1 - x_m (Wendel's inequality),
            // which is non-increasing once ell^2 (m + 1) <= y_m.
            const double y = 1.0 - x;
            const bool ratio_monotone = ell * ell * (dn + 1.0) <= y;
            const bool ratio_small = abs_z * std::pow(y, ell) / (dn + 1.0) <= 0.5;
            if (ratio_monotone && ratio_small) {
                const double envelope = std::exp(dn * log_abs_z - lgamma_positive(dn + 1.0) +
                                                 lgamma_positive(y) - std::log(std::numbers::pi));
                if (envelope <= tol) {
                    return EvalResult{sum, envelope, n + 1, magnitude};
                }
            }
        }
    }
    throw NonConvergenceError("Wright series not certified within " + std::to_string(kMaxSeriesTerms) +
                              " terms");
}

EvalResult ml_eval(double alpha, double beta, double z, double tol) {
    require_tol(tol);
    require_finite(z, "z");
    require_finite(beta, "beta");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw DomainError("Mittag-Leffler parameter alpha must be >= 0");
    }
    if (alpha == 0.0) {
        if (!(z < 1.0)) {
            throw DomainError("E_{0,beta}(z) requires z < 1");
        }
        const double v = recip_gamma(beta) / (1.0 - z);
        return EvalResult{v, 0.0, 1, std::fabs(v)};
    }
    if (z == 0.0) {
        return EvalResult{recip_gamma(beta), 0.0, 1, std::fabs(recip_gamma(beta))};
    }

    const double abs_z = std::fabs(z);
    const double log_abs_z = std::log(abs_z);
    double sum = 0.0;
    double magnitude = 0.0;
    double power = 1.0;
    for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
        const double dn = static_cast<double>(n);
        if (n > 0) power *= z;
        const double x = alpha * dn + beta;

        double term = 0.0;
        const double rg = recip_gamma(x);
        if (std::isfinite(power) && std::fabs(power) < 1e290 && std::fabs(power) > 1e-290 &&
            std::isfinite(rg)) {
            term = power * rg;
        } else {
            const LogRecipGamma lr = log_recip_gamma(x);
            if (lr.sign != 0) {
                const bool odd_negative = z < 0.0 && (n % 2 == 1);
                term = (odd_negative ? -lr.sign : lr.sign) * std::exp(dn * log_abs_z + lr.log_abs);
            }
        }
        sum += term;
        magnitude += std::fabs(term);

        // Gamma(x + alpha) / Gamma(x) >= x^alpha * x / (x + 1) for x > 0, so the
        // term ratio is at most |z| (x + 1) / x^(alpha + 1), decreasing in x.
        if (x > 0.0) {
            const double ratio_bound = abs_z * (x + 1.0) / std::pow(x, alpha + 1.0);
            if (ratio_bound <= 0.5 && std::fabs(term) <= tol) {
                return EvalResult{sum, std::fabs(term), n + 1, magnitude};
            }
        }
    }
    throw NonConvergenceError("Mittag-Leffler series not certified within " +
                              std::to_string(kMaxSeriesTerms) + " terms");
}

EvalResult tricomi_c0(double t, double tol) {
    return wright_eval(WrightParams(1.0, 1.0), t, tol);
}

EvalResult bessel_j_wright(double nu, double z, double tol) {
    require_order(nu);
    require_tol(tol);
    require_finite(z, "z");
    return scaled_wright(bessel_prefactor(nu, z), WrightParams(1.0, nu + 1.0), -0.25 * z * z, tol);
}

EvalResult bessel_i_wright(double nu, double z, double tol) {
    require_order(nu);
    require_tol(tol);
    require_finite(z, "z");
    return scaled_wright(bessel_prefactor(nu, z), WrightParams(1.0, nu + 1.0), 0.25 * z * z, tol);
}

EvalResult bessel_clifford(double nu, double z, double tol) {
    require_order(nu);
    return wright_eval(WrightParams(1.0, nu + 1.0), -z, tol);
}

EvalResult tricomi_jt(double nu, double z, double tol) {
    require_order(nu);
    require_finite(z, "z");
    return wright_eval(WrightParams(1.0, nu + 1.0), -0.25 * z * z, tol);
}

EvalResult wright_gen_bessel(double lambda, double nu, double z, double tol) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("generalized Bessel parameter lambda must be >= 0");
    }
    require_order(nu);
    require_tol(tol);
    require_finite(z, "z");
    return scaled_wright(bessel_prefactor(nu, z), WrightParams(lambda, nu + 1.0), -0.25 * z * z, tol);
}

} // namespace wrightfrac
