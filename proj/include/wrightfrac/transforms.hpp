#pragma once

#include "wrightfrac/special_core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wrightfrac {

/// Growth hypothesis used to bound the Laplace integral beyond t_max:
/// |f(t)| e^{-rate t} is assumed non-increasing past the sampled window, so
///   |int_{t_max}^inf e^{-s t} f(t) dt| <= C e^{(rate - s) t_max} / (s - rate)
/// with C = max |f(t)| e^{-rate t} over the window [t_max - w, t_max],
/// w = max(1, window_fraction * t_max). Oscillating integrands need a window
/// longer than their local period.
struct TailModel {
    double rate = 0.0;
    double window_fraction = 0.0;
};

struct LaplaceValue {
    double value = 0.0;
    /// quadrature_error + tail_bound + rounding_bound
    double error_bound = 0.0;
    double quadrature_error = 0.0;
    double tail_bound = 0.0;
    double rounding_bound = 0.0;
};

/// Integrand sample with the scale of its rounding noise (e.g. the sum of
/// |term| of the series that produced it); the noise is multiplied by eps.
struct IntegrandSample {
    double value = 0.0;
    double noise_scale = 0.0;
};

using LaplaceIntegrand = std::function<IntegrandSample(double)>;

/// int_0^inf e^{-s t} f(t) dt by adaptive Gauss-Kronrod on [0, t_max] plus a
/// tail bound. Throws TailNotCertified when the envelope of |f| e^{-rate t}
/// grows over the last sampled units, or when s <= rate.
LaplaceValue laplace_numeric(const std::function<double(double)>& f, double s, double t_max, double tol,
                             TailModel tail = {});
LaplaceValue laplace_numeric(const LaplaceIntegrand& f, double s, double t_max, double tol, TailModel tail = {});

enum class LaplaceKind { first, second };

struct LaplaceCheckReport {
    LaplaceKind kind = LaplaceKind::first;
    WrightParams params{0.0, 1.0};
    int sign = -1;
    std::vector<double> s_values;
    std::vector<double> numeric;
    std::vector<double> closed_form;
    /// Bound on |numeric - exact transform| (quadrature, tail and rounding).
    std::vector<double> quadrature_error;
    /// Truncation bound of the Mittag-Leffler side.
    std::vector<double> series_error;
    std::vector<double> t_max;
    double max_rel_gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<std::string> diagnostics;
};

inline constexpr double kLaplaceTol = 1e-6;

/// W_{lambda,mu}(+-t)  <->  (1/s) E_{lambda,mu}(+-1/s), lambda >= 0.
/// For sign = +1 every s must exceed 1.5 (exponential order one plus margin).
LaplaceCheckReport check_laplace_first_kind(const WrightParams& p, int sign, const std::vector<double>& s_list,
                                            double tol = kLaplaceTol);

/// W_{-nu,mu}(-t)  <->  E_{nu,mu+nu}(-s), 0 < nu < 1.
LaplaceCheckReport check_laplace_second_kind(double nu, double mu, const std::vector<double>& s_list,
                                             double tol = kLaplaceTol);

const char* to_string(LaplaceKind kind) noexcept;

} // namespace wrightfrac
