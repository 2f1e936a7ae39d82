#include "oracles.hpp"

#include "wrightfrac/errors.hpp"
#include "wrightfrac/special_core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wrightfrac;

TEST_CASE("WrightParams classifies the kind and rejects lambda <= -1") {
    CHECK(WrightParams(0.0, 1.0).is_first_kind());
    CHECK(WrightParams(2.5, -1.0).is_first_kind());
    CHECK(WrightParams(-0.5, 1.0).is_second_kind());
    CHECK_FALSE(WrightParams(-0.5, 1.0).is_first_kind());
    CHECK_THROWS_AS(WrightParams(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(WrightParams(-2.0, 1.0), DomainError);
    CHECK_THROWS_AS(WrightParams(0.5, NAN), DomainError);
}

TEST_CASE("recip_gamma") {
    CHECK(recip_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(recip_gamma(0.5) == doctest::Approx(oracle::kInvSqrtPi).epsilon(1e-15));
    for (double pole : {0.0, -1.0, -2.0, -7.0}) CHECK(recip_gamma(pole) == 0.0);
    for (double x : {-3.5, -0.25, 0.1, 2.75, 30.0, 171.5, 200.0}) {
        const double expect = static_cast<double>(oracle::rgamma(x));
        CHECK(oracle::close_rel(recip_gamma(x), expect, 1e-12, 1e-300));
    }
    // Far left of the axis the reflection stays finite until |1/Gamma| itself overflows.
    CHECK(oracle::close_rel(recip_gamma(-160.5), static_cast<double>(oracle::rgamma(-160.5L)), 1e-12));
    CHECK(std::isinf(recip_gamma(-180.5)));
}

TEST_CASE("log_gamma") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(10.0) == doctest::Approx(oracle::kLnFact9).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("log_recip_gamma carries the sign of 1/Gamma") {
    const LogRecipGamma a = log_recip_gamma(-0.5); // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(a.sign == -1);
    CHECK(std::exp(a.log_abs) == doctest::Approx(1.0 / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
    CHECK(log_recip_gamma(-3.0).sign == 0);
    CHECK(log_recip_gamma(4.0).sign == 1);
}

TEST_CASE("gamma_ratio") {
    CHECK(gamma_ratio(2.0, 1.5) == doctest::Approx(oracle::kTwoOverSqrtPi).epsilon(1e-15));
    CHECK(gamma_ratio(300.5, 300.0) == doctest::Approx(std::exp(std::lgamma(300.5) - std::lgamma(300.0))).epsilon(1e-10));
    CHECK_THROWS_AS(gamma_ratio(-1.0, 1.0), DomainError);
}

TEST_CASE("wright_eval worked examples") {
    const EvalResult e = wright_eval(WrightParams(0.0, 1.0), 1.0, 1e-15);
    CHECK(e.value == doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK(e.abs_error_bound <= 1e-15);

    const EvalResult one = wright_eval(WrightParams(0.5, 1.0), 0.0, 1e-15);
    CHECK(one.value == 1.0);
    CHECK(one.abs_error_bound == 0.0);

    const EvalResult i0 = wright_eval(WrightParams(1.0, 1.0), 1.0, 1e-15);
    CHECK(i0.value == doctest::Approx(oracle::kI0_2).epsilon(1e-15));

    CHECK(wright_eval(WrightParams(0.5, 1.0), 1.0, 1e-15).value ==
          doctest::Approx(oracle::kW_half_1_at_1).epsilon(1e-15));
}

TEST_CASE("wright_eval rejects a nonpositive tolerance") {
    CHECK_THROWS_AS(wright_eval(WrightParams(0.5, 1.0), 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(wright_eval(WrightParams(0.5, 1.0), NAN, 1e-10), DomainError);
}

TEST_CASE("wright_eval reports non-convergence past the term cap") {
    // lambda near -1 makes the terms shrink extremely slowly.
    CHECK_THROWS_AS(wright_eval(WrightParams(-0.999, 1.0), -40.0, 1e-15), NonConvergenceError);
}

TEST_CASE("wright_eval against direct long double summation") {
    for (double lambda : {0.0, 0.3, 0.5, 1.0, 2.0, -0.3, -0.5}) {
        for (double mu : {0.5, 1.0, 2.5}) {
            for (double z : {-4.0, -1.0, 0.3, 2.0, 5.0}) {
                const EvalResult r = wright_eval(WrightParams(lambda, mu), z, 1e-15);
                const double expect = static_cast<double>(oracle::wright_direct(lambda, mu, z));
                CHECK(std::fabs(r.value - expect) <= r.abs_error_bound + 1e-14 * (1.0 + r.magnitude_sum));
            }
        }
    }
}

TEST_CASE("second kind reduces to the Gaussian at lambda = -1/2, mu = 1/2") {
    for (double t : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) {
        const EvalResult r = wright_eval(WrightParams(-0.5, 0.5), -t, 1e-16);
        CHECK(std::fabs(r.value - oracle::gaussian_wright(t)) <= r.abs_error_bound + 8e-16 * r.magnitude_sum + 1e-17);
    }
}

TEST_CASE("ml_eval") {
    CHECK(ml_eval(1.0, 1.0, 1.0, 1e-15).value == doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK(ml_eval(1.0, 2.0, 0.0, 1e-15).value == 1.0);
    CHECK(ml_eval(1.0, 2.0, 1.0, 1e-15).value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-15));
    for (double s : {0.5, 1.0, 2.0}) {
        CHECK(ml_eval(0.5, 1.0, -s, 1e-16).value == doctest::Approx(oracle::erfc_scaled(s)).epsilon(1e-13));
    }
    CHECK(ml_eval(0.7, 1.3, -2.0, 1e-15).value ==
          doctest::Approx(static_cast<double>(oracle::ml_direct(0.7L, 1.3L, -2.0L))).epsilon(1e-12));
    // alpha = 0: geometric series and its continuation.
    CHECK(ml_eval(0.0, 2.0, -1.0, 1e-15).value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(ml_eval(0.0, 1.0, 1.0, 1e-15), DomainError);
    CHECK_THROWS_AS(ml_eval(-0.5, 1.0, 0.5, 1e-15), DomainError);
}

TEST_CASE("tricomi_c0") {
    CHECK(tricomi_c0(0.0, 1e-15).value == 1.0);
    CHECK(tricomi_c0(1.0, 1e-15).value == doctest::Approx(oracle::kI0_2).epsilon(1e-15));
    CHECK(tricomi_c0(-1.0, 1e-15).value == doctest::Approx(oracle::kJ0_2).epsilon(1e-14));
    CHECK(tricomi_c0(2.0, 1e-15).value == doctest::Approx(oracle::kI0_2sqrt2).epsilon(1e-15));
}

TEST_CASE("Bessel family worked examples") {
    CHECK(bessel_j_wright(0.0, 0.0, 1e-15).value == 1.0);
    CHECK(bessel_j_wright(1.0, 0.0, 1e-15).value == 0.0);
    CHECK(bessel_j_wright(0.0, 2.0, 1e-15).value == doctest::Approx(oracle::kJ0_2).epsilon(1e-14));

    CHECK(bessel_i_wright(0.0, 0.0, 1e-15).value == 1.0);
    CHECK(bessel_i_wright(0.0, 2.0, 1e-15).value == doctest::Approx(oracle::kI0_2).epsilon(1e-15));
    CHECK(bessel_i_wright(2.0, 0.0, 1e-15).value == 0.0);

    CHECK(bessel_clifford(0.0, 0.0, 1e-15).value == 1.0);
    CHECK(bessel_clifford(0.0, 1.0, 1e-15).value == doctest::Approx(oracle::kJ0_2).epsilon(1e-14));
    CHECK(bessel_clifford(1.0, 0.0, 1e-15).value == 1.0);

    CHECK(tricomi_jt(0.0, 0.0, 1e-15).value == 1.0);
    CHECK(tricomi_jt(0.0, 2.0, 1e-15).value == doctest::Approx(oracle::kJ0_2).epsilon(1e-14));
    CHECK(tricomi_jt(1.0, 0.0, 1e-15).value == 1.0);

    CHECK(wright_gen_bessel(1.0, 0.0, 2.0, 1e-15).value == doctest::Approx(oracle::kJ0_2).epsilon(1e-14));
    CHECK(wright_gen_bessel(0.5, 0.0, 0.0, 1e-15).value == 1.0);
    CHECK(wright_gen_bessel(1.0, 1.0, 0.0, 1e-15).value == 0.0);
}

TEST_CASE("Bessel family domain gates") {
    CHECK_THROWS_AS(bessel_j_wright(0.5, -1.0, 1e-15), DomainError);
    CHECK_THROWS_AS(bessel_i_wright(0.5, -1.0, 1e-15), DomainError);
    CHECK_THROWS_AS(wright_gen_bessel(1.0, 0.5, -1.0, 1e-15), DomainError);
    CHECK_THROWS_AS(wright_gen_bessel(-0.5, 0.0, 1.0, 1e-15), DomainError);
    CHECK_THROWS_AS(bessel_j_wright(-1.0, 1.0, 1e-15), DomainError);
    // integer order: J_n(-z) = (-1)^n J_n(z)
    CHECK(bessel_j_wright(1.0, -2.0, 1e-15).value == doctest::Approx(-oracle::bessel_j(1.0, 2.0)).epsilon(1e-14));
}

TEST_CASE("Bessel family against Boost on [0, 10]") {
    for (double nu : {0.0, 0.5, 1.0, 2.5}) {
        for (int i = 0; i <= 20; ++i) {
            const double z = 0.5 * i;
            const EvalResult j = bessel_j_wright(nu, z, 1e-16);
            const EvalResult in = bessel_i_wright(nu, z, 1e-16);
            CHECK(std::fabs(j.value - oracle::bessel_j(nu, z)) <= 1e-12);
            CHECK(oracle::close_rel(in.value, oracle::bessel_i(nu, z), 1e-13, 1e-300));
        }
    }
}
