#include "oracles.hpp"

#include "wrightfrac/errors.hpp"
#include "wrightfrac/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace wrightfrac;

namespace {

GenPowerSeries poly(std::vector<Term> terms) {
    return GenPowerSeries("t", std::move(terms));
}

void check_terms(const GenPowerSeries& s, const std::vector<Term>& expect, double rel = 1e-15) {
    REQUIRE(s.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(s.terms()[i].exponent == doctest::Approx(expect[i].exponent).epsilon(1e-14));
        CHECK(s.terms()[i].coeff == doctest::Approx(expect[i].coeff).epsilon(rel));
    }
}

} // namespace

TEST_CASE("normal form") {
    const GenPowerSeries s = poly({{2.0, 1.0}, {0.0, 3.0}, {1.0, 0.0}, {1.5, 1.0 + 1e-14}, {4.0, 1e-13}});
    // 1e-13 snaps to 0 and merges with the constant; 1 + 1e-14 merges with 1; the zero is dropped.
    check_terms(s, {{5.0, 0.0}, {3.5, 1.0}});
    CHECK(normalize_terms(std::vector<Term>(s.terms().begin(), s.terms().end())) ==
          std::vector<Term>(s.terms().begin(), s.terms().end()));
    CHECK(poly({{1.0, 1.0}, {-1.0, 1.0}}).empty());
}

TEST_CASE("constructor rejects negative exponents unless allowed") {
    CHECK_THROWS_AS(poly({{1.0, -0.5}}), InvariantViolation);
    CHECK_NOTHROW(GenPowerSeries("t", {{1.0, -0.5}}, NegativeExponents::allow));
    CHECK_THROWS_AS(poly({{NAN, 1.0}}), InvariantViolation);
}

TEST_CASE("wright_series worked examples") {
    check_terms(wright_series({WrightParams(0.3, 1.0), 1, 0.3, 1}), {{1.0, 0.0}});
    check_terms(wright_series({WrightParams(1.0, 1.0), 1, 1.0, 3}), {{1.0, 0.0}, {1.0, 1.0}, {0.25, 2.0}});
    check_terms(wright_series({WrightParams(0.5, 0.5), -1, 0.5, 2}), {{oracle::kInvSqrtPi, 0.0}, {-1.0, 0.5}});
}

TEST_CASE("SeriesSpec validation") {
    CHECK_THROWS_AS(wright_series({WrightParams(1.0, 1.0), 2, 1.0, 3}), DomainError);
    CHECK_THROWS_AS(wright_series({WrightParams(1.0, 1.0), 1, 0.0, 3}), DomainError);
    CHECK_THROWS_AS(wright_series({WrightParams(1.0, 1.0), 1, 1.0, 0}), DomainError);
}

TEST_CASE("wright_series coefficients against the gamma oracle") {
    const GenPowerSeries s = wright_series({WrightParams(0.35, 0.7), -1, 0.6, 12});
    REQUIRE(s.size() == 12);
    long double fact = 1.0L;
    for (int k = 0; k < 12; ++k) {
        if (k > 0) fact *= k;
        const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
        const double expect = static_cast<double>(sign / (fact * oracle::gamma(0.35L * k + 0.7L)));
        CHECK(s.terms()[k].coeff == doctest::Approx(expect).epsilon(1e-14));
        CHECK(s.terms()[k].exponent == doctest::Approx(0.6 * k).epsilon(1e-15));
    }
}

TEST_CASE("higher_order_series worked examples") {
    check_terms(higher_order_series(1.0, 1.0, 2), {{1.0, 0.0}, {1.0, 1.0}});
    check_terms(higher_order_series(0.5, 1.0, 1), {{1.0, 0.0}});
    check_terms(higher_order_series(0.5, 0.5, 2), {{oracle::kInvSqrtPi, 0.0}, {1.0, 0.5}});
    CHECK_THROWS_AS(higher_order_series(0.0, 1.0, 2), DomainError);
    CHECK_THROWS_AS(higher_order_series(0.5, 0.0, 2), DomainError);
}

TEST_CASE("series_eval") {
    const GenPowerSeries s = poly({{1.0, 0.0}, {1.0, 1.0}, {0.25, 2.0}});
    CHECK(series_eval(s, 0.0) == 1.0);
    CHECK(series_eval(s, 2.0) == 4.0);
    CHECK(series_eval(GenPowerSeries(), 3.0) == 0.0);
    CHECK(series_eval(wright_series({WrightParams(1.0, 1.0), 1, 1.0, 40}), 1.0) ==
          doctest::Approx(oracle::kI0_2).epsilon(1e-15));
    CHECK_THROWS_AS(series_eval(s, -1.0), DomainError);
    const GenPowerSeries singular("t", {{1.0, -0.5}}, NegativeExponents::allow);
    CHECK_THROWS_AS(series_eval(singular, 0.0), DomainError);
    CHECK(series_eval(singular, 4.0) == doctest::Approx(0.5));
}

TEST_CASE("series_derivative") {
    CHECK(series_derivative(poly({{3.0, 0.0}})).empty());
    check_terms(series_derivative(poly({{1.0, 0.0}, {1.0, 1.0}, {0.25, 2.0}})), {{1.0, 0.0}, {0.5, 1.0}});
    CHECK_THROWS_AS(series_derivative(poly({{1.0, 0.5}})), InvariantViolation);
    check_terms(series_derivative(poly({{1.0, 0.5}}), NegativeExponents::allow), {{0.5, -0.5}});
}

TEST_CASE("series_mul_power") {
    check_terms(series_mul_power(poly({{1.0, 0.0}}), 2.0), {{1.0, 2.0}});
    check_terms(series_mul_power(poly({{1.0, 1.0}}), -1.0), {{1.0, 0.0}});
    check_terms(series_mul_power(poly({{1.0, 0.0}, {1.0, 0.5}}), 0.5), {{1.0, 0.5}, {1.0, 1.0}});
    CHECK_THROWS_AS(series_mul_power(poly({{1.0, 0.5}}), -1.0), InvariantViolation);
}

TEST_CASE("series_linear_combine") {
    CHECK(series_linear_combine(1.0, poly({{1.0, 0.0}, {1.0, 1.0}}), -1.0, poly({{1.0, 0.0}, {1.0, 1.0}})).empty());
    check_terms(series_linear_combine(2.0, poly({{1.0, 1.0}}), 3.0, poly({{1.0, 2.0}})), {{2.0, 1.0}, {3.0, 2.0}});
    const GenPowerSeries r =
        series_linear_combine(1.0, poly({{1.0, 0.5 + 1e-14}}), -1.0, poly({{1.0, 0.5}}), 1e-12);
    CHECK(r.max_abs_coeff() <= 1e-15);
    CHECK_THROWS_AS(series_linear_combine(1.0, poly({{1.0, 1.0}}), 1.0, GenPowerSeries("x", {{1.0, 1.0}})),
                    std::invalid_argument);
}

TEST_CASE("truncated_through and renamed") {
    const GenPowerSeries s = poly({{1.0, 0.0}, {2.0, 0.5}, {3.0, 1.0}});
    check_terms(s.truncated_through(0.5), {{1.0, 0.0}, {2.0, 0.5}});
    CHECK(s.renamed("x").var() == "x");
    CHECK(s.min_exponent() == 0.0);
    CHECK(s.max_exponent() == 1.0);
    CHECK(s.evaluable_at_zero());
}
