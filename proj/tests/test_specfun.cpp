#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helmscat/common.hpp"
#include "helmscat/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace helmscat;
namespace sf = helmscat::specfun;

namespace {

// Power-series oracle for J_l, long double, adequate for small arguments.
long double series_j(int l, long double x)
{
    long double term = 1.0L;
    for (int i = 1; i <= l; ++i) term *= x / (2.0L * i);
    long double sum = term;
    const long double q = x * x / 4.0L;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (static_cast<long double>(m) * (m + l));
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum) + 1e-4000L) break;
    }
    return sum;
}

// Ascending-series oracle for Y_0 and Y_1 (small x).
long double series_y0(long double x)
{
    const long double gamma = 0.5772156649015328606065L;
    const long double pi = 3.141592653589793238462643L;
    const long double q = x * x / 4.0L;
    long double term = 1.0L, h = 0.0L, s = 0.0L;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (static_cast<long double>(m) * m);
        h += 1.0L / m;
        s += -term * h;
        if (std::abs(term) < 1e-22L) break;
    }
    return (2.0L / pi) * ((std::log(x / 2.0L) + gamma) * series_j(0, x) + s);
}

long double series_y1(long double x)
{
    const long double gamma = 0.5772156649015328606065L;
    const long double pi = 3.141592653589793238462643L;
    const long double q = x * x / 4.0L;
    long double t = 1.0L, hm = 0.0L, s = 1.0L;
    for (int m = 1; m < 200; ++m) {
        t *= -q / (static_cast<long double>(m) * (m + 1));
        hm += 1.0L / m;
        s += t * (2.0L * hm + 1.0L / (m + 1));
        if (std::abs(t) < 1e-22L) break;
    }
    return (2.0L / pi) * (std::log(x / 2.0L) + gamma) * series_j(1, x) -
           2.0L / (pi * x) - (x / (2.0L * pi)) * s;
}

} // namespace

TEST_CASE("bessel_j limits at zero argument")
{
    CHECK(sf::bessel_j(0, 0.0) == 1.0);
    CHECK(sf::bessel_j(1, 0.0) == 0.0);
    CHECK(sf::bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("first zero of J_0 located by series oracle + bisection")
{
    // Bracket the first sign change of the series oracle, bisect to 1e-9.
    long double lo = 2.0L, hi = 3.0L;
    REQUIRE(series_j(0, lo) > 0.0L);
    REQUIRE(series_j(0, hi) < 0.0L);
    while (hi - lo > 1e-9L) {
        const long double mid = (lo + hi) / 2.0L;
        (series_j(0, mid) > 0.0L ? lo : hi) = mid;
    }
    const double zero = static_cast<double>((lo + hi) / 2.0L);
    CHECK(zero == doctest::Approx(2.404826).epsilon(1e-6));
    CHECK(std::abs(sf::bessel_j(0, zero)) < 1e-9);
    CHECK(std::abs(sf::bessel_j(0, 2.404826)) < 1e-6);
}

TEST_CASE("bessel_j against power-series oracle, small arguments")
{
    for (int l : {0, 1, 2, 5, 11, 30}) {
        for (double x : {0.1, 0.5, 1.0, 2.0, 4.0, 7.5}) {
            const double ref = static_cast<double>(series_j(l, x));
            if (std::abs(ref) < 1e-250) continue;
            CHECK(sf::bessel_j(l, x) == doctest::Approx(ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("bessel_y small-argument values from the ascending-series oracle")
{
    CHECK(sf::bessel_y(0, 1.0) == doctest::Approx(0.088257).epsilon(2e-5));
    CHECK(sf::bessel_y(1, 1.0) == doctest::Approx(-0.781213).epsilon(2e-5));
    for (double x : {0.1, 0.4, 1.0, 1.9}) {
        CHECK(sf::bessel_y(0, x) ==
              doctest::Approx(static_cast<double>(series_y0(x))).epsilon(1e-12));
        CHECK(sf::bessel_y(1, x) ==
              doctest::Approx(static_cast<double>(series_y1(x))).epsilon(1e-12));
    }
}

TEST_CASE("high-precision oracle sweep, l <= 60, x <= 100")
{
    // libstdc++'s cyl_bessel_j / cyl_neumann are an independent
    // implementation (ascending series + Steed's method).
    for (int l : {0, 1, 2, 3, 5, 8, 13, 21, 34, 47, 60}) {
        for (double x : {0.1, 0.7, 2.3, 5.0, 9.4, 17.0, 31.0, 55.0, 76.0, 100.0}) {
            const double jref = std::cyl_bessel_j(static_cast<double>(l), x);
            if (std::abs(jref) > 1e-280)
                CHECK(sf::bessel_j(l, x) == doctest::Approx(jref).epsilon(1e-12));
            const double yref = std::cyl_neumann(static_cast<double>(l), x);
            CHECK(sf::bessel_y(l, x) == doctest::Approx(yref).epsilon(1e-10));
        }
    }
}

TEST_CASE("Wronskian J_{l+1} Y_l - J_l Y_{l+1} = 2/(pi x)")
{
    for (int l = 0; l <= 30; ++l) {
        for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
            const double w = sf::bessel_j(l + 1, x) * sf::bessel_y(l, x) -
                             sf::bessel_j(l, x) * sf::bessel_y(l + 1, x);
            const double ref = 2.0 / (M_PI * x);
            CHECK(w == doctest::Approx(ref).epsilon(1e-10));
        }
    }
    const double w = sf::bessel_j(1, 1.0) * sf::bessel_y(0, 1.0) -
                     sf::bessel_j(0, 1.0) * sf::bessel_y(1, 1.0);
    CHECK(w == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("three-term recurrence consistency")
{
    for (int l = 1; l <= 40; ++l) {
        for (double x : {0.5, 2.0, 9.4, 33.0}) {
            const auto j = sf::bessel_j_sequence(l + 1, x);
            if (std::abs(j[l + 1]) > 1e-280 && std::abs(j[l - 1]) > 1e-280) {
                const double lhs = j[l + 1];
                const double rhs = (2.0 * l / x) * j[l] - j[l - 1];
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
            }
            const auto y = sf::bessel_y_sequence(l + 1, x);
            const double ylhs = y[l + 1];
            const double yrhs = (2.0 * l / x) * y[l] - y[l - 1];
            CHECK(ylhs == doctest::Approx(yrhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("hankel1 assembles J + iY exactly and reflects negative orders")
{
    for (int l : {0, 1, 2, 9}) {
        for (double x : {0.3, 1.0, 6.0, 20.0}) {
            const cplx h = sf::hankel1(l, x);
            CHECK(h.real() == sf::bessel_j(l, x));
            CHECK(h.imag() == sf::bessel_y(l, x));
        }
    }
    CHECK(sf::hankel1(0, 1.0).real() == doctest::Approx(0.765198).epsilon(2e-5));
    CHECK(sf::hankel1(0, 1.0).imag() == doctest::Approx(0.088257).epsilon(2e-5));
    for (double x : {0.7, 3.0, 12.0}) {
        CHECK(sf::hankel1(-2, x) == sf::hankel1(2, x));
        CHECK(sf::hankel1(-1, x) == -sf::hankel1(1, x));
        CHECK(sf::hankel1(-5, x) == -sf::hankel1(5, x));
    }
}

TEST_CASE("hankel1_derivative matches a central difference")
{
    const double step = 1e-5;
    for (int l : {0, 1, 2, 5}) {
        for (double x : {0.5, 1.0, 5.0, 20.0}) {
            const cplx fd = (sf::hankel1(l, x + step) - sf::hankel1(l, x - step)) / (2.0 * step);
            const cplx d = sf::hankel1_derivative(l, x);
            CHECK(std::abs(d - fd) <= 1e-6 * std::abs(d));
        }
    }
    CHECK(sf::hankel1_derivative(0, 2.5) == -sf::hankel1(1, 2.5));
}

TEST_CASE("domain and overflow errors are explicit")
{
    CHECK_THROWS_AS(sf::bessel_j(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_j(201, 1.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_y(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_y(0, -3.0), std::domain_error);
    CHECK_THROWS_AS(sf::hankel1(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(sf::hankel1(201, 1.0), std::domain_error);
    // Y_200(0.1) is far beyond double range; must be an error, not inf.
    CHECK_THROWS_AS(sf::bessel_y(200, 0.1), std::overflow_error);
}
