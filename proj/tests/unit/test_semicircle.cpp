#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "doctest.h"
#include "semicircle_lab/error.hpp"
#include "semicircle_lab/semicircle.hpp"

using namespace semicircle_lab;

namespace {

// Composite Simpson on the substitution x = 2 sin(theta), which turns
// integrals against g into integrals of a smooth periodic-like function.
template <class F>
auto integrate_against_density(F f, double lo = -2.0, double hi = 2.0, int panels = 20000)
{
    const double a = std::asin(lo / 2.0);
    const double b = std::asin(hi / 2.0);
    const double h = (b - a) / panels;
    using R = decltype(f(0.0));
    R sum = R(0);
    for (int i = 0; i <= panels; ++i) {
        const double theta = a + h * i;
        const double c = std::cos(theta);
        const R value = f(2.0 * std::sin(theta)) * (2.0 * c * c / M_PI);
        const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += value * w;
    }
    return sum * (h / 3.0);
}

}  // namespace

TEST_CASE("density values")
{
    CHECK(semicircle::density(0.0) == doctest::Approx(0.31830988618379067).epsilon(1e-14));
    CHECK(semicircle::density(2.0) == 0.0);
    CHECK(semicircle::density(-2.0) == 0.0);
    CHECK(semicircle::density(3.0) == 0.0);
    CHECK(semicircle::density(1.0) == doctest::Approx(0.27566444771089604).epsilon(1e-14));
    for (double x = -2.5; x <= 2.5; x += 0.01) {
        REQUIRE(semicircle::density(x) == semicircle::density(-x));
    }
}

TEST_CASE("density integrates to one")
{
    CHECK(integrate_against_density([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cdf values")
{
    CHECK(semicircle::cdf(0.0) == 0.5);
    CHECK(semicircle::cdf(-2.0) == 0.0);
    CHECK(semicircle::cdf(-7.0) == 0.0);
    CHECK(semicircle::cdf(2.0) == 1.0);
    CHECK(semicircle::cdf(7.0) == 1.0);
    // quadrature oracle value of the integral of g over [-2, 1]
    CHECK(std::abs(semicircle::cdf(1.0) - 0.804498890522115) < 1e-10);
}

TEST_CASE("cdf agrees with quadrature and is monotone")
{
    double previous = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = -2.5 + 5.0 * i / 10000.0;
        const double g = semicircle::cdf(x);
        REQUIRE(g >= previous);
        REQUIRE(std::abs(g + semicircle::cdf(-x) - 1.0) <= 1e-12);
        previous = g;
    }
    for (double x = -1.95; x < 2.0; x += 0.05) {
        const double quad = integrate_against_density([](double) { return 1.0; }, -2.0, x, 2000);
        REQUIRE(std::abs(quad - semicircle::cdf(x)) <= 1e-8);
    }
}

TEST_CASE("catalan moments")
{
    CHECK(semicircle::catalan_moment(0) == 1.0);
    CHECK(semicircle::catalan_moment(2) == 1.0);
    CHECK(semicircle::catalan_moment(4) == 2.0);
    CHECK(semicircle::catalan_moment(6) == 5.0);
    CHECK(semicircle::catalan_moment(8) == 14.0);
    CHECK(semicircle::catalan_moment(3) == 0.0);
    CHECK(semicircle::catalan_moment(60) == 3814986502092304.0);
    for (unsigned m = 0; m <= 15; ++m) {
        const double cm = semicircle::catalan_moment(2 * m);
        REQUIRE(semicircle::catalan_moment(2 * m + 2) == cm * 2.0 * (2.0 * m + 1.0) / (m + 2.0));
    }
}

TEST_CASE("moments of g are Catalan numbers")
{
    for (unsigned k = 0; k <= 8; ++k) {
        const double quad = integrate_against_density([k](double x) { return std::pow(x, k); });
        CHECK(std::abs(quad - semicircle::catalan_moment(k)) <= 1e-8);
    }
}

TEST_CASE("stieltjes values")
{
    const auto s1 = semicircle::stieltjes({0.0, 1.0});
    CHECK(std::abs(s1.real()) < 1e-15);
    CHECK(s1.imag() == doctest::Approx(0.618033988749885).epsilon(1e-12));
    const auto s2 = semicircle::stieltjes({0.0, 2.0});
    CHECK(s2.imag() == doctest::Approx(0.41421356237309265).epsilon(1e-12));
    CHECK_THROWS_AS(semicircle::stieltjes({1.0, 0.0}), DomainError);
}

TEST_CASE("stieltjes matches quadrature of g/(x - z)")
{
    for (std::complex<double> z : {std::complex<double>{0.5, 1.0}, {-1.5, 0.3}, {3.0, 0.5}, {0.0, 4.0}}) {
        const auto quad = integrate_against_density([z](double x) { return 1.0 / (x - z); });
        CHECK(std::abs(quad - semicircle::stieltjes(z)) < 1e-9);
    }
}

TEST_CASE("stieltjes branch and asymptotics")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> re(-10.0, 10.0);
    std::uniform_real_distribution<double> im(1e-3, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const std::complex<double> z{re(rng), im(rng)};
        const auto s = semicircle::stieltjes(z);
        REQUIRE(s.imag() > 0.0);
        REQUIRE(std::abs(s * s + z * s + 1.0) <= 1e-12 * std::max(1.0, std::abs(z)));
    }
    for (double angle = 0.1; angle < M_PI; angle += 0.3) {
        const std::complex<double> z = std::polar(1000.0, angle);
        CHECK(std::abs(semicircle::stieltjes(z) + 1.0 / z) <= 2e-6);
    }
}
