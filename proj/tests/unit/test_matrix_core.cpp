#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "semicircle_lab/conditions.hpp"
#include "semicircle_lab/ensembles.hpp"
#include "semicircle_lab/error.hpp"
#include "semicircle_lab/spectra.hpp"
#include "semicircle_lab/truncation.hpp"
#include "test_support.hpp"

using namespace semicircle_lab;

TEST_CASE("from_upper places values symmetrically")
{
    const std::vector<double> one{3.0};
    const auto m1 = SymmetricMatrix::from_upper(1, one);
    CHECK(m1.size() == 1);
    CHECK(m1(0, 0) == 3.0);

    const std::vector<double> two{0.0, 1.0, 0.0};
    const auto m2 = SymmetricMatrix::from_upper(2, two);
    CHECK(m2(0, 0) == 0.0);
    CHECK(m2(0, 1) == 1.0);
    CHECK(m2(1, 0) == 1.0);
    CHECK(m2(1, 1) == 0.0);
}

TEST_CASE("from_upper rejects bad input")
{
    const std::vector<double> short_list{1.0, 2.0};
    CHECK_THROWS_AS(SymmetricMatrix::from_upper(2, short_list), SizeError);
    const std::vector<double> nan_list{0.0, NAN, 1.0};
    CHECK_THROWS_AS(SymmetricMatrix::from_upper(2, nan_list), ValidationError);
    CHECK_THROWS_AS(SymmetricMatrix(0), SizeError);
}

TEST_CASE("symmetry holds exactly for generated matrices")
{
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 2u, 17u, 64u}) {
        const auto m = lab_test::random_symmetric(n, rng);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE(m(i, j) == m(j, i));
            }
        }
        const auto upper = m.upper();
        CHECK(SymmetricMatrix::from_upper(n, upper) == m);
        CHECK(upper.size() == upper_size(n));
        CHECK(upper[upper_index(n, n - 1, n - 1)] == m(n - 1, n - 1));
    }
}

TEST_CASE("lindeberg_ratio examples")
{
    const std::vector<double> two{2.0};
    CHECK(lindeberg_ratio(SymmetricMatrix::from_upper(1, two), 1.0) == doctest::Approx(4.0));

    const std::vector<double> off{0.0, 3.0, 0.0};
    CHECK(lindeberg_ratio(SymmetricMatrix::from_upper(2, off), 2.0) == doctest::Approx(4.5));

    std::mt19937_64 rng(1);
    const auto small = lab_test::random_symmetric(8, rng, 0.01);
    CHECK(lindeberg_ratio(small, 1.0) == 0.0);

    CHECK_THROWS_AS(lindeberg_ratio(small, 0.0), DomainError);
    CHECK_THROWS_AS(lindeberg_ratio(small, -1.0), DomainError);
}

TEST_CASE("lindeberg_ratio is nonincreasing in tau")
{
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto m = lab_test::random_symmetric(16, rng, 2.0);
        double previous = INFINITY;
        for (double tau = 0.01; tau < 3.0; tau += 0.01) {
            const double value = lindeberg_ratio(m, tau);
            REQUIRE(value <= previous);
            REQUIRE(value >= 0.0);
            previous = value;
        }
    }
}

TEST_CASE("truncation_sequence")
{
    CHECK(truncation_sequence(1) == 1.0);
    CHECK(truncation_sequence(256) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(truncation_sequence(65536) == doctest::Approx(0.25).epsilon(1e-15));
    double previous = 2.0;
    for (std::size_t n = 1; n < 5000; n += 7) {
        const double tau = truncation_sequence(n);
        CHECK(tau < previous);
        previous = tau;
    }
    CHECK(truncation_sequence(1 << 20) * std::sqrt(double(1 << 20)) > 100.0);
}

TEST_CASE("truncate examples")
{
    std::mt19937_64 rng(3);
    const auto small = lab_test::random_symmetric(6, rng, 0.1);
    const auto t = truncate(small, 1.0);
    CHECK(t.hat == small);
    CHECK(t.check == SymmetricMatrix(6));

    const std::vector<double> five{5.0};
    const auto t1 = truncate(SymmetricMatrix::from_upper(1, five), 1.0);
    CHECK(t1.hat(0, 0) == 0.0);
    CHECK(t1.check(0, 0) == 5.0);

    CHECK_THROWS_AS(truncate(small, 0.0), DomainError);
}

TEST_CASE("truncate centering")
{
    const std::vector<double> upper{9.0, 0.2, 0.4, 7.0, 0.6, 8.0};
    const auto m = SymmetricMatrix::from_upper(3, upper);
    const auto empirical = truncate(m, 1.0);  // level sqrt(3)
    CHECK(empirical.centering == doctest::Approx(0.4));
    CHECK(empirical.centered(0, 1) == doctest::Approx(-0.2));
    CHECK(empirical.centered(0, 0) == doctest::Approx(-0.4));

    const auto analytic = truncate(m, 1.0, 0.0);
    CHECK(analytic.centering == 0.0);
    CHECK(analytic.centered == analytic.hat);
}

TEST_CASE("truncate reassembles gaussian realizations bit-exactly")
{
    const std::size_t n = 64;
    const double tau = truncation_sequence(n);
    const double level = tau * std::sqrt(double(n));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto m = sample(make_spec(EnsembleKind::gaussian, n, {}, 0.0, seed));
        const auto t = truncate(m, tau);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE(t.hat(i, j) + t.check(i, j) == m(i, j));
                REQUIRE(std::abs(t.hat(i, j)) < level);
                if (t.check(i, j) != 0.0) {
                    REQUIRE(std::abs(t.check(i, j)) >= level);
                }
            }
        }
    }
}

TEST_CASE("perturbation bound examples")
{
    std::mt19937_64 rng(5);
    const auto x = lab_test::random_symmetric(5, rng);
    const auto zero = truncation_perturbation_check(x, SymmetricMatrix(5), {0.0, 1.0});
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.holds(5));

    const std::vector<double> z0{0.0}, d1{1.0};
    const auto single = truncation_perturbation_check(SymmetricMatrix::from_upper(1, z0),
                                                      SymmetricMatrix::from_upper(1, d1), {0.0, 1.0});
    // |1/(-i) - 1/(1-i)| = |i - (1+i)/2|
    CHECK(single.lhs == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(single.rhs == doctest::Approx(1.0));
    CHECK(single.holds(1));

    CHECK_THROWS_AS(truncation_perturbation_check(x, SymmetricMatrix(5), {0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(truncation_perturbation_check(x, SymmetricMatrix(4), {0.0, 1.0}), SizeError);
}

TEST_CASE("perturbation bound holds on random pairs")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> scale(0.01, 3.0);
    for (int rep = 0; rep < 100; ++rep) {
        const auto x = lab_test::random_symmetric(32, rng);
        const auto d = lab_test::random_symmetric(32, rng, scale(rng));
        const auto bound = truncation_perturbation_check(x, d, {0.5, 1.0});
        REQUIRE(bound.holds(32));
    }
}

TEST_CASE("b_values")
{
    for (double b : b_values(profile_constant(9))) {
        CHECK(b == 1.0);
    }
    const std::vector<double> upper{0.0, 2.0, 0.0};
    const auto b2 = b_values(VarianceProfile::from_upper(2, upper));
    CHECK(b2[0] == 1.0);
    CHECK(b2[1] == 1.0);

    const auto block = b_values(profile_block(8));
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(block[i] == doctest::Approx(i < 4 ? 1.0 : 0.625));
    }
}

TEST_CASE("check_conditions")
{
    const auto constant = check_conditions(profile_constant(32), 0.5, 0.0);
    CHECK(constant.avg_b_deviation == 0.0);
    CHECK(constant.max_b_deviation == 0.0);
    CHECK(constant.max_b == 1.0);
    CHECK(constant.all_pass());

    const std::size_t n = 64;
    const auto block = check_conditions(profile_block(n), truncation_sequence(n), 0.0);
    CHECK(block.avg_b_deviation == doctest::Approx(0.5 * (0.5 - 1.0 / n)).epsilon(1e-12));
    CHECK_FALSE(block.avg_b_pass);
    CHECK_FALSE(block.max_b_deviation_pass);
    CHECK(block.max_b_pass);

    for (std::size_t m : {64u, 128u, 256u}) {
        const auto smooth = check_conditions(profile_smooth(m, 0.5), 0.5, 0.0);
        CHECK(smooth.avg_b_deviation <= 2.0 / double(m));
        CHECK(smooth.all_pass());
    }

    const auto lind = check_conditions(profile_constant(4), 0.5, 0.2);
    CHECK_FALSE(lind.lindeberg_pass);
}

TEST_CASE("average deviation never exceeds the max deviation")
{
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const auto report = check_conditions(lab_test::random_profile(1 + rep % 20, rng), 0.5, 0.0);
        REQUIRE(report.avg_b_deviation <= report.max_b_deviation);
        REQUIRE(report.avg_b_deviation >= 0.0);
        REQUIRE(report.max_b >= 0.0);
    }
}
