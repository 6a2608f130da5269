#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "semicircle_lab/error.hpp"
#include "semicircle_lab/interpolation.hpp"
#include "semicircle_lab/spectra.hpp"
#include "test_support.hpp"

using namespace semicircle_lab;

TEST_CASE("z_matrix endpoints and the diagonal direction")
{
    std::mt19937_64 rng(1);
    const auto x = lab_test::random_symmetric(9, rng);
    const auto y = lab_test::random_symmetric(9, rng);
    CHECK(z_matrix(x, y, 0.0) == x);
    CHECK(z_matrix(x, y, half_pi) == y);

    const auto z = z_matrix(x, x, half_pi / 2.0);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            CHECK(z(i, j) == doctest::Approx(std::sqrt(2.0) * x(i, j)).epsilon(1e-15));
            CHECK(z(i, j) == z(j, i));
        }
    }
    CHECK_THROWS_AS(z_matrix(x, SymmetricMatrix(3), 0.1), SizeError);
    CHECK_THROWS_AS(z_matrix(x, y, -0.1), DomainError);
    CHECK_THROWS_AS(z_matrix(x, y, 1.6), DomainError);
}

TEST_CASE("zero profiles give -1/z along the whole path")
{
    const auto zero = make_spec(EnsembleKind::gaussian, 8, {ProfileRecipe::Type::zero});
    const auto seeds = seed_range(0, 3);
    const std::complex<double> z{0.3, 0.7};
    for (double phi : {0.0, 0.4, half_pi}) {
        const auto sample = stieltjes_at(zero, zero, phi, z, seeds, 1);
        CHECK(std::abs(sample.s + 1.0 / z) < 1e-15);
        CHECK(sample.seeds == 3);
        CHECK(sample.standard_error == 0.0);
    }
}

TEST_CASE("path endpoints equal the standalone estimates bit-exactly")
{
    const auto gx = make_spec(EnsembleKind::rademacher, 40, {}, 0.0, 0);
    const auto gy = make_spec(EnsembleKind::gaussian, 40, {}, 0.0, 0);
    const auto seeds = seed_range(10, 5);
    const std::complex<double> z{0.5, 1.0};
    CHECK(stieltjes_at(gx, gy, 0.0, z, seeds, 2).s == mean_stieltjes(gx, z, seeds, PairRole::x, 1));
    CHECK(stieltjes_at(gx, gy, half_pi, z, seeds, 3).s == mean_stieltjes(gy, z, seeds, PairRole::y, 1));
}

TEST_CASE("Herglotz property along the path")
{
    const auto x = make_spec(EnsembleKind::dependent, 30, {ProfileRecipe::Type::smooth, 0.5}, 0.5, 0);
    const auto y = make_spec(EnsembleKind::gaussian, 30, {ProfileRecipe::Type::smooth, 0.5}, 0.0, 0);
    std::vector<double> phis;
    for (int i = 0; i <= 8; ++i) {
        phis.push_back(half_pi * i / 8.0);
    }
    std::vector<std::complex<double>> zs;
    for (double u = -3.0; u <= 3.0; u += 1.0) {
        for (double v : {0.05, 0.5, 2.0}) {
            zs.emplace_back(u, v);
        }
    }
    const auto seeds = seed_range(0, 4);
    const auto path = stieltjes_path(x, y, phis, zs, seeds, 2);
    CHECK(path.size() == phis.size() * zs.size());
    for (const auto& p : path) {
        REQUIRE(p.s.imag() > 0.0);
        REQUIRE(std::abs(p.s) <= 1.0 / p.z.imag());
    }
    CHECK_THROWS_AS(stieltjes_at(x, y, 0.1, {0.0, 0.0}, seeds), DomainError);
    CHECK_THROWS_AS(stieltjes_at(x, y, 0.1, {0.0, 1.0}, std::vector<std::uint64_t>{}), ValidationError);
    const auto small = make_spec(EnsembleKind::gaussian, 10, {}, 0.0, 0);
    CHECK_THROWS_AS(stieltjes_at(x, small, 0.1, {0.0, 1.0}, seeds), SizeError);
}

TEST_CASE("gaussian pair is invariant under rotation of the path")
{
    const auto g = make_spec(EnsembleKind::gaussian, 64, {}, 0.0, 0);
    const auto seeds = seed_range(0, 40);
    const std::complex<double> z{0.5, 1.0};
    const auto a = stieltjes_at(g, g, 0.0, z, seeds);
    const auto b = stieltjes_at(g, g, half_pi / 2.0, z, seeds);
    const double se = std::hypot(a.standard_error, b.standard_error);
    CHECK(std::abs(a.s - b.s) <= 3.0 * se);
}

TEST_CASE("universality gap")
{
    const auto g = make_spec(EnsembleKind::gaussian, 32, {}, 0.0, 0);
    const auto r = make_spec(EnsembleKind::rademacher, 32, {}, 0.0, 0);
    const auto seeds = seed_range(0, 6);
    const auto grid = default_z_grid();
    CHECK(grid.size() == 5);
    CHECK(universality_gap(g, g, grid, seeds, 1, PairRole::x, PairRole::x) == 0.0);

    const double forward = universality_gap(r, g, grid, seeds, 1);
    const double swapped = universality_gap(g, r, grid, seeds, 2, PairRole::y, PairRole::x);
    CHECK(forward == swapped);
    CHECK(forward > 0.0);
    CHECK(forward < 0.2);
}
