#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semicircle_lab/ensembles.hpp"
#include "semicircle_lab/symmetric_matrix.hpp"

namespace semicircle_lab {

inline constexpr double half_pi = 1.57079632679489661923;

/// Z(phi) = x cos(phi) + y sin(phi) for phi in [0, pi/2]. The endpoints
/// return x and y exactly.
SymmetricMatrix z_matrix(const SymmetricMatrix& x, const SymmetricMatrix& y, double phi);

/// Side of a paired draw. Seed s gives X from derive_seed(s, x) and Y from
/// derive_seed(s, y), so the two matrices are independent.
enum class PairRole : std::uint64_t { x = 0x58, y = 0x59 };

std::uint64_t role_seed(std::uint64_t seed, PairRole role) noexcept;

struct PathSample {
    double phi = 0.0;
    std::complex<double> z;
    std::complex<double> s;  ///< mean of (1/n) Tr R(z, phi) over seeds
    double standard_error = 0.0;  ///< sqrt(var Re + var Im) / sqrt(seeds)
    std::size_t seeds = 0;
};

/// Monte-Carlo estimate of S(z, phi) along the interpolation path.
PathSample stieltjes_at(const EnsembleSpec& spec_x, const EnsembleSpec& spec_y, double phi,
                        std::complex<double> z, std::span<const std::uint64_t> seeds,
                        std::size_t threads = 0);

/// Same path, several (phi, z) points per realization pair.
std::vector<PathSample> stieltjes_path(const EnsembleSpec& spec_x, const EnsembleSpec& spec_y,
                                       std::span<const double> phis,
                                       std::span<const std::complex<double>> zs,
                                       std::span<const std::uint64_t> seeds,
                                       std::size_t threads = 0);

/// Monte-Carlo Stieltjes transform of one ensemble, drawn with role_seed(s, role).
std::complex<double> mean_stieltjes(const EnsembleSpec& spec, std::complex<double> z,
                                    std::span<const std::uint64_t> seeds, PairRole role,
                                    std::size_t threads = 0);

/// Default z grid: Im z = 1, Re z in {-2, -1, 0, 1, 2}.
std::vector<std::complex<double>> default_z_grid();

/// max over z of |mean S^X(z) - mean S^Y(z)|, X drawn with `x_role` and Y with
/// `y_role` seeds.
double universality_gap(const EnsembleSpec& spec_x, const EnsembleSpec& spec_y,
                        std::span<const std::complex<double>> z_grid,
                        std::span<const std::uint64_t> seeds, std::size_t threads = 0,
                        PairRole x_role = PairRole::x, PairRole y_role = PairRole::y);

}  // namespace semicircle_lab
