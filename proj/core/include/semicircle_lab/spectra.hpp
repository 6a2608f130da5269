#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semicircle_lab/ensembles.hpp"
#include "semicircle_lab/symmetric_matrix.hpp"

namespace semicircle_lab {

/// Eigenvalues of n^{-1/2} * X, sorted, with the step CDF they define.
class SpectralDistribution {
public:
    SpectralDistribution() = default;

    /// Sorts `lambdas`; throws ValidationError if empty or non-finite.
    explicit SpectralDistribution(std::vector<double> lambdas);

    std::size_t size() const noexcept { return lambdas_.size(); }
    const std::vector<double>& lambdas() const noexcept { return lambdas_; }

    /// #{lambda_i <= x} / n.
    double cdf(double x) const noexcept;

private:
    std::vector<double> lambdas_;
};

/// Pointwise mean of per-realization ESDs on a fixed grid.
struct AveragedESD {
    std::vector<double> grid;
    std::vector<double> values;
    std::size_t seeds = 0;
};

SpectralDistribution esd(const SymmetricMatrix& m);

double esd_eval(const SpectralDistribution& d, double x) noexcept;

/// (1/n) sum lambda_i^k.
double empirical_moment(const SpectralDistribution& d, unsigned k);

/// (1/n) sum 1/(lambda_i - z). Throws DomainError unless Im z > 0.
std::complex<double> empirical_stieltjes(const SpectralDistribution& d, std::complex<double> z);

/// `points` equispaced values on [lo, hi], both ends included.
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

/// The default evaluation grid: 401 points on [-3, 3].
std::vector<double> default_grid();

/// ESDs of independent realizations, one per seed, in seed order.
std::vector<SpectralDistribution> sample_spectra(const EnsembleSpec& spec,
                                                 std::span<const std::uint64_t> seeds,
                                                 std::size_t threads = 0);

/// Averages precomputed spectra on `grid`.
AveragedESD average_on_grid(std::span<const SpectralDistribution> spectra,
                            std::span<const double> grid);

/// Monte-Carlo estimate of E F^{X}(x) on `grid`. Throws ValidationError on
/// an empty seed list or a grid that is not strictly increasing.
AveragedESD averaged_esd(const EnsembleSpec& spec, std::span<const std::uint64_t> seeds,
                         std::span<const double> grid, std::size_t threads = 0);

/// Seeds base, base+1, ..., base+count-1.
std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count);

}  // namespace semicircle_lab
