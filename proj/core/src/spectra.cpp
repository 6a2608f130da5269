#include "semicircle_lab/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "semicircle_lab/eigensolver.hpp"
#include "semicircle_lab/error.hpp"
#include "semicircle_lab/parallel.hpp"

namespace semicircle_lab {

SpectralDistribution::SpectralDistribution(std::vector<double> lambdas) : lambdas_(std::move(lambdas))
{
    if (lambdas_.empty()) {
        throw ValidationError("SpectralDistribution: no eigenvalues");
    }
    for (double v : lambdas_) {
        if (!std::isfinite(v)) {
            throw ValidationError("SpectralDistribution: non-finite eigenvalue");
        }
    }
    std::sort(lambdas_.begin(), lambdas_.end());
}

double SpectralDistribution::cdf(double x) const noexcept
{
    const auto it = std::upper_bound(lambdas_.begin(), lambdas_.end(), x);
    return static_cast<double>(it - lambdas_.begin()) / static_cast<double>(lambdas_.size());
}

SpectralDistribution esd(const SymmetricMatrix& m)
{
    auto lambdas = eigenvalues(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m.size()));
    for (double& v : lambdas) {
        v *= scale;
    }
    return SpectralDistribution(std::move(lambdas));
}

double esd_eval(const SpectralDistribution& d, double x) noexcept
{
    return d.cdf(x);
}

double empirical_moment(const SpectralDistribution& d, unsigned k)
{
    if (k == 0) {
        throw DomainError("empirical_moment: k must be positive");
    }
    double sum = 0.0;
    for (double v : d.lambdas()) {
        double term = 1.0;
        for (unsigned p = 0; p < k; ++p) {
            term *= v;
        }
        sum += term;
    }
    return sum / static_cast<double>(d.size());
}

std::complex<double> empirical_stieltjes(const SpectralDistribution& d, std::complex<double> z)
{
    if (!(z.imag() > 0.0)) {
        throw DomainError("empirical_stieltjes: Im z must be positive");
    }
    std::complex<double> sum = 0.0;
    for (double v : d.lambdas()) {
        sum += 1.0 / (v - z);
    }
    return sum / static_cast<double>(d.size());
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points)
{
    if (points < 2 || !(hi > lo)) {
        throw ValidationError("linear_grid: need at least 2 points and hi > lo");
    }
    std::vector<double> grid(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;
    return grid;
}

std::vector<double> default_grid()
{
    return linear_grid(-3.0, 3.0, 401);
}

std::vector<SpectralDistribution> sample_spectra(const EnsembleSpec& spec,
                                                 std::span<const std::uint64_t> seeds,
                                                 std::size_t threads)
{
    spec.validate();
    std::vector<SpectralDistribution> out(seeds.size());
    parallel_for(seeds.size(), threads, [&](std::size_t i) {
        out[i] = esd(sample(spec.with_seed(seeds[i])));
    });
    return out;
}

AveragedESD average_on_grid(std::span<const SpectralDistribution> spectra,
                            std::span<const double> grid)
{
    if (spectra.empty()) {
        throw ValidationError("averaged_esd: at least one seed is required");
    }
    if (grid.empty()) {
        throw ValidationError("averaged_esd: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw ValidationError("averaged_esd: grid must be strictly increasing");
        }
    }
    AveragedESD out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.assign(grid.size(), 0.0);
    out.seeds = spectra.size();
    for (const auto& d : spectra) {
        for (std::size_t g = 0; g < grid.size(); ++g) {
            out.values[g] += d.cdf(grid[g]);
        }
    }
    for (double& v : out.values) {
        v /= static_cast<double>(spectra.size());
    }
    return out;
}

AveragedESD averaged_esd(const EnsembleSpec& spec, std::span<const std::uint64_t> seeds,
                         std::span<const double> grid, std::size_t threads)
{
    if (seeds.empty()) {
        throw ValidationError("averaged_esd: at least one seed is required");
    }
    const auto spectra = sample_spectra(spec, seeds, threads);
    return average_on_grid(spectra, grid);
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count)
{
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t i = 0; i < count; ++i) {
        seeds[i] = base + i;
    }
    return seeds;
}

}  // namespace semicircle_lab
