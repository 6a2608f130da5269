#include "semicircle_lab/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "semicircle_lab/error.hpp"
#include "semicircle_lab/parallel.hpp"
#include "semicircle_lab/rng.hpp"
#include "semicircle_lab/spectra.hpp"

namespace semicircle_lab {

SymmetricMatrix z_matrix(const SymmetricMatrix& x, const SymmetricMatrix& y, double phi)
{
    if (x.size() != y.size()) {
        throw SizeError("z_matrix: dimension mismatch");
    }
    if (!(phi >= 0.0 && phi <= half_pi)) {
        throw DomainError("z_matrix: phi must lie in [0, pi/2]");
    }
    if (phi == 0.0) {
        return x;
    }
    if (phi == half_pi) {
        return y;
    }
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const std::size_t n = x.size();
    SymmetricMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out.set(i, j, c * x(i, j) + s * y(i, j));
        }
    }
    return out;
}

std::uint64_t role_seed(std::uint64_t seed, PairRole role) noexcept
{
    return derive_seed(seed, static_cast<std::uint64_t>(role));
}

namespace {

void require_upper(std::complex<double> z)
{
    if (!(z.imag() > 0.0)) {
        throw DomainError("Stieltjes transform requires Im z > 0");
    }
}

void require_pair(const EnsembleSpec& x, const EnsembleSpec& y)
{
    x.validate();
    y.validate();
    if (x.size() != y.size()) {
        throw SizeError("interpolation: ensembles must share n");
    }
}

struct Moments {
    std::complex<double> mean;
    double standard_error = 0.0;
};

// Sums in index order so the result does not depend on the thread count.
Moments summarize(std::span<const std::complex<double>> values)
{
    Moments m;
    const double count = static_cast<double>(values.size());
    std::complex<double> sum = 0.0;
    for (auto v : values) {
        sum += v;
    }
    m.mean = sum / count;
    if (values.size() > 1) {
        double ss = 0.0;
        for (auto v : values) {
            ss += std::norm(v - m.mean);
        }
        m.standard_error = std::sqrt(ss / (count - 1.0) / count);
    }
    return m;
}

}  // namespace

std::vector<PathSample> stieltjes_path(const EnsembleSpec& spec_x, const EnsembleSpec& spec_y,
                                       std::span<const double> phis,
                                       std::span<const std::complex<double>> zs,
                                       std::span<const std::uint64_t> seeds, std::size_t threads)
{
    require_pair(spec_x, spec_y);
    if (seeds.empty()) {
        throw ValidationError("stieltjes_path: at least one seed is required");
    }
    for (auto z : zs) {
        require_upper(z);
    }
    for (double phi : phis) {
        if (!(phi >= 0.0 && phi <= half_pi)) {
            throw DomainError("stieltjes_path: phi must lie in [0, pi/2]");
        }
    }

    const std::size_t points = phis.size() * zs.size();
    // values[seed][phi * |zs| + z]
    std::vector<std::vector<std::complex<double>>> values(seeds.size());
    parallel_for(seeds.size(), threads, [&](std::size_t s) {
        const auto x = sample(spec_x.with_seed(role_seed(seeds[s], PairRole::x)));
        const auto y = sample(spec_y.with_seed(role_seed(seeds[s], PairRole::y)));
        auto& row = values[s];
        row.resize(points);
        for (std::size_t p = 0; p < phis.size(); ++p) {
            const auto d = esd(z_matrix(x, y, phis[p]));
            for (std::size_t q = 0; q < zs.size(); ++q) {
                row[p * zs.size() + q] = empirical_stieltjes(d, zs[q]);
            }
        }
    });

    std::vector<PathSample> out;
    out.reserve(points);
    std::vector<std::complex<double>> column(seeds.size());
    for (std::size_t p = 0; p < phis.size(); ++p) {
        for (std::size_t q = 0; q < zs.size(); ++q) {
            for (std::size_t s = 0; s < seeds.size(); ++s) {
                column[s] = values[s][p * zs.size() + q];
            }
            const auto m = summarize(column);
            out.push_back({phis[p], zs[q], m.mean, m.standard_error, seeds.size()});
        }
    }
    return out;
}

PathSample stieltjes_at(const EnsembleSpec& spec_x, const EnsembleSpec& spec_y, double phi,
                        std::complex<double> z, std::span<const std::uint64_t> seeds,
                        std::size_t threads)
{
    const double phis[] = {phi};
    const std::complex<double> zs[] = {z};
    return stieltjes_path(spec_x, spec_y, phis, zs, seeds, threads).front();
}

namespace {

std::vector<std::complex<double>> mean_stieltjes_grid(const EnsembleSpec& spec,
                                                      std::span<const std::complex<double>> zs,
                                                      std::span<const std::uint64_t> seeds,
                                                      PairRole role, std::size_t threads)
{
    spec.validate();
    if (seeds.empty()) {
        throw ValidationError("mean_stieltjes: at least one seed is required");
    }
    for (auto z : zs) {
        require_upper(z);
    }
    std::vector<std::vector<std::complex<double>>> values(seeds.size());
    parallel_for(seeds.size(), threads, [&](std::size_t s) {
        const auto d = esd(sample(spec.with_seed(role_seed(seeds[s], role))));
        values[s].resize(zs.size());
        for (std::size_t q = 0; q < zs.size(); ++q) {
            values[s][q] = empirical_stieltjes(d, zs[q]);
        }
    });
    std::vector<std::complex<double>> out(zs.size());
    std::vector<std::complex<double>> column(seeds.size());
    for (std::size_t q = 0; q < zs.size(); ++q) {
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            column[s] = values[s][q];
        }
        out[q] = summarize(column).mean;
    }
    return out;
}

}  // namespace

std::complex<double> mean_stieltjes(const EnsembleSpec& spec, std::complex<double> z,
                                    std::span<const std::uint64_t> seeds, PairRole role,
                                    std::size_t threads)
{
    const std::complex<double> zs[] = {z};
    return mean_stieltjes_grid(spec, zs, seeds, role, threads).front();
}

std::vector<std::complex<double>> default_z_grid()
{
    return {{-2.0, 1.0}, {-1.0, 1.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}};
}

double universality_gap(const EnsembleSpec& spec_x, const EnsembleSpec& spec_y,
                        std::span<const std::complex<double>> z_grid,
                        std::span<const std::uint64_t> seeds, std::size_t threads,
                        PairRole x_role, PairRole y_role)
{
    require_pair(spec_x, spec_y);
    const auto sx = mean_stieltjes_grid(spec_x, z_grid, seeds, x_role, threads);
    const auto sy = mean_stieltjes_grid(spec_y, z_grid, seeds, y_role, threads);
    double gap = 0.0;
    for (std::size_t q = 0; q < z_grid.size(); ++q) {
        gap = std::max(gap, std::abs(sx[q] - sy[q]));
    }
    return gap;
}

}  // namespace semicircle_lab
