#include "semicircle_lab/variance_profile.hpp"

#include <cmath>
#include <string>

#include "semicircle_lab/error.hpp"

namespace semicircle_lab {

VarianceProfile::VarianceProfile(SymmetricMatrix sigma2) : sigma2_(std::move(sigma2))
{
    for (double v : sigma2_.data()) {
        if (!std::isfinite(v) || v < 0.0) {
            throw ValidationError("VarianceProfile: variances must be finite and nonnegative, got " +
                                  std::to_string(v));
        }
    }
}

VarianceProfile VarianceProfile::from_upper(std::size_t n, std::span<const double> upper)
{
    return VarianceProfile(SymmetricMatrix::from_upper(n, upper));
}

std::vector<double> b_values(const VarianceProfile& profile)
{
    const std::size_t n = profile.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (double v : profile.matrix().row(i)) {
            sum += v;
        }
        out[i] = sum / static_cast<double>(n);
    }
    return out;
}

}  // namespace semicircle_lab
