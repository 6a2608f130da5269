#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semicircle_lab/symmetric_matrix.hpp"

namespace semicircle_lab {

/// Symmetric array of entry variances sigma_ij^2 >= 0.
class VarianceProfile {
public:
    VarianceProfile() = default;

    /// Throws ValidationError if any value is negative or non-finite.
    explicit VarianceProfile(SymmetricMatrix sigma2);

    static VarianceProfile from_upper(std::size_t n, std::span<const double> upper);

    std::size_t size() const noexcept { return sigma2_.size(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return sigma2_(i, j); }
    const SymmetricMatrix& matrix() const noexcept { return sigma2_; }

private:
    SymmetricMatrix sigma2_;
};

/// Row averages B_i^2 = (1/n) sum_j sigma_ij^2.
std::vector<double> b_values(const VarianceProfile& profile);

}  // namespace semicircle_lab
