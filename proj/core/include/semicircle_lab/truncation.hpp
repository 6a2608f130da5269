#pragma once

#include <complex>
#include <optional>

#include "semicircle_lab/symmetric_matrix.hpp"

namespace semicircle_lab {

struct TruncationResult {
    SymmetricMatrix hat;       ///< x * 1(|x| < tau*sqrt(n))
    SymmetricMatrix check;     ///< x * 1(|x| >= tau*sqrt(n))
    SymmetricMatrix centered;  ///< hat minus the centering constant
    double tau = 0.0;
    double centering = 0.0;    ///< the constant subtracted from every entry of hat
};

/// Splits m into small and large parts at the level tau*sqrt(n).
///
/// `centered` subtracts `analytic_mean` when the ensemble knows the mean of
/// its truncated law; otherwise the empirical mean of the off-diagonal
/// entries of `hat` is used. The constant is subtracted from every entry.
TruncationResult truncate(const SymmetricMatrix& m, double tau,
                          std::optional<double> analytic_mean = std::nullopt);

struct PerturbationBound {
    double lhs = 0.0;  ///< |Tr R(z) - Tr R~(z)|
    double rhs = 0.0;  ///< (Im z)^-2 * (Tr D^2)^(1/2)

    /// lhs <= rhs up to the eigensolver slack 1e-8 * n.
    bool holds(std::size_t n) const noexcept { return lhs <= rhs + 1e-8 * static_cast<double>(n); }
};

/// Compares the resolvent traces of x/sqrt(n) and (x+d)/sqrt(n) at z with
/// the perturbation bound that controls truncation.
PerturbationBound truncation_perturbation_check(const SymmetricMatrix& x,
                                                const SymmetricMatrix& d,
                                                std::complex<double> z);

}  // namespace semicircle_lab
