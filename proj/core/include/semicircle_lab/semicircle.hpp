#pragma once

#include <complex>

namespace semicircle_lab::semicircle {

/// g(x) = sqrt(4 - x^2) / (2 pi) on [-2, 2], zero elsewhere.
double density(double x) noexcept;

/// G(x) = 1/2 + x sqrt(4 - x^2) / (4 pi) + asin(x/2) / pi, clamped to [0,1].
double cdf(double x) noexcept;

/// Even moments are Catalan numbers C_{k/2}; odd moments vanish. Exact for
/// k <= 60 (the values are integers below 2^53 up to C_30).
double catalan_moment(unsigned k);

/// s(z) = (-z + sqrt(z^2 - 4)) / 2 on the branch with Im s > 0.
/// Throws DomainError unless Im z > 0.
std::complex<double> stieltjes(std::complex<double> z);

}  // namespace semicircle_lab::semicircle
