#include "semicircle_lab/semicircle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "semicircle_lab/error.hpp"

namespace semicircle_lab::semicircle {

double density(double x) noexcept
{
    if (!(std::abs(x) < 2.0)) {
        return 0.0;
    }
    return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double cdf(double x) noexcept
{
    if (x <= -2.0) {
        return 0.0;
    }
    if (x >= 2.0) {
        return 1.0;
    }
    const double value = 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) +
                         std::asin(0.5 * x) / std::numbers::pi;
    return std::clamp(value, 0.0, 1.0);
}

double catalan_moment(unsigned k)
{
    if (k % 2 != 0) {
        return 0.0;
    }
    const unsigned m = k / 2;
    // C_{j+1} = C_j * 2(2j+1) / (j+2); the division is exact in integers.
    std::uint64_t exact = 1;  // C_32 * 130 still fits
    unsigned j = 0;
    for (; j < m && j < 33; ++j) {
        exact = exact * (2u * (2u * j + 1u)) / (j + 2u);
    }
    long double value = static_cast<long double>(exact);
    for (; j < m; ++j) {
        value = value * (2.0L * (2.0L * j + 1.0L)) / (j + 2.0L);
    }
    return static_cast<double>(value);
}

std::complex<double> stieltjes(std::complex<double> z)
{
    if (!(z.imag() > 0.0)) {
        throw DomainError("semicircle::stieltjes: Im z must be positive");
    }
    // sqrt(z-2)*sqrt(z+2) behaves like z at infinity on the upper half-plane;
    // s = -2/(z + r) avoids cancellation for large |z|.
    const std::complex<double> r = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
    std::complex<double> s = -2.0 / (z + r);
    if (s.imag() <= 0.0) {
        s = -2.0 / (z - r);
    }
    return s;
}

}  // namespace semicircle_lab::semicircle
