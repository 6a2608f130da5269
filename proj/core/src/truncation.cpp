#include "semicircle_lab/truncation.hpp"

#include <cmath>

#include "semicircle_lab/eigensolver.hpp"
#include "semicircle_lab/error.hpp"

namespace semicircle_lab {

TruncationResult truncate(const SymmetricMatrix& m, double tau, std::optional<double> analytic_mean)
{
    if (!(tau > 0.0)) {
        throw DomainError("truncate: tau must be positive");
    }
    const std::size_t n = m.size();
    const double level = tau * std::sqrt(static_cast<double>(n));

    TruncationResult out{SymmetricMatrix(n), SymmetricMatrix(n), SymmetricMatrix(n), tau, 0.0};
    double off_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = m(i, j);
            if (std::abs(v) < level) {
                out.hat.set(i, j, v);
                if (i != j) {
                    off_sum += v;
                }
            } else {
                out.check.set(i, j, v);
            }
        }
    }

    if (analytic_mean) {
        out.centering = *analytic_mean;
    } else if (n > 1) {
        out.centering = off_sum / static_cast<double>(n * (n - 1) / 2);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out.centered.set(i, j, out.hat(i, j) - out.centering);
        }
    }
    return out;
}

namespace {

std::complex<double> resolvent_trace(const SymmetricMatrix& m, std::complex<double> z)
{
    const double scale = 1.0 / std::sqrt(static_cast<double>(m.size()));
    std::complex<double> sum = 0.0;
    for (double lambda : eigenvalues(m)) {
        sum += 1.0 / (lambda * scale - z);
    }
    return sum;
}

}  // namespace

PerturbationBound truncation_perturbation_check(const SymmetricMatrix& x, const SymmetricMatrix& d,
                                                std::complex<double> z)
{
    if (!(z.imag() > 0.0)) {
        throw DomainError("truncation_perturbation_check: Im z must be positive");
    }
    if (x.size() != d.size()) {
        throw SizeError("truncation_perturbation_check: dimension mismatch");
    }
    const double v = z.imag();
    PerturbationBound bound;
    bound.lhs = std::abs(resolvent_trace(x, z) - resolvent_trace(x + d, z));
    bound.rhs = std::sqrt(d.frobenius_squared()) / (v * v);
    return bound;
}

}  // namespace semicircle_lab
