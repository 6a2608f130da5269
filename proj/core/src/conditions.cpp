#include "semicircle_lab/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "semicircle_lab/error.hpp"

namespace semicircle_lab {

double lindeberg_ratio(const SymmetricMatrix& m, double tau)
{
    if (!(tau > 0.0)) {
        throw DomainError("lindeberg_ratio: tau must be positive");
    }
    const double n = static_cast<double>(m.size());
    const double level = tau * std::sqrt(n);
    double sum = 0.0;
    for (double v : m.data()) {
        if (std::abs(v) >= level) {
            sum += v * v;
        }
    }
    return sum / (n * n);
}

double truncation_sequence(std::size_t n)
{
    if (n == 0) {
        throw DomainError("truncation_sequence: n must be positive");
    }
    return std::pow(static_cast<double>(n), -0.125);
}

ConditionReport check_conditions(const VarianceProfile& profile, double tau,
                                 double lindeberg_estimate, const ConditionTolerances& tol)
{
    const auto b2 = b_values(profile);
    ConditionReport report;
    report.tau = tau;
    report.lindeberg = lindeberg_estimate;

    double dev_sum = 0.0;
    for (double v : b2) {
        const double dev = std::abs(v - 1.0);
        dev_sum += dev;
        report.max_b_deviation = std::max(report.max_b_deviation, dev);
        report.max_b = std::max(report.max_b, std::sqrt(v));
    }
    // Rounding in the sum must not push the mean above the max.
    report.avg_b_deviation =
        std::min(dev_sum / static_cast<double>(b2.size()), report.max_b_deviation);

    report.avg_b_pass = report.avg_b_deviation <= tol.avg_b_deviation;
    report.max_b_pass = report.max_b <= tol.max_b;
    report.max_b_deviation_pass = report.max_b_deviation <= tol.max_b_deviation;
    report.lindeberg_pass = lindeberg_estimate <= tol.lindeberg;
    return report;
}

}  // namespace semicircle_lab
