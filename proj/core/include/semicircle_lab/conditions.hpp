#pragma once

#include <cstddef>

#include "semicircle_lab/symmetric_matrix.hpp"
#include "semicircle_lab/variance_profile.hpp"

namespace semicircle_lab {

/// Plug-in Lindeberg ratio of one realization:
/// n^-2 * sum over all n^2 ordered pairs of x_ij^2 * 1(|x_ij| >= tau*sqrt(n)).
/// Averaging over independent realizations estimates the expectation.
double lindeberg_ratio(const SymmetricMatrix& m, double tau);

/// tau_n = n^(-1/8): decreasing to zero while tau_n * sqrt(n) = n^(3/8) grows.
double truncation_sequence(std::size_t n);

struct ConditionTolerances {
    double avg_b_deviation = 0.05;  ///< bound on (1/n) sum |B_i^2 - 1|
    double max_b = 2.0;             ///< the constant C bounding max B_i
    double max_b_deviation = 0.05;  ///< bound on max |B_i^2 - 1|
    double lindeberg = 0.05;        ///< bound on L_n(tau)
};

struct ConditionReport {
    double avg_b_deviation = 0.0;
    double max_b = 0.0;
    double max_b_deviation = 0.0;
    double lindeberg = 0.0;
    double tau = 0.0;

    bool avg_b_pass = false;        ///< row averages converge on average
    bool max_b_pass = false;        ///< row averages uniformly bounded
    bool max_b_deviation_pass = false;  ///< uniform version, implies both above
    bool lindeberg_pass = false;

    bool all_pass() const noexcept
    {
        return avg_b_pass && max_b_pass && max_b_deviation_pass && lindeberg_pass;
    }
};

/// Evaluates the variance-profile conditions exactly and compares a
/// caller-supplied Lindeberg estimate (Monte-Carlo or analytic) against tol.
ConditionReport check_conditions(const VarianceProfile& profile, double tau,
                                 double lindeberg_estimate,
                                 const ConditionTolerances& tol = {});

}  // namespace semicircle_lab
