#pragma once

#include <span>
#include <vector>

#include "semicircle_lab/spectra.hpp"

namespace semicircle_lab {

/// Right-continuous step distribution function: zero left of jumps[0],
/// equal to values[k] on [jumps[k], jumps[k+1]). Jumps are strictly
/// increasing and values nondecreasing in [0,1].
class StepCdf {
public:
    StepCdf() = default;

    /// Throws ValidationError if the invariants above do not hold.
    StepCdf(std::vector<double> jumps, std::vector<double> values);

    /// Unit atoms (weight 1/count each) at the given points; ties merge.
    static StepCdf from_atoms(std::vector<double> atoms);

    static StepCdf from(const SpectralDistribution& d);

    /// Grid values read as a step function.
    static StepCdf from(const AveragedESD& averaged);

    const std::vector<double>& jumps() const noexcept { return jumps_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return jumps_.size(); }

    double operator()(double x) const noexcept;

    /// Value on [jumps[k], jumps[k+1]); zero for k < 0.
    double value_at(std::ptrdiff_t k) const noexcept { return k < 0 ? 0.0 : values_[static_cast<std::size_t>(k)]; }

    StepCdf shifted(double offset) const;

private:
    std::vector<double> jumps_;
    std::vector<double> values_;
};

/// sup_x |F(x) - G(x)| against the semicircle law, exact for a step
/// function: both one-sided limits are compared at every jump.
double kolmogorov_to_semicircle(const StepCdf& f);
double kolmogorov_to_semicircle(const SpectralDistribution& d);
double kolmogorov_to_semicircle(const AveragedESD& averaged);

/// sup_x |F1(x) - F2(x)| over the merged jump set.
double kolmogorov(const StepCdf& f1, const StepCdf& f2);

/// Levy distance, bisected to absolute tolerance 1e-9.
double levy(const StepCdf& f1, const StepCdf& f2);

/// Levy distance between a step function and the semicircle law.
double levy_to_semicircle(const StepCdf& f);

}  // namespace semicircle_lab
