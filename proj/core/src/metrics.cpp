#include "semicircle_lab/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "semicircle_lab/error.hpp"
#include "semicircle_lab/semicircle.hpp"

namespace semicircle_lab {

StepCdf::StepCdf(std::vector<double> jumps, std::vector<double> values)
    : jumps_(std::move(jumps)), values_(std::move(values))
{
    if (jumps_.empty() || jumps_.size() != values_.size()) {
        throw ValidationError("StepCdf: need matching, nonempty jump and value arrays");
    }
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        if (!std::isfinite(jumps_[k]) || !(values_[k] >= 0.0 && values_[k] <= 1.0)) {
            throw ValidationError("StepCdf: jumps must be finite and values in [0,1]");
        }
        if (k > 0 && !(jumps_[k] > jumps_[k - 1])) {
            throw ValidationError("StepCdf: jumps must be strictly increasing");
        }
        if (k > 0 && values_[k] < values_[k - 1]) {
            throw ValidationError("StepCdf: values must be nondecreasing");
        }
    }
}

StepCdf StepCdf::from_atoms(std::vector<double> atoms)
{
    if (atoms.empty()) {
        throw ValidationError("StepCdf::from_atoms: no atoms");
    }
    std::sort(atoms.begin(), atoms.end());
    const double total = static_cast<double>(atoms.size());
    std::vector<double> jumps, values;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i + 1 < atoms.size() && atoms[i + 1] == atoms[i]) {
            continue;
        }
        jumps.push_back(atoms[i]);
        values.push_back(static_cast<double>(i + 1) / total);
    }
    return StepCdf(std::move(jumps), std::move(values));
}

StepCdf StepCdf::from(const SpectralDistribution& d)
{
    return from_atoms(d.lambdas());
}

StepCdf StepCdf::from(const AveragedESD& averaged)
{
    std::vector<double> values = averaged.values;
    // Pointwise means of CDFs are monotone up to rounding; enforce it exactly.
    for (std::size_t k = 1; k < values.size(); ++k) {
        values[k] = std::max(values[k], values[k - 1]);
    }
    for (double& v : values) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return StepCdf(averaged.grid, std::move(values));
}

double StepCdf::operator()(double x) const noexcept
{
    const auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x);
    return value_at(static_cast<std::ptrdiff_t>(it - jumps_.begin()) - 1);
}

StepCdf StepCdf::shifted(double offset) const
{
    std::vector<double> jumps = jumps_;
    for (double& x : jumps) {
        x += offset;
    }
    return StepCdf(std::move(jumps), values_);
}

double kolmogorov_to_semicircle(const StepCdf& f)
{
    const auto& x = f.jumps();
    const auto& v = f.values();
    // Left of the first jump F = 0 and G increases towards G(x_0).
    double sup = semicircle::cdf(x.front());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double g_left = semicircle::cdf(x[k]);
        const double g_right = k + 1 < x.size() ? semicircle::cdf(x[k + 1]) : 1.0;
        sup = std::max({sup, std::abs(v[k] - g_left), std::abs(v[k] - g_right)});
    }
    return sup;
}

double kolmogorov_to_semicircle(const SpectralDistribution& d)
{
    return kolmogorov_to_semicircle(StepCdf::from(d));
}

double kolmogorov_to_semicircle(const AveragedESD& averaged)
{
    return kolmogorov_to_semicircle(StepCdf::from(averaged));
}

double kolmogorov(const StepCdf& f1, const StepCdf& f2)
{
    double sup = 0.0;
    for (double x : f1.jumps()) {
        sup = std::max(sup, std::abs(f1(x) - f2(x)));
    }
    for (double x : f2.jumps()) {
        sup = std::max(sup, std::abs(f1(x) - f2(x)));
    }
    return sup;
}

namespace {

constexpr double levy_tolerance = 1e-9;

// Whether eps satisfies F1(x-eps) - eps <= F2(x) <= F1(x+eps) + eps for all x.
// Both sides are step functions whose pieces start at jumps of F2 or at
// eps-shifted jumps of F1, so checking those points is exhaustive.
bool levy_feasible(const StepCdf& f1, const StepCdf& f2, double eps)
{
    const auto& a = f1.jumps();
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double v = f1.values()[k];
        if (v - eps > f2(a[k] + eps)) {
            return false;
        }
        if (f2(a[k] - eps) > v + eps) {
            return false;
        }
    }
    for (double b : f2.jumps()) {
        const double fb = f2(b);
        if (f1(b - eps) - eps > fb || fb > f1(b + eps) + eps) {
            return false;
        }
    }
    return true;
}

// Same test with F2 the semicircle law. G is continuous and increasing, so on
// each piece where the shifted step is constant only the piece's endpoints
// matter.
bool levy_feasible_semicircle(const StepCdf& f, double eps)
{
    const auto& a = f.jumps();
    const auto& v = f.values();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (semicircle::cdf(a[k] + eps) < v[k] - eps) {
            return false;
        }
        const double g_end = k + 1 < a.size() ? semicircle::cdf(a[k + 1] - eps) : 1.0;
        if (g_end > v[k] + eps) {
            return false;
        }
    }
    return semicircle::cdf(a.front() - eps) <= eps;
}

template <class Feasible>
double bisect(double hi, Feasible&& feasible)
{
    if (feasible(0.0)) {
        return 0.0;
    }
    double lo = 0.0;
    while (hi - lo > levy_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

double levy(const StepCdf& f1, const StepCdf& f2)
{
    const double lo = std::min(f1.jumps().front(), f2.jumps().front());
    const double hi = std::max(f1.jumps().back(), f2.jumps().back());
    const double eps = bisect(1.0 + (hi - lo), [&](double e) { return levy_feasible(f1, f2, e); });
    // eps = Kolmogorov distance is always feasible, so this only trims the
    // final bisection step.
    return std::min(eps, kolmogorov(f1, f2));
}

double levy_to_semicircle(const StepCdf& f)
{
    const double lo = std::min(f.jumps().front(), -2.0);
    const double hi = std::max(f.jumps().back(), 2.0);
    const double eps = bisect(1.0 + (hi - lo), [&](double e) { return levy_feasible_semicircle(f, e); });
    return std::min(eps, kolmogorov_to_semicircle(f));
}

}  // namespace semicircle_lab
