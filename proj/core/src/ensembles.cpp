#include "semicircle_lab/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semicircle_lab/error.hpp"
#include "semicircle_lab/rng.hpp"

namespace semicircle_lab {

std::string_view to_string(EnsembleKind kind) noexcept
{
    switch (kind) {
    case EnsembleKind::gaussian: return "gaussian";
    case EnsembleKind::rademacher: return "rademacher";
    case EnsembleKind::dependent: return "dependent";
    }
    return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view name)
{
    if (name == "gaussian") return EnsembleKind::gaussian;
    if (name == "rademacher") return EnsembleKind::rademacher;
    if (name == "dependent") return EnsembleKind::dependent;
    throw ValidationError("unknown ensemble kind '" + std::string(name) + "'");
}

std::string_view to_string(ProfileRecipe::Type type) noexcept
{
    switch (type) {
    case ProfileRecipe::Type::constant: return "constant";
    case ProfileRecipe::Type::smooth: return "smooth";
    case ProfileRecipe::Type::block: return "block";
    case ProfileRecipe::Type::zero: return "zero";
    }
    return "unknown";
}

ProfileRecipe::Type parse_profile_type(std::string_view name)
{
    if (name == "constant") return ProfileRecipe::Type::constant;
    if (name == "smooth") return ProfileRecipe::Type::smooth;
    if (name == "block") return ProfileRecipe::Type::block;
    if (name == "zero") return ProfileRecipe::Type::zero;
    throw ValidationError("unknown profile type '" + std::string(name) + "'");
}

namespace {

template <class F>
VarianceProfile profile_from(std::size_t n, F&& value)
{
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m.set(i, j, value(i, j));
        }
    }
    return VarianceProfile(std::move(m));
}

// Maps -0.0 to +0.0 so zero-variance entries print as 0.
inline double unsigned_zero(double v) noexcept { return v + 0.0; }

}  // namespace

VarianceProfile profile_constant(std::size_t n)
{
    return profile_from(n, [](std::size_t, std::size_t) { return 1.0; });
}

VarianceProfile profile_zero(std::size_t n)
{
    return profile_from(n, [](std::size_t, std::size_t) { return 0.0; });
}

VarianceProfile profile_smooth(std::size_t n, double alpha)
{
    if (!(std::abs(alpha) <= 1.0)) {
        throw DomainError("profile_smooth: |alpha| must be at most 1");
    }
    const double nn = static_cast<double>(n);
    auto factor = [nn](std::size_t i) {
        // 1-based midpoint: 2(i+1)/n - 1 - 1/n
        return (2.0 * static_cast<double>(i) + 1.0) / nn - 1.0;
    };
    return profile_from(n, [&](std::size_t i, std::size_t j) {
        return 1.0 + alpha * factor(i) * factor(j);
    });
}

VarianceProfile profile_block(std::size_t n)
{
    if (n == 0 || n % 2 != 0) {
        throw DomainError("profile_block: n must be even and positive");
    }
    const std::size_t m = n / 2;
    return profile_from(n, [m](std::size_t i, std::size_t j) {
        return (i < m || j < m || i == j) ? 1.0 : 0.0;
    });
}

VarianceProfile make_profile(std::size_t n, const ProfileRecipe& recipe)
{
    switch (recipe.type) {
    case ProfileRecipe::Type::constant: return profile_constant(n);
    case ProfileRecipe::Type::smooth: return profile_smooth(n, recipe.alpha);
    case ProfileRecipe::Type::block: return profile_block(n);
    case ProfileRecipe::Type::zero: return profile_zero(n);
    }
    throw ValidationError("make_profile: unknown recipe");
}

void EnsembleSpec::validate() const
{
    if (profile.size() == 0) {
        throw ValidationError("EnsembleSpec: empty profile");
    }
    if (!(delta >= 0.0 && delta < 1.0)) {
        throw ValidationError("EnsembleSpec: delta must lie in [0,1)");
    }
    if (kind != EnsembleKind::dependent && delta != 0.0) {
        throw ValidationError("EnsembleSpec: delta is only meaningful for the dependent kind");
    }
}

EnsembleSpec make_spec(EnsembleKind kind, std::size_t n, const ProfileRecipe& recipe, double delta,
                       std::uint64_t seed)
{
    EnsembleSpec spec{kind, make_profile(n, recipe), delta, seed, recipe};
    spec.validate();
    return spec;
}

std::vector<double> sign_draws(std::size_t n, std::uint64_t seed)
{
    std::vector<double> out(upper_size(n));
    for (std::size_t e = 0; e < out.size(); ++e) {
        out[e] = EntryStream(seed, e, StreamTag::sign).sign();
    }
    return out;
}

std::vector<double> magnitude_draws(std::size_t n, std::uint64_t seed)
{
    std::vector<double> out(upper_size(n));
    for (std::size_t e = 0; e < out.size(); ++e) {
        out[e] = std::abs(EntryStream(seed, e, StreamTag::magnitude).normal());
    }
    return out;
}

SymmetricMatrix dependent_from_draws(const VarianceProfile& profile, double delta,
                                     std::span<const double> magnitudes,
                                     std::span<const double> signs)
{
    const std::size_t n = profile.size();
    const std::size_t count = upper_size(n);
    if (magnitudes.size() != count || signs.size() != count) {
        throw SizeError("dependent_from_draws: expected " + std::to_string(count) + " draws");
    }

    double total = 0.0;
    for (double rho : magnitudes) {
        total += rho * rho;
    }

    SymmetricMatrix out(n);
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j, ++e) {
            const double others =
                count > 1 ? (total - magnitudes[e] * magnitudes[e]) / static_cast<double>(count - 1)
                          : 1.0;
            const double scale = std::sqrt(std::max(0.0, 1.0 + delta * (others - 1.0)));
            out.set(i, j, unsigned_zero(signs[e] * std::sqrt(profile(i, j)) * scale));
        }
    }
    return out;
}

SymmetricMatrix sample(const EnsembleSpec& spec)
{
    spec.validate();
    const std::size_t n = spec.size();

    if (spec.kind == EnsembleKind::dependent) {
        return dependent_from_draws(spec.profile, spec.delta, magnitude_draws(n, spec.seed),
                                    sign_draws(n, spec.seed));
    }

    SymmetricMatrix out(n);
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j, ++e) {
            const double sigma = std::sqrt(spec.profile(i, j));
            double draw = 0.0;
            if (spec.kind == EnsembleKind::gaussian) {
                draw = EntryStream(spec.seed, e, StreamTag::gaussian).normal();
            } else {
                draw = EntryStream(spec.seed, e, StreamTag::sign).sign();
            }
            // Same operand order as dependent_from_draws with scale 1.
            out.set(i, j, unsigned_zero(draw * sigma * 1.0));
        }
    }
    return out;
}

}  // namespace semicircle_lab
