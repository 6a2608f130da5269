#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semicircle_lab/symmetric_matrix.hpp"
#include "semicircle_lab/variance_profile.hpp"

namespace semicircle_lab {

enum class EnsembleKind { gaussian, rademacher, dependent };

std::string_view to_string(EnsembleKind kind) noexcept;
/// Throws ValidationError for unknown names.
EnsembleKind parse_ensemble_kind(std::string_view name);

/// How a profile was built, kept so specs can round-trip through JSON.
struct ProfileRecipe {
    enum class Type { constant, smooth, block, zero };
    Type type = Type::constant;
    double alpha = 0.0;  ///< smooth profile only
};

std::string_view to_string(ProfileRecipe::Type type) noexcept;
ProfileRecipe::Type parse_profile_type(std::string_view name);

/// sigma_ij^2 = 1 everywhere.
VarianceProfile profile_constant(std::size_t n);

/// sigma_ij^2 = 0 everywhere.
VarianceProfile profile_zero(std::size_t n);

/// sigma_ij^2 = 1 + alpha * a_i * a_j with midpoint factors
/// a_i = (2i - 1)/n - 1 for i = 1..n. The factors sum to zero, so every row
/// average is 1 up to rounding. Requires |alpha| <= 1.
VarianceProfile profile_smooth(std::size_t n, double alpha);

/// Block counterexample with m = n/2: unit variance whenever i <= m or
/// j <= m, unit variance on the diagonal, zero variance in the off-diagonal
/// part of the lower-right block. Requires even n.
VarianceProfile profile_block(std::size_t n);

VarianceProfile make_profile(std::size_t n, const ProfileRecipe& recipe);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::gaussian;
    VarianceProfile profile;
    double delta = 0.0;  ///< coupling strength, dependent kind only
    std::uint64_t seed = 0;
    ProfileRecipe recipe;  ///< provenance of `profile`, used for serialization

    std::size_t size() const noexcept { return profile.size(); }

    /// Throws ValidationError if delta is outside [0,1) or nonzero for an
    /// independent kind, or if the profile is empty.
    void validate() const;

    EnsembleSpec with_seed(std::uint64_t s) const
    {
        EnsembleSpec copy = *this;
        copy.seed = s;
        return copy;
    }
};

EnsembleSpec make_spec(EnsembleKind kind, std::size_t n, const ProfileRecipe& recipe,
                       double delta = 0.0, std::uint64_t seed = 0);

/// Draws one realization. Deterministic in (kind, profile, delta, seed) and
/// independent of call order: each upper-triangle entry owns its streams.
SymmetricMatrix sample(const EnsembleSpec& spec);

/// Dependent construction from explicit magnitudes rho_ij and signs eps_ij
/// (both in upper-triangle order):
///   M_ij = mean of rho_kl^2 over all upper-triangle (k,l) != (i,j)
///   X_ij = eps_ij * sigma_ij * sqrt(max(0, 1 + delta*(M_ij - 1)))
/// Signs enter only as a factor of their own entry.
SymmetricMatrix dependent_from_draws(const VarianceProfile& profile, double delta,
                                     std::span<const double> magnitudes,
                                     std::span<const double> signs);

/// The per-entry sign and magnitude draws that sample() uses for `spec`.
std::vector<double> sign_draws(std::size_t n, std::uint64_t seed);
std::vector<double> magnitude_draws(std::size_t n, std::uint64_t seed);

}  // namespace semicircle_lab
