#include "semicircle_lab/rng.hpp"

#include <cmath>
#include <numbers>

namespace semicircle_lab {

namespace {

constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) noexcept
{
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

inline std::uint64_t join(std::uint32_t hi, std::uint32_t lo) noexcept
{
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += philox_w0;
            key[1] += philox_w1;
        }
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(philox_m0, ctr[0], lo0, hi0);
        mulhilo(philox_m1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t label) noexcept
{
    return mix64(mix64(root) ^ mix64(label + 0x632BE59BD9B4E019ull));
}

double unit_open_closed(std::uint64_t bits) noexcept
{
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

double unit_closed_open(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

EntryStream::EntryStream(std::uint64_t seed, std::uint64_t entry, StreamTag tag) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      entry_lo_(static_cast<std::uint32_t>(entry)),
      entry_hi_(static_cast<std::uint32_t>(entry >> 32)),
      tag_(static_cast<std::uint32_t>(tag))
{
}

std::array<std::uint32_t, 4> EntryStream::block(std::uint32_t index) const noexcept
{
    return philox4x32({index, entry_lo_, tag_, entry_hi_}, key_);
}

std::pair<double, double> EntryStream::uniform_pair(std::uint32_t index) const noexcept
{
    const auto w = block(index);
    return {unit_open_closed(join(w[0], w[1])), unit_closed_open(join(w[2], w[3]))};
}

std::pair<double, double> EntryStream::normal_pair(std::uint32_t index) const noexcept
{
    const auto [u1, u2] = uniform_pair(index);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double EntryStream::sign(std::uint32_t index) const noexcept
{
    return (block(index)[0] & 1u) ? 1.0 : -1.0;
}

}  // namespace semicircle_lab
