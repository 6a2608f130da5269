#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace semicircle_lab {

/// Philox-4x32 with 10 rounds: a keyed bijection on 128-bit counters.
/// Any (key, counter) pair can be evaluated independently, which is what
/// makes per-entry streams reproducible regardless of evaluation order.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Child seed for a labelled sub-experiment (e.g. the X or Y side of a
/// paired draw). Distinct labels give statistically independent roots.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t label) noexcept;

/// Which per-entry stream a draw comes from.
enum class StreamTag : std::uint32_t {
    gaussian = 1,
    sign = 2,
    magnitude = 3,
};

/// Counter-based random stream owned by one matrix entry.
///
/// The counter is (block, entry low word, tag, entry high word) and the key is the root seed, so
/// the stream for entry e and tag t is a pure function of (seed, e, t).
class EntryStream {
public:
    EntryStream(std::uint64_t seed, std::uint64_t entry, StreamTag tag) noexcept;

    /// 128 random bits for the given block index.
    std::array<std::uint32_t, 4> block(std::uint32_t index) const noexcept;

    /// Two uniforms from one block: the first in (0,1], the second in [0,1).
    std::pair<double, double> uniform_pair(std::uint32_t index = 0) const noexcept;

    /// Standard normal pair by Box-Muller from exactly two uniforms.
    std::pair<double, double> normal_pair(std::uint32_t index = 0) const noexcept;

    double normal(std::uint32_t index = 0) const noexcept { return normal_pair(index).first; }

    /// Fair sign, +1 or -1.
    double sign(std::uint32_t index = 0) const noexcept;

private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t entry_lo_;
    std::uint32_t entry_hi_;
    std::uint32_t tag_;
};

/// 53-bit conversions used by the streams.
double unit_open_closed(std::uint64_t bits) noexcept;  // (0,1]
double unit_closed_open(std::uint64_t bits) noexcept;  // [0,1)

}  // namespace semicircle_lab
