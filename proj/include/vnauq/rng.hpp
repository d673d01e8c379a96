#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace vnauq {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
/// Stateless keyed block function: bits depend only on (key, counter), so
/// independent substreams are obtained by fixing counter words and letting
/// the block index run. Verified against the reference known-answer vectors.
struct Philox4x32 {
    static constexpr std::uint32_t kW0 = 0x9E3779B9u;
    static constexpr std::uint32_t kW1 = 0xBB67AE85u;
    static constexpr std::uint32_t kM0 = 0xD2511F53u;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kW0;
            key[1] += kW1;
        }
        return ctr;
    }
};

/// One private random substream, keyed on (seed, stream coordinates).
/// Coordinates identify the consumer (frequency index, draw index, role);
/// the block index advances as values are consumed, so no substream ever
/// reads another's values regardless of scheduling.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint32_t a, std::uint32_t b, std::uint32_t c)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          prefix_{a, b, c} {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buffer_ = Philox4x32::block({prefix_[0], prefix_[1], prefix_[2], block_}, key_);
            ++block_;
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return (hi << 32) | lo;
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a log argument.
    double next_open01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes uniforms in pairs.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(next_open01()));
        const double theta = 2.0 * M_PI * next_double();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double next_normal(double mean, double std) { return mean + std * next_normal(); }

    /// Uniform phase on [0, 2*pi).
    double next_phase() { return 2.0 * M_PI * next_double(); }

private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 3> prefix_;
    std::uint32_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace vnauq
