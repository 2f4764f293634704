#pragma once

#include <cstdint>

namespace basiskit {

/// splitmix64 step. Small, fast, and statistically adequate for path
/// simulation; the full 64-bit state is mixed every draw.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-style substream derivation: every (seed, stream) pair yields
/// an independent deterministic generator, so per-path results do not
/// depend on scheduling.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream) {
        // Decorrelate the stream index through two mixing rounds.
        std::uint64_t s = seed ^ 0xA3EC647659359ACDULL;
        state_ = splitmix64(s) ^ (stream * 0xD6E8FEB86659FD93ULL);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in (0,1), 53-bit resolution, never exactly 0 or 1.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via the polar method; the spare deviate is cached.
    double next_normal();

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace basiskit
