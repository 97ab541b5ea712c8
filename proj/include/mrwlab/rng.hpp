#ifndef MRWLAB_RNG_HPP
#define MRWLAB_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace mrwlab {

/// Philox4x64-10 block function (Salmon et al., SC'11). Counter-based:
/// the output block is a pure function of (counter, key), so streams are
/// splittable by key and any block is addressable in O(1).
inline std::array<std::uint64_t, 4>
philox4x64(std::array<std::uint64_t, 4> ctr, std::array<std::uint64_t, 2> key) {
    constexpr std::uint64_t M0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t M1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t W0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t W1 = 0xBB67AE8584CAA73BULL;

    auto mulhilo = [](std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(p >> 64);
        return static_cast<std::uint64_t>(p);
    };

    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, hi1;
        std::uint64_t lo0 = mulhilo(M0, ctr[0], hi0);
        std::uint64_t lo1 = mulhilo(M1, ctr[2], hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += W0;
        key[1] += W1;
    }
    return ctr;
}

/// Deterministic random stream identified by (seed, stream). Distinct
/// stream ids give statistically independent sequences, so ensemble members
/// can be generated in any order or in parallel with identical results.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : key_{seed, stream} {}

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            block_ = philox4x64({counter_++, 0, 0, 0}, key_);
            pos_ = 0;
        }
        return block_[pos_++];
    }

    /// Uniform on [0,1) with 53 random bits.
    double uniform() {
        return double(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are consumed from consecutive
    /// uniforms so the draw sequence is reproducible.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] keeps the log finite.
        double u1 = double((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 4> block_{};
    int pos_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace mrwlab

#endif
