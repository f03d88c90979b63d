#pragma once

#include <cmath>
#include <cstdint>

namespace lfpp {

/// SplitMix64 finalizer; bijective mixing of 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stream key for (base seed, stream id); used for per-trial and per-sample
/// streams so parallel work stays reproducible.
inline std::uint64_t derive_stream(std::uint64_t base_seed, std::uint64_t stream_id) {
    return mix64(base_seed ^ mix64(stream_id));
}

/// Counter-based generator: word i of a stream is mix64(key + i * golden).
/// State is one counter, so any draw sequence is reproducible bit-for-bit and
/// streams with distinct keys are independent for all practical purposes.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}
    CounterRng(std::uint64_t base_seed, std::uint64_t stream_id)
        : key_(derive_stream(base_seed, stream_id)) {}

    std::uint64_t next_u64() { return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

    /// uniform in (0,1]; never returns 0 so log() is safe
    double next_unit() {
        return (double(next_u64() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }

    /// standard normal via Box-Muller (explicit, portable across libstdc++ versions)
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace lfpp
