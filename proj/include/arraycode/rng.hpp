#pragma once

#include <cmath>
#include <cstdint>

namespace arraycode {

/// splitmix64 step, used as a counter-based generator: hashing successive
/// counters from a fixed seed gives a stream independent of call order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based stream: value i is a pure function of (seed, i).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() { return splitmix64(seed_ + counter_++); }

    /// Uniform in (0, 1]; never returns 0 so log() stays finite.
    double next_unit() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via the polar Box-Muller method.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_unit() - 1.0;
            v = 2.0 * next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Seed for frame `frame` of Eb/N0 point `point` under a master seed.
inline std::uint64_t frame_seed(std::uint64_t master, std::size_t point, std::uint64_t frame) {
    return splitmix64(splitmix64(master ^ (0xA5A5ULL + point)) + frame);
}

}  // namespace arraycode
