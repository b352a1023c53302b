#ifndef TOPOLEVEL_RNG_HPP
#define TOPOLEVEL_RNG_HPP

#include <cmath>
#include <cstdint>

namespace topolevel {

// Counter-based generator: every draw is a pure function of
// (seed, stream, index, counter).  Generation order and thread layout
// therefore cannot change the output stream of any (stream, index) key.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : key_(mix(mix(mix(seed + kGolden) ^ (stream * kMul1)) ^ (index * kMul2))) {}

    std::uint64_t next_u64() { return mix(key_ ^ ((counter_++) * kMul1)); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        // multiply-shift; bias is negligible for n << 2^64 and keys are fixed
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

    // standard normal via Box-Muller; the sine partner is cached
    double next_normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = next_double();
        double u2 = next_double();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * kPi * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

    // normal truncated to |z| <= bound standard deviations
    double next_truncated_normal(double sigma, double bound_sigmas) {
        double z = next_normal();
        while (std::fabs(z) > bound_sigmas) z = next_normal();
        return sigma * z;
    }

    // wrapped normal angle in [0, 2*pi)
    double next_wrapped_normal(double mu, double sigma) {
        double theta = std::fmod(mu + sigma * next_normal(), 2.0 * kPi);
        if (theta < 0.0) theta += 2.0 * kPi;
        return theta;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kMul1 = 0xbf58476d1ce4e5b9ull;
    static constexpr std::uint64_t kMul2 = 0x94d049bb133111ebull;
    static constexpr double kPi = 3.14159265358979323846;

    static std::uint64_t mix(std::uint64_t z) {
        z += kGolden;
        z = (z ^ (z >> 30)) * kMul1;
        z = (z ^ (z >> 27)) * kMul2;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace topolevel

#endif
