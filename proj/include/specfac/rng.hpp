#ifndef SPECFAC_RNG_HPP
#define SPECFAC_RNG_HPP

#include <cstdint>
#include <random>

namespace specfac {

// mt19937_64 with hand-rolled bounded sampling. std::uniform_int_distribution
// is not pinned by the standard, and seeded runs must replay byte-exact
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, bound), bound >= 1, by rejection
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % bound;
    }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform in [0,1) with 53 random bits
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace specfac

#endif
