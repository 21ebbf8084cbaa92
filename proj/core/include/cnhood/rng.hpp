#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cnh {

// Deterministic, platform-independent randomness for sampling and fuzzing.
//
// Generator: xoshiro256** seeded through splitmix64. Bounded draws use
// rejection sampling, never std::uniform_int_distribution, so the byte
// stream of every run is reproducible across compilers and platforms.
// Per-trial seeds derive as derive_seed(master, i) = mix64(master + (i+1)*C)
// with C the splitmix64 increment.

inline constexpr std::uint64_t kSeedIncrement = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * kSeedIncrement);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 stream expands the seed into the xoshiro state.
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s += kSeedIncrement;
            word = mix64(s);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Inclusive range.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // [0, 1) with 53 random mantissa bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    // UniformRandomBitGenerator interface, for interoperability only.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace cnh
