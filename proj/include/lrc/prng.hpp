#ifndef LRC_PRNG_HPP
#define LRC_PRNG_HPP

#include <cstdint>

#include "lrc/field.hpp"

namespace lrc {

/*
 * Counter-based generator (splitmix64 finalizer over key + counter).  Output
 * for a given (seed, counter) never depends on call order or thread layout,
 * so parallel Monte Carlo trials can derive independent streams and stay
 * reproducible.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t seed() const { return key_; }

    // Independent stream for a sub-experiment.
    CounterRng derive(std::uint64_t stream) const { return CounterRng(mix(key_ ^ 0x94d049bb133111ebull, stream)); }

    std::uint64_t next() { return mix(key_, counter_++); }

    felem uniform(const Field& f) {
        // Multiply-shift range reduction; bias is q / 2^64.
        return (felem)(((unsigned __int128)next() * (unsigned __int128)f.order()) >> 64);
    }

    std::uint64_t uniform_below(std::uint64_t bound) {
        return (std::uint64_t)(((unsigned __int128)next() * (unsigned __int128)bound) >> 64);
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;

    static std::uint64_t mix(std::uint64_t key, std::uint64_t counter) {
        std::uint64_t z = key + counter * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace lrc

#endif
