#ifndef RACSIM_RNG_HPP_
#define RACSIM_RNG_HPP_

#include <cstdint>

namespace racsim {

// SplitMix64. The whole engine contract hangs off this exact recurrence:
// every "random" choice (frame victims, random-way baseline, generators)
// is reproducible bit-for-bit given the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace racsim

#endif
