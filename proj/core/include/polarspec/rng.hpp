#pragma once

#include <cstdint>

namespace polarspec {

// SplitMix64 step: advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seed of Monte-Carlo sample `index`: output number index+1 of a SplitMix64 stream started at `master`.
// Depends only on (master, index), so any partition of samples over workers reproduces it.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    std::uint64_t state = master + index * 0x9E3779B97F4A7C15ull;
    return splitmix64(state);
}

} // namespace polarspec
