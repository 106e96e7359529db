#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace polarspec {

enum class HistogramSource { brute, scl };

// Codeword weight counts of one fixed code realization, indexed by d in [0, N].
struct WeightHistogram {
    HistogramSource source = HistogramSource::brute;
    std::vector<std::uint64_t> counts;
    // Counts at weights >= exact_below are lower bounds only (list decoder saturation).
    std::size_t exact_below = std::numeric_limits<std::size_t>::max();

    bool saturated(std::size_t d) const noexcept { return d >= exact_below; }
    std::uint64_t total() const noexcept
    {
        std::uint64_t t = 0;
        for (auto c : counts)
            t += c;
        return t;
    }
};

} // namespace polarspec
