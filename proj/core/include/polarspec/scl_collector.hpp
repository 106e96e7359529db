#pragma once

#include "polarspec/bitrow.hpp"
#include "polarspec/constructions.hpp"
#include "polarspec/histogram.hpp"
#include "polarspec/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace polarspec {

// Hard-decision penalty: |llr| if the decision disagrees with the sign of llr, else 0.
// A zero llr never costs anything.
inline std::int64_t path_metric_update(bool decision, std::int32_t llr) noexcept
{
    if (decision ? llr > 0 : llr < 0)
        return llr < 0 ? -static_cast<std::int64_t>(llr) : llr;
    return 0;
}

struct DecodedPath {
    BitRow decisions; // inputs to F_N, dynamic frozen values included
    BitRow message;   // u with u_{A^c} = 0, so that codeword = encode(message, T)
    BitRow codeword;
    std::uint64_t metric = 0;
};

struct ListDecodeResult {
    // Sorted by (metric, decisions lexicographically).
    std::vector<DecodedPath> paths;
    // Smallest metric ever pruned; every codeword of weight below it is in `paths`.
    std::uint64_t pruned_min = std::numeric_limits<std::uint64_t>::max();
};

// Successive cancellation list decoding of the noiseless all-zero channel output (every
// channel LLR +1) with min-sum updates and list size L. In this setting a path's final
// metric equals the Hamming weight of its codeword.
// Ties at the pruning boundary keep the lexicographically smallest decision prefix.
ListDecodeResult list_decode_all_zero(const CodeConfig& config, const PreTransform& t, std::size_t list_size);

// Weight histogram of the final list without the all-zero codeword.
// Weights >= exact_below are flagged as lower bounds.
WeightHistogram collect_low_weight(const CodeConfig& config, const PreTransform& t, std::size_t list_size);

} // namespace polarspec
