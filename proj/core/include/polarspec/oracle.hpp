#pragma once

#include "polarspec/constructions.hpp"
#include "polarspec/dyadic.hpp"
#include "polarspec/histogram.hpp"
#include "polarspec/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace polarspec {

inline constexpr std::size_t kBruteMaxK = 28;
inline constexpr std::size_t kExhaustiveMaxFree = 24;
inline constexpr std::size_t kExhaustiveMaxK = 20;
// Joint cap on free entries + K for exhaustive ensemble averaging (2^(F+K) codewords).
inline constexpr std::size_t kExhaustiveMaxWork = 34;

// Rows of G = T * F_N for the information indices, in ascending index order.
std::vector<BitRow> generator_rows(const CodeConfig& config, const PreTransform& t);

// Full weight enumeration of one realization over all 2^K messages (Gray-code order).
// counts[0] = 1. Throws BudgetError if K > kBruteMaxK.
WeightHistogram exact_spectrum(const CodeConfig& config, const PreTransform& t, unsigned threads = 1);

// Exact ensemble mean of N_d over all 2^F transforms, d in [0, N].
struct ExactEnsembleHistogram {
    std::vector<DyadicRational> mean;
    std::uint64_t transforms = 0;
};

ExactEnsembleHistogram ensemble_average_exact(const CodeConfig& config);

struct BruteMethod {};
struct SclMethod {
    std::size_t list_size = 0;
};
using SpectrumMethod = std::variant<BruteMethod, SclMethod>;

// Monte-Carlo estimate of E[N_d] over random transforms.
struct MonteCarloHistogram {
    std::vector<long double> mean;     // per weight
    std::vector<long double> variance; // unbiased sample variance (0 for one sample)
    std::vector<bool> saturated;       // some sample reported a lower bound at this weight
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    long double standard_error(std::size_t d) const;
};

// Sample k uses random_transform(config, derive_seed(seed, k)). The result does not depend
// on `threads`.
MonteCarloHistogram ensemble_average_mc(const CodeConfig& config, std::uint64_t seed, std::size_t samples,
                                        const SpectrumMethod& method, unsigned threads = 1);

} // namespace polarspec
