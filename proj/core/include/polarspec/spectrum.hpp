#pragma once

#include "polarspec/constructions.hpp"
#include "polarspec/dyadic.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace polarspec {

// Weight distribution of the polar coset {f^(i) + sum_{j>i} u_j f^(j)} of length N = 2^m.
// counts[d] = A_d = 2^(N-i) * P(m, i, d) for 0 <= d <= d_max.
struct CosetSpectrum {
    int m = 0;
    std::size_t i = 0;
    std::vector<mpz_class> counts;

    std::size_t d_max() const noexcept { return counts.size() - 1; }
};

// Coset spectra for a set of indices at one length, sharing all lower recursion levels.
// Immutable after construction; concurrent reads are safe.
class CosetTable {
public:
    // Builds A_d(m, i) for d <= d_max and every i in `indices` (any order, duplicates allowed).
    CosetTable(int m, std::span<const std::size_t> indices, std::size_t d_max);

    int m() const noexcept { return m_; }
    std::size_t d_max() const noexcept { return d_max_; }
    // Throws RangeError if i was not requested.
    const std::vector<mpz_class>& counts(std::size_t i) const;

private:
    int m_;
    std::size_t d_max_;
    std::vector<std::vector<mpz_class>> top_; // indexed by i - 1; empty if not requested
};

CosetSpectrum coset_spectrum(int m, std::size_t i, std::size_t d_max);

// P(m, i, d): probability that row i of T*F_N has weight d over the uniform ensemble.
DyadicRational p_exact(int m, std::size_t i, std::size_t d);

// P(m, i): probability that row i of T*F_N keeps the weight of f^(i). Always a power of two.
DyadicRational p_min(int m, std::size_t i);

// Ensemble-average weight spectrum E[N_d] for 1 <= d <= d_max.
class AverageSpectrum {
public:
    AverageSpectrum(CodeConfig config, std::vector<DyadicRational> entries);

    const CodeConfig& config() const noexcept { return config_; }
    std::size_t d_max() const noexcept { return entries_.size() - 1; }
    // E[N_d]; d in [1, d_max].
    const DyadicRational& at(std::size_t d) const;
    // Sum over d in [1, d_max].
    DyadicRational total() const;

private:
    CodeConfig config_;
    std::vector<DyadicRational> entries_; // entries_[0] is unused and zero
};

AverageSpectrum avg_spectrum(const CodeConfig& config, std::size_t d_max);

struct NminResult {
    std::size_t d_min = 0;
    DyadicRational value;
};

// Expected number of minimum-weight codewords, from the closed-form P(m, i) recursion.
NminResult avg_nmin(const CodeConfig& config);

} // namespace polarspec
