#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace polarspec {

// A polar-type code: length N = 2^m and a sorted 1-based information set.
class CodeConfig {
public:
    CodeConfig() = default;
    // Validates: 1 <= m <= 30, indices strictly increasing within [1, N], K >= 1.
    CodeConfig(int m, std::vector<std::size_t> info_set);

    int m() const noexcept { return m_; }
    std::size_t n() const noexcept { return std::size_t{1} << m_; }
    std::size_t k() const noexcept { return info_set_.size(); }
    std::span<const std::size_t> info_set() const noexcept { return info_set_; }
    std::vector<std::size_t> frozen_set() const;
    bool is_info(std::size_t i) const noexcept;

    friend bool operator==(const CodeConfig&, const CodeConfig&) = default;

private:
    int m_ = 0;
    std::vector<std::size_t> info_set_;
};

// log2 of N; throws RangeError unless N is a power of two >= 2.
int order_of(std::size_t n);

// Exact comparison of polarization-weight scores sum_j b_j 2^(j/4) of indices a and b
// (1-based, score taken over the bits of index-1). Returns <0, 0 or >0.
int compare_pw_score(std::size_t a, std::size_t b);
// Floating-point PW score, for display only.
double pw_score(std::size_t i);

// K indices of largest row weight; boundary ties broken by larger PW score, then larger index.
CodeConfig construct_rm(std::size_t n, std::size_t k);
// K indices of largest PW score (beta = 2^(1/4)); ties broken by larger index.
CodeConfig construct_pw(std::size_t n, std::size_t k);

// Reads one 1-based index per line. Blank lines and lines starting with '#' are skipped;
// CRLF line endings are accepted. Indices need not be sorted but must be unique.
CodeConfig load_info_set(const std::filesystem::path& path, std::size_t n);

// Minimum row weight over the information set, d_min of the untransformed code.
std::size_t min_row_weight(const CodeConfig& config);

} // namespace polarspec
