#pragma once

#include "polarspec/bitrow.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace polarspec {

// Unit upper-triangular pre-transformation matrix T over GF(2).
//
// Only rows whose index belongs to the information set are stored; rows of
// frozen indices never reach a codeword because the frozen inputs are zero.
// A stored row keeps the off-diagonal part of T restricted to columns > i;
// the diagonal is implicit.
class PreTransform {
public:
    PreTransform() = default;
    // Identity transform over the given sorted 1-based indices.
    PreTransform(int m, std::vector<std::size_t> indices);

    int m() const noexcept { return m_; }
    std::size_t length() const noexcept { return std::size_t{1} << m_; }

    std::span<const std::size_t> indices() const noexcept { return indices_; }
    bool has_row(std::size_t i) const noexcept;

    // T_{ij} with 1-based i, j.
    bool entry(std::size_t i, std::size_t j) const;
    // Sets an off-diagonal entry; requires j > i and i to be a stored row.
    void set_entry(std::size_t i, std::size_t j, bool value);

    // Off-diagonal bits of the k-th stored row (0-based k into indices()).
    const BitRow& offdiag_row(std::size_t k) const noexcept { return rows_[k]; }

    // Number of free off-diagonal entries, sum over stored i of (N - i).
    std::size_t free_entries() const noexcept;

    // Throws if any stored row has support on or left of its diagonal.
    void check_unit_upper() const;

    friend bool operator==(const PreTransform&, const PreTransform&) = default;

private:
    std::size_t position(std::size_t i) const;

    int m_ = 0;
    std::vector<std::size_t> indices_;
    std::vector<BitRow> rows_;
};

} // namespace polarspec
