#pragma once

#include "polarspec/bitrow.hpp"
#include "polarspec/transform.hpp"

#include <cstddef>

namespace polarspec {

// i-th row (1-based) of F^{(x)m}, F = [[1,0],[1,1]], in natural (non bit-reversed) order.
BitRow kron_row(int m, std::size_t i);

// Hamming weight of kron_row(m, i), i.e. 2^popcount(i-1).
std::size_t row_weight(int m, std::size_t i);

// In-place x = v * F_N over GF(2).
void polar_transform(BitRow& v) noexcept;

// x = u * T * F_N. u must vanish outside the transform's information rows.
BitRow encode(const BitRow& u, const PreTransform& t);

} // namespace polarspec
