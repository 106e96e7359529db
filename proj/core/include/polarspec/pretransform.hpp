#pragma once

#include "polarspec/constructions.hpp"
#include "polarspec/transform.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace polarspec {

// Binary polynomial coefficients, most significant first.
using BinaryPoly = std::vector<std::uint8_t>;

// "1000011" (MSB first) or hexadecimal "0x43". Leading zeros are dropped; the result is non-empty.
BinaryPoly parse_poly(std::string_view text);

PreTransform identity_transform(const CodeConfig& config);

// Every free entry T_ij (i in A, j > i) is an independent fair bit.
//
// Generator contract: std::mt19937_64 seeded with `seed`; rows in ascending i, columns in
// ascending j; each 64-bit output supplies 64 consecutive entries, least significant bit first.
PreTransform random_transform(const CodeConfig& config, std::uint64_t seed);

// Upper-triangular Toeplitz T with T_{i,i+j} = c_j (c_0 = 1), clipped at column N.
// `coeffs` lists c_0, c_1, ..., c_L.
PreTransform pac_transform(const CodeConfig& config, const BinaryPoly& coeffs);

struct CrcCode {
    CodeConfig config;          // the K information indices
    PreTransform transform;     // rows of the information indices, CRC columns set
    std::vector<std::size_t> crc_indices;
};

// CRC-aided code from K' = K + r selected indices: the K smallest carry the message,
// the r largest carry the remainder of D^r msg(D) mod g(D). The message polynomial takes
// the bit on the smallest index as its highest-degree coefficient; CRC bit t (coefficient
// of D^(r-1-t)) goes to the t-th CRC index in ascending order.
// `poly` lists g's coefficients from D^r down to D^0.
CrcCode crc_transform(const CodeConfig& outer, std::size_t k, const BinaryPoly& poly);

} // namespace polarspec
