#pragma once

#include "polarspec/dyadic.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polarspec::cli {

struct ReportEntry {
    std::size_t d = 0;
    std::optional<DyadicRational> exact; // deterministic methods only
    std::string value;                   // decimal rendering
    std::optional<std::string> variance; // stochastic methods only
    std::optional<std::size_t> samples;
    std::optional<bool> saturated; // list-decoder methods only
};

struct TransformDescriptor {
    std::string kind; // identity | random | pac | crc | ensemble
    std::optional<std::uint64_t> seed;
    std::optional<std::string> poly;
    std::optional<std::size_t> k_prime;
};

struct SpectrumReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string construction;
    std::vector<std::size_t> info_set;
    TransformDescriptor transform;
    std::string method; // recursion | brute | exhaustive-ensemble | monte-carlo | scl
    std::optional<std::size_t> list_size;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::vector<ReportEntry> entries;
};

// Canonical JSON: sorted keys, two-space indent, trailing newline, no floating-point values.
std::string to_json(const SpectrumReport& report);
SpectrumReport from_json(const std::string& text);

inline constexpr const char* kCsvHeader = "d,value_decimal,num,exp2,variance,samples,saturated";
std::string to_csv(const SpectrumReport& report);

} // namespace polarspec::cli
