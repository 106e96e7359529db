#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polarspec {

// Packed binary row vector of power-of-two length. Positions are 1-based.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t length);

    // Parses a string of '0'/'1' characters, first character is position 1.
    static BitRow from_string(std::string_view bits);

    std::size_t size() const noexcept { return length_; }

    bool get(std::size_t pos) const noexcept
    {
        --pos;
        return (words_[pos >> 6] >> (pos & 63)) & 1u;
    }
    void set(std::size_t pos, bool value = true) noexcept
    {
        --pos;
        const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
        if (value)
            words_[pos >> 6] |= mask;
        else
            words_[pos >> 6] &= ~mask;
    }
    void flip(std::size_t pos) noexcept
    {
        --pos;
        words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63);
    }

    std::size_t weight() const noexcept
    {
        std::size_t w = 0;
        for (auto word : words_)
            w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }
    bool none() const noexcept;

    BitRow& operator^=(const BitRow& other) noexcept;
    friend BitRow operator^(BitRow lhs, const BitRow& rhs) noexcept
    {
        lhs ^= rhs;
        return lhs;
    }
    friend bool operator==(const BitRow&, const BitRow&) = default;

    std::span<std::uint64_t> words() noexcept { return words_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace polarspec
