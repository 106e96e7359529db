#include "polarspec/bitrow.hpp"

#include "polarspec/error.hpp"

#include <algorithm>

namespace polarspec {

BitRow::BitRow(std::size_t length) : length_(length), words_((length + 63) / 64, 0)
{
    if (length == 0 || !std::has_single_bit(length))
        throw RangeError("bit row length must be a power of two, got " + std::to_string(length));
}

BitRow BitRow::from_string(std::string_view bits)
{
    BitRow row(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1')
            row.set(j + 1);
        else if (bits[j] != '0')
            throw ParseError("bit string may only contain '0' and '1'");
    }
    return row;
}

bool BitRow::none() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitRow& BitRow::operator^=(const BitRow& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

std::string BitRow::to_string() const
{
    std::string out(length_, '0');
    for (std::size_t j = 1; j <= length_; ++j)
        if (get(j))
            out[j - 1] = '1';
    return out;
}

} // namespace polarspec
