#include "polarspec/transform.hpp"

#include "polarspec/error.hpp"

#include <algorithm>
#include <string>

namespace polarspec {

PreTransform::PreTransform(int m, std::vector<std::size_t> indices) : m_(m), indices_(std::move(indices))
{
    if (m < 1 || m > 30)
        throw RangeError("transform order m out of range: " + std::to_string(m));
    const std::size_t n = length();
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] < 1 || indices_[k] > n)
            throw RangeError("transform row index out of range: " + std::to_string(indices_[k]));
        if (k > 0 && indices_[k] <= indices_[k - 1])
            throw RangeError("transform row indices must be strictly increasing");
    }
    rows_.assign(indices_.size(), BitRow(n));
}

bool PreTransform::has_row(std::size_t i) const noexcept
{
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::size_t PreTransform::position(std::size_t i) const
{
    auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
    if (it == indices_.end() || *it != i)
        throw RangeError("row " + std::to_string(i) + " is not an information row of the transform");
    return static_cast<std::size_t>(it - indices_.begin());
}

bool PreTransform::entry(std::size_t i, std::size_t j) const
{
    const std::size_t n = length();
    if (i < 1 || i > n || j < 1 || j > n)
        throw RangeError("transform entry out of range");
    if (i == j)
        return true;
    if (j < i || !has_row(i))
        return false;
    return rows_[position(i)].get(j);
}

void PreTransform::set_entry(std::size_t i, std::size_t j, bool value)
{
    if (j <= i || j > length())
        throw RangeError("only entries strictly right of the diagonal can be set");
    rows_[position(i)].set(j, value);
}

std::size_t PreTransform::free_entries() const noexcept
{
    std::size_t total = 0;
    for (auto i : indices_)
        total += length() - i;
    return total;
}

void PreTransform::check_unit_upper() const
{
    for (std::size_t k = 0; k < indices_.size(); ++k)
        for (std::size_t j = 1; j <= indices_[k]; ++j)
            if (rows_[k].get(j))
                throw Error("transform is not unit upper-triangular at row " + std::to_string(indices_[k]));
}

} // namespace polarspec
