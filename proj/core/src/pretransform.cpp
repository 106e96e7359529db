#include "polarspec/pretransform.hpp"

#include "polarspec/error.hpp"

#include <cctype>
#include <random>
#include <string>

namespace polarspec {

BinaryPoly parse_poly(std::string_view text)
{
    BinaryPoly bits;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        for (char ch : text.substr(2)) {
            const int c = std::tolower(static_cast<unsigned char>(ch));
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else
                throw ParseError("invalid hexadecimal polynomial '" + std::string(text) + "'");
            for (int b = 3; b >= 0; --b)
                bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
        }
    } else {
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw ParseError("invalid binary polynomial '" + std::string(text) + "'");
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    std::size_t lead = 0;
    while (lead < bits.size() && bits[lead] == 0)
        ++lead;
    bits.erase(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(lead));
    if (bits.empty())
        throw ParseError("polynomial '" + std::string(text) + "' is zero or empty");
    return bits;
}

PreTransform identity_transform(const CodeConfig& config)
{
    auto info = config.info_set();
    return PreTransform(config.m(), {info.begin(), info.end()});
}

PreTransform random_transform(const CodeConfig& config, std::uint64_t seed)
{
    PreTransform t = identity_transform(config);
    std::mt19937_64 gen(seed);
    std::uint64_t word = 0;
    int left = 0;
    const std::size_t n = config.n();
    for (auto i : config.info_set()) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (left == 0) {
                word = gen();
                left = 64;
            }
            if (word & 1u)
                t.set_entry(i, j, true);
            word >>= 1;
            --left;
        }
    }
    t.check_unit_upper();
    return t;
}

PreTransform pac_transform(const CodeConfig& config, const BinaryPoly& coeffs)
{
    if (coeffs.empty() || coeffs[0] != 1)
        throw Error("convolution polynomial must have c_0 = 1");
    PreTransform t = identity_transform(config);
    const std::size_t n = config.n();
    for (auto i : config.info_set())
        for (std::size_t j = 1; j < coeffs.size() && i + j <= n; ++j)
            if (coeffs[j])
                t.set_entry(i, i + j, true);
    t.check_unit_upper();
    return t;
}

CrcCode crc_transform(const CodeConfig& outer, std::size_t k, const BinaryPoly& poly)
{
    if (poly.empty() || poly[0] != 1)
        throw ParseError("CRC polynomial must have a leading one");
    const std::size_t r = poly.size() - 1;
    const std::size_t k_outer = outer.k();
    if (r == 0)
        throw Error("CRC polynomial must have degree >= 1");
    if (k < 1 || k >= k_outer)
        throw RangeError("message length K=" + std::to_string(k) + " must lie in [1, K'-1] with K'=" +
                         std::to_string(k_outer));
    if (k_outer - k != r)
        throw Error("CRC degree " + std::to_string(r) + " does not match K' - K = " + std::to_string(k_outer - k));

    const auto selected = outer.info_set();
    std::vector<std::size_t> info(selected.begin(), selected.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::size_t> crc(selected.begin() + static_cast<std::ptrdiff_t>(k), selected.end());
    CodeConfig config(outer.m(), info);
    PreTransform t(outer.m(), info);

    // reg[t] holds the coefficient of D^(r-1-t) of D^e mod g(D).
    std::vector<std::uint8_t> reg(r, 0);
    reg[r - 1] = 1; // D^0
    auto times_d = [&] {
        const std::uint8_t carry = reg[0];
        for (std::size_t b = 0; b + 1 < r; ++b)
            reg[b] = reg[b + 1];
        reg[r - 1] = 0;
        if (carry)
            for (std::size_t b = 0; b < r; ++b)
                reg[b] ^= poly[b + 1];
    };
    for (std::size_t step = 0; step < r; ++step)
        times_d();
    // Message bit k-th (1-based) has degree K - k, so it maps to D^(r + K - k) mod g.
    for (std::size_t pos = k; pos-- > 0;) {
        for (std::size_t b = 0; b < r; ++b)
            if (reg[b])
                t.set_entry(info[pos], crc[b], true);
        times_d();
    }
    t.check_unit_upper();
    return CrcCode{std::move(config), std::move(t), std::move(crc)};
}

} // namespace polarspec
