#include "polarspec/scl_collector.hpp"

#include "polarspec/error.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>

namespace polarspec {

namespace {

inline std::int32_t min_sum(std::int32_t a, std::int32_t b) noexcept
{
    const std::int32_t ma = a < 0 ? -a : a;
    const std::int32_t mb = b < 0 ? -b : b;
    const std::int32_t mag = ma < mb ? ma : mb;
    return ((a < 0) != (b < 0)) ? -mag : mag;
}

// Flat per-path storage. A slot holds, for layers 1..m, the LLRs of the current sub-block
// (layer l has 2^(m-l) entries at offset N - 2^(m-l+1)) and the re-encoded left child
// awaiting its sibling, plus the decision, message and dynamic-frozen accumulator words.
class PathPool {
public:
    PathPool(int m, std::size_t capacity)
        : m_(m), n_(std::size_t{1} << m), words_((n_ + 63) / 64), capacity_(capacity),
          llr_(capacity * n_), left_(capacity * n_), decisions_(capacity * words_), message_(capacity * words_),
          acc_(capacity * words_), metric_(capacity, 0)
    {
        free_.reserve(capacity);
        for (std::size_t s = capacity; s-- > 0;)
            free_.push_back(static_cast<std::uint32_t>(s));
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }

    std::uint32_t acquire()
    {
        assert(!free_.empty());
        const auto s = free_.back();
        free_.pop_back();
        return s;
    }
    void release(std::uint32_t s) { free_.push_back(s); }

    void clear(std::uint32_t s)
    {
        std::fill_n(left_.begin() + static_cast<std::ptrdiff_t>(s * n_), n_, std::uint8_t{0});
        std::fill_n(decisions_.begin() + static_cast<std::ptrdiff_t>(s * words_), words_, 0);
        std::fill_n(message_.begin() + static_cast<std::ptrdiff_t>(s * words_), words_, 0);
        std::fill_n(acc_.begin() + static_cast<std::ptrdiff_t>(s * words_), words_, 0);
        metric_[s] = 0;
    }

    void copy(std::uint32_t from, std::uint32_t to)
    {
        std::memcpy(llr(to), llr(from), n_ * sizeof(std::int32_t));
        std::memcpy(left(to), left(from), n_);
        std::memcpy(decisions(to), decisions(from), words_ * sizeof(std::uint64_t));
        std::memcpy(message(to), message(from), words_ * sizeof(std::uint64_t));
        std::memcpy(acc(to), acc(from), words_ * sizeof(std::uint64_t));
        metric_[to] = metric_[from];
    }

    std::int32_t* llr(std::uint32_t s) noexcept { return llr_.data() + s * n_; }
    std::uint8_t* left(std::uint32_t s) noexcept { return left_.data() + s * n_; }
    std::uint64_t* decisions(std::uint32_t s) noexcept { return decisions_.data() + s * words_; }
    std::uint64_t* message(std::uint32_t s) noexcept { return message_.data() + s * words_; }
    std::uint64_t* acc(std::uint32_t s) noexcept { return acc_.data() + s * words_; }
    std::uint64_t& metric(std::uint32_t s) noexcept { return metric_[s]; }

    static std::size_t layer_offset(std::size_t n, int m, int layer) noexcept
    {
        return n - (std::size_t{1} << (m - layer + 1));
    }

    // Recomputes the LLRs of layers first..m for phase phi (0-based).
    void update_llrs(std::uint32_t s, std::size_t phi, int first) noexcept
    {
        std::int32_t* base = llr(s);
        const std::uint8_t* lbits = left(s);
        for (int layer = first; layer <= m_; ++layer) {
            const std::size_t half = std::size_t{1} << (m_ - layer);
            std::int32_t* out = base + layer_offset(n_, m_, layer);
            const bool right = (phi >> (m_ - layer)) & 1u;
            if (layer == 1) {
                // Channel layer is all +1: f = +1, g = 1 + (1 - 2a).
                if (right) {
                    const std::uint8_t* a = lbits + layer_offset(n_, m_, layer);
                    for (std::size_t j = 0; j < half; ++j)
                        out[j] = a[j] ? 0 : 2;
                } else {
                    std::fill_n(out, half, 1);
                }
                continue;
            }
            const std::int32_t* in = base + layer_offset(n_, m_, layer - 1);
            if (right) {
                const std::uint8_t* a = lbits + layer_offset(n_, m_, layer);
                for (std::size_t j = 0; j < half; ++j)
                    out[j] = a[j] ? in[j + half] - in[j] : in[j + half] + in[j];
            } else {
                for (std::size_t j = 0; j < half; ++j)
                    out[j] = min_sum(in[j], in[j + half]);
            }
        }
    }

    // Stores decision v at phase phi and pushes re-encoded bits up the tree. When the
    // codeword is complete (last phase) it is written to `codeword`.
    void propagate(std::uint32_t s, std::size_t phi, std::uint8_t v, std::vector<std::uint8_t>& scratch,
                   std::vector<std::uint8_t>* codeword) noexcept
    {
        std::uint8_t* lbits = left(s);
        scratch[0] = v;
        std::size_t len = 1;
        int layer = m_;
        while (layer >= 1 && ((phi >> (m_ - layer)) & 1u)) {
            const std::uint8_t* a = lbits + layer_offset(n_, m_, layer);
            for (std::size_t j = 0; j < len; ++j) {
                scratch[j + len] = scratch[j];
                scratch[j] ^= a[j];
            }
            len *= 2;
            --layer;
        }
        if (layer >= 1)
            std::memcpy(lbits + layer_offset(n_, m_, layer), scratch.data(), len);
        else if (codeword)
            codeword->assign(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(len));
    }

private:
    int m_;
    std::size_t n_;
    std::size_t words_;
    std::size_t capacity_;
    std::vector<std::int32_t> llr_;
    std::vector<std::uint8_t> left_;
    std::vector<std::uint64_t> decisions_;
    std::vector<std::uint64_t> message_;
    std::vector<std::uint64_t> acc_;
    std::vector<std::uint64_t> metric_;
    std::vector<std::uint32_t> free_;
};

inline bool test_bit(const std::uint64_t* words, std::size_t pos0) noexcept
{
    return (words[pos0 >> 6] >> (pos0 & 63)) & 1u;
}
inline void set_bit(std::uint64_t* words, std::size_t pos0) noexcept
{
    words[pos0 >> 6] |= std::uint64_t{1} << (pos0 & 63);
}

// a < b in lexicographic order of decision prefixes (position 1 first).
bool lex_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept
{
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t diff = a[w] ^ b[w];
        if (diff != 0)
            return ((a[w] >> std::countr_zero(diff)) & 1u) == 0;
    }
    return false;
}

struct Candidate {
    std::uint64_t metric;
    std::uint32_t parent;
    std::uint8_t bit;
};

} // namespace

ListDecodeResult list_decode_all_zero(const CodeConfig& config, const PreTransform& t, std::size_t list_size)
{
    if (list_size < 1)
        throw RangeError("list size must be >= 1");
    {
        const auto a = config.info_set();
        const auto b = t.indices();
        if (t.m() != config.m() || !std::equal(a.begin(), a.end(), b.begin(), b.end()))
            throw Error("transform rows do not match the information set");
    }
    const int m = config.m();
    const std::size_t n = config.n();
    const auto info = config.info_set();
    const std::size_t capacity = std::min<std::size_t>(list_size, std::size_t{1} << std::min<std::size_t>(info.size(), 40));

    PathPool pool(m, capacity);
    const std::size_t words = pool.words();
    std::vector<std::uint8_t> scratch(n);
    ListDecodeResult result;

    std::vector<std::uint32_t> active{pool.acquire()};
    pool.clear(active[0]);

    std::vector<Candidate> cands;
    std::vector<std::uint8_t> kept_children;
    std::vector<std::uint32_t> next_active;
    std::vector<std::uint32_t> slots;
    std::vector<std::vector<std::uint8_t>> final_codewords(capacity);
    std::size_t info_pos = 0;

    for (std::size_t phi = 0; phi < n; ++phi) {
        const int first = phi == 0 ? 1 : m - std::countr_zero(phi);
        const bool last = phi + 1 == n;
        for (auto s : active)
            pool.update_llrs(s, phi, first);

        const bool is_info = info_pos < info.size() && info[info_pos] == phi + 1;
        if (!is_info) {
            for (auto s : active) {
                const std::int32_t llr = pool.llr(s)[n - 2];
                const std::uint8_t v = test_bit(pool.acc(s), phi);
                pool.metric(s) += static_cast<std::uint64_t>(path_metric_update(v, llr));
                if (v)
                    set_bit(pool.decisions(s), phi);
                pool.propagate(s, phi, v, scratch, last ? &final_codewords[s] : nullptr);
            }
            continue;
        }

        cands.clear();
        for (auto s : active) {
            const std::int32_t llr = pool.llr(s)[n - 2];
            for (std::uint8_t bit = 0; bit < 2; ++bit)
                cands.push_back({pool.metric(s) + static_cast<std::uint64_t>(path_metric_update(bit, llr)), s, bit});
        }

        if (cands.size() > list_size) {
            auto by_metric = [](const Candidate& a, const Candidate& b) { return a.metric < b.metric; };
            auto cut = cands.begin() + static_cast<std::ptrdiff_t>(list_size);
            std::nth_element(cands.begin(), cut - 1, cands.end(), by_metric);
            const std::uint64_t boundary = (cut - 1)->metric;
            // Candidates strictly below the boundary metric come first, then the ties.
            auto below_end = std::partition(cands.begin(), cands.end(),
                                            [&](const Candidate& c) { return c.metric < boundary; });
            auto tie_end = std::partition(below_end, cands.end(),
                                          [&](const Candidate& c) { return c.metric == boundary; });
            auto lex = [&](const Candidate& a, const Candidate& b) {
                if (a.parent == b.parent)
                    return a.bit < b.bit;
                return lex_less(pool.decisions(a.parent), pool.decisions(b.parent), words);
            };
            if (static_cast<std::size_t>(tie_end - cands.begin()) > list_size) {
                std::nth_element(below_end, cut, tie_end, lex);
                result.pruned_min = std::min(result.pruned_min, boundary);
            } else {
                for (auto it = tie_end; it != cands.end(); ++it)
                    result.pruned_min = std::min(result.pruned_min, it->metric);
            }
            cands.resize(list_size);
        }

        // Slots with no surviving child are recycled before clones are made.
        kept_children.assign(capacity, 0);
        for (const auto& c : cands)
            kept_children[c.parent] |= static_cast<std::uint8_t>(1u << c.bit);
        for (auto s : active)
            if (kept_children[s] == 0)
                pool.release(s);

        next_active.clear();
        const BitRow& row = t.offdiag_row(info_pos);
        const auto row_words = row.words();
        // Clone every parent that keeps both children before any slot is modified.
        slots.resize(cands.size());
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
            const auto& c = cands[idx];
            slots[idx] = c.parent;
            if (kept_children[c.parent] == 3 && c.bit == 1) {
                slots[idx] = pool.acquire();
                pool.copy(c.parent, slots[idx]);
            }
        }
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
            const auto& c = cands[idx];
            const std::uint32_t s = slots[idx];
            pool.metric(s) = c.metric;
            // Message bit = decision xor dynamic contribution of earlier message bits.
            const bool msg = (c.bit != 0) != test_bit(pool.acc(s), phi);
            if (c.bit)
                set_bit(pool.decisions(s), phi);
            if (msg) {
                set_bit(pool.message(s), phi);
                std::uint64_t* acc = pool.acc(s);
                for (std::size_t w = 0; w < words; ++w)
                    acc[w] ^= row_words[w];
            }
            pool.propagate(s, phi, c.bit, scratch, last ? &final_codewords[s] : nullptr);
            next_active.push_back(s);
        }
        active.swap(next_active);
        ++info_pos;
    }

    result.paths.reserve(active.size());
    for (auto s : active) {
        DecodedPath path{BitRow(n), BitRow(n), BitRow(n), pool.metric(s)};
        std::copy_n(pool.decisions(s), words, path.decisions.words().begin());
        std::copy_n(pool.message(s), words, path.message.words().begin());
        const auto& cw = final_codewords[s];
        for (std::size_t j = 0; j < n; ++j)
            if (cw[j])
                path.codeword.set(j + 1);
        assert(path.codeword.weight() == path.metric);
        result.paths.push_back(std::move(path));
    }
    std::sort(result.paths.begin(), result.paths.end(), [](const DecodedPath& a, const DecodedPath& b) {
        if (a.metric != b.metric)
            return a.metric < b.metric;
        const auto wa = a.decisions.words();
        const auto wb = b.decisions.words();
        return lex_less(wa.data(), wb.data(), wa.size());
    });
    return result;
}

WeightHistogram collect_low_weight(const CodeConfig& config, const PreTransform& t, std::size_t list_size)
{
    const auto decoded = list_decode_all_zero(config, t, list_size);
    WeightHistogram hist;
    hist.source = HistogramSource::scl;
    hist.counts.assign(config.n() + 1, 0);
    for (const auto& path : decoded.paths) {
        const std::size_t w = path.codeword.weight();
        if (w > 0)
            ++hist.counts[w];
    }
    if (decoded.pruned_min != std::numeric_limits<std::uint64_t>::max())
        hist.exact_below = static_cast<std::size_t>(decoded.pruned_min);
    return hist;
}

} // namespace polarspec
