#include "polarspec/oracle.hpp"

#include "polarspec/error.hpp"
#include "polarspec/polar_core.hpp"
#include "polarspec/pretransform.hpp"
#include "polarspec/rng.hpp"
#include "polarspec/scl_collector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

namespace polarspec {

namespace {

__extension__ using u128 = unsigned __int128;

std::size_t popcount_words(const std::vector<std::uint64_t>& v) noexcept
{
    std::size_t w = 0;
    for (auto x : v)
        w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

// Adds the weight distribution of the span of `rows` (all 2^K combinations) into `counts`.
// Messages are split on their top bits into independent Gray-code walks.
void enumerate_span(const std::vector<BitRow>& rows, std::vector<std::uint64_t>& counts, unsigned threads)
{
    const std::size_t k = rows.size();
    const std::size_t words = rows.empty() ? 0 : rows[0].words().size();
    unsigned split_bits = 0;
    while ((1u << split_bits) < threads && split_bits < k && split_bits < 8)
        ++split_bits;
    const std::size_t low = k - split_bits;
    const std::size_t chunks = std::size_t{1} << split_bits;

    std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(counts.size(), 0));
    auto run_chunk = [&](std::size_t chunk) {
        std::vector<std::uint64_t> cur(words, 0);
        for (std::size_t b = 0; b < split_bits; ++b)
            if ((chunk >> b) & 1u) {
                const auto w = rows[low + b].words();
                for (std::size_t x = 0; x < words; ++x)
                    cur[x] ^= w[x];
            }
        auto& out = partial[chunk];
        ++out[popcount_words(cur)];
        const std::uint64_t steps = (std::uint64_t{1} << low);
        for (std::uint64_t s = 1; s < steps; ++s) {
            const auto w = rows[static_cast<std::size_t>(std::countr_zero(s))].words();
            for (std::size_t x = 0; x < words; ++x)
                cur[x] ^= w[x];
            ++out[popcount_words(cur)];
        }
    };

    if (threads <= 1 || chunks == 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            run_chunk(c);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += threads)
                    run_chunk(c);
            });
    }
    for (const auto& p : partial)
        for (std::size_t d = 0; d < counts.size(); ++d)
            counts[d] += p[d];
}

void check_transform(const CodeConfig& config, const PreTransform& t)
{
    const auto a = config.info_set();
    const auto b = t.indices();
    if (t.m() != config.m() || !std::equal(a.begin(), a.end(), b.begin(), b.end()))
        throw Error("transform rows do not match the information set");
}

} // namespace

std::vector<BitRow> generator_rows(const CodeConfig& config, const PreTransform& t)
{
    check_transform(config, t);
    std::vector<BitRow> rows;
    rows.reserve(config.k());
    for (std::size_t k = 0; k < config.k(); ++k) {
        BitRow row = t.offdiag_row(k);
        row.set(config.info_set()[k]);
        polar_transform(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

WeightHistogram exact_spectrum(const CodeConfig& config, const PreTransform& t, unsigned threads)
{
    if (config.k() > kBruteMaxK)
        throw BudgetError("brute-force enumeration needs K <= " + std::to_string(kBruteMaxK) + ", got K=" +
                          std::to_string(config.k()) + "; use the list decoder instead");
    WeightHistogram hist;
    hist.source = HistogramSource::brute;
    hist.counts.assign(config.n() + 1, 0);
    enumerate_span(generator_rows(config, t), hist.counts, std::max(1u, threads));
    return hist;
}

ExactEnsembleHistogram ensemble_average_exact(const CodeConfig& config)
{
    PreTransform t = identity_transform(config);
    const std::size_t free = t.free_entries();
    const std::size_t k = config.k();
    if (free > kExhaustiveMaxFree || k > kExhaustiveMaxK || free + k > kExhaustiveMaxWork)
        throw BudgetError("exhaustive ensemble needs F <= " + std::to_string(kExhaustiveMaxFree) + ", K <= " +
                          std::to_string(kExhaustiveMaxK) + " and F + K <= " + std::to_string(kExhaustiveMaxWork) +
                          "; got F=" + std::to_string(free) + ", K=" + std::to_string(k));

    // Free entry e <-> (row position, column); flipping T_ij toggles f^(j) in generator row of i.
    struct FreeEntry {
        std::size_t row;
        std::size_t column;
    };
    std::vector<FreeEntry> entries;
    entries.reserve(free);
    const auto info = config.info_set();
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = info[r] + 1; j <= config.n(); ++j)
            entries.push_back({r, j});

    auto rows = generator_rows(config, t);
    std::vector<std::uint64_t> sum(config.n() + 1, 0);
    enumerate_span(rows, sum, 1);
    const std::uint64_t transforms = std::uint64_t{1} << free;
    for (std::uint64_t s = 1; s < transforms; ++s) {
        const auto& e = entries[static_cast<std::size_t>(std::countr_zero(s))];
        rows[e.row] ^= kron_row(config.m(), e.column);
        enumerate_span(rows, sum, 1);
    }

    ExactEnsembleHistogram out;
    out.transforms = transforms;
    out.mean.reserve(sum.size());
    for (auto c : sum)
        out.mean.emplace_back(mpz_class(static_cast<unsigned long>(c)), free);
    return out;
}

long double MonteCarloHistogram::standard_error(std::size_t d) const
{
    if (samples == 0)
        return 0.0L;
    return std::sqrt(variance[d] / static_cast<long double>(samples));
}

MonteCarloHistogram ensemble_average_mc(const CodeConfig& config, std::uint64_t seed, std::size_t samples,
                                        const SpectrumMethod& method, unsigned threads)
{
    if (samples < 1)
        throw RangeError("at least one sample is required");
    if (std::holds_alternative<BruteMethod>(method) && config.k() > kBruteMaxK)
        throw BudgetError("brute-force enumeration needs K <= " + std::to_string(kBruteMaxK) +
                          "; use the list decoder instead");
    if (const auto* scl = std::get_if<SclMethod>(&method); scl && scl->list_size < 1)
        throw RangeError("list size must be >= 1");

    const std::size_t width = config.n() + 1;
    struct Partial {
        std::vector<u128> sum;
        std::vector<u128> sum_sq;
        std::vector<bool> saturated;
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples)));
    std::vector<Partial> parts(threads, Partial{std::vector<u128>(width, 0), std::vector<u128>(width, 0),
                                                std::vector<bool>(width, false)});

    auto run = [&](unsigned worker) {
        auto& part = parts[worker];
        // Contiguous sample ranges; the merge below is a plain sum, so order is irrelevant.
        const std::size_t begin = samples * worker / threads;
        const std::size_t end = samples * (worker + 1) / threads;
        for (std::size_t s = begin; s < end; ++s) {
            const PreTransform t = random_transform(config, derive_seed(seed, s));
            const WeightHistogram h = std::holds_alternative<BruteMethod>(method)
                                          ? exact_spectrum(config, t)
                                          : collect_low_weight(config, t, std::get<SclMethod>(method).list_size);
            for (std::size_t d = 0; d < width; ++d) {
                const u128 c = h.counts[d];
                part.sum[d] += c;
                part.sum_sq[d] += c * c;
                if (h.saturated(d))
                    part.saturated[d] = true;
            }
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(run, w);
    }

    MonteCarloHistogram out;
    out.samples = samples;
    out.seed = seed;
    out.mean.assign(width, 0.0L);
    out.variance.assign(width, 0.0L);
    out.saturated.assign(width, false);
    const auto n = static_cast<long double>(samples);
    for (std::size_t d = 0; d < width; ++d) {
        u128 sum = 0;
        u128 sum_sq = 0;
        for (const auto& p : parts) {
            sum += p.sum[d];
            sum_sq += p.sum_sq[d];
            out.saturated[d] = out.saturated[d] || p.saturated[d];
        }
        const long double s = static_cast<long double>(sum);
        out.mean[d] = s / n;
        if (samples > 1) {
            // (sum_sq - sum^2 / n) / (n - 1), with the numerator formed exactly: n*sum_sq - sum^2.
            const u128 num = static_cast<u128>(samples) * sum_sq - sum * sum;
            out.variance[d] = static_cast<long double>(num) / (n * (n - 1));
        }
    }
    return out;
}

} // namespace polarspec
