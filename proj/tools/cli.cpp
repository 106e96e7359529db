#include "cli.hpp"

#include "report.hpp"

#include "polarspec/constructions.hpp"
#include "polarspec/error.hpp"
#include "polarspec/oracle.hpp"
#include "polarspec/pretransform.hpp"
#include "polarspec/scl_collector.hpp"
#include "polarspec/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

namespace polarspec::cli {
namespace {

const CLI::Range kAtLeastOne(1.0, 1e18, "AT LEAST 1");

// Usage problems detected after CLI11 parsing (malformed method or transform strings).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::string construction = "pw";
    std::string format = "json";
    std::optional<unsigned> round;
    std::string output;
};

std::uint64_t parse_u64(std::string_view text, const char* what)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return value;
}

unsigned default_threads()
{
    if (const char* env = std::getenv("POLARSPEC_THREADS"); env && *env) {
        unsigned v = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc{} && ptr == text.data() + text.size() && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CodeConfig build_code(const CommonOptions& opt, std::size_t k)
{
    try {
        order_of(opt.n);
    } catch (const RangeError& e) {
        throw UsageError(std::string("--n: ") + e.what());
    }
    if (opt.construction == "rm")
        return construct_rm(opt.n, k);
    if (opt.construction == "pw")
        return construct_pw(opt.n, k);
    if (opt.construction.rfind("file:", 0) == 0) {
        CodeConfig config = load_info_set(opt.construction.substr(5), opt.n);
        if (config.k() != k)
            throw Error("info-set file has " + std::to_string(config.k()) + " indices, expected " +
                        std::to_string(k));
        return config;
    }
    throw UsageError("unknown construction '" + opt.construction + "' (expected rm, pw or file:PATH)");
}

std::size_t require_k(const CommonOptions& opt)
{
    if (!opt.k)
        throw UsageError("--k is required");
    return *opt.k;
}

struct ParsedMethod {
    enum class Kind { brute, scl, exhaustive } kind = Kind::brute;
    std::size_t list_size = 0;
};

ParsedMethod parse_method(const std::string& text, bool allow_exhaustive)
{
    if (text == "brute")
        return {};
    if (allow_exhaustive && text == "exhaustive")
        return {ParsedMethod::Kind::exhaustive, 0};
    if (text.rfind("scl:", 0) == 0) {
        const auto l = parse_u64(std::string_view(text).substr(4), "list size");
        if (l == 0)
            throw UsageError("list size must be >= 1");
        return {ParsedMethod::Kind::scl, static_cast<std::size_t>(l)};
    }
    throw UsageError("unknown method '" + text + "'");
}

std::string render(const DyadicRational& v, const std::optional<unsigned>& round)
{
    return round ? v.to_decimal(*round) : v.to_decimal();
}

std::string render(long double v, const std::optional<unsigned>& round)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(static_cast<int>(round.value_or(6))) << v;
    return s.str();
}

void fill_code(SpectrumReport& r, const CommonOptions& opt, const CodeConfig& config)
{
    r.n = config.n();
    r.k = config.k();
    r.construction = opt.construction;
    r.info_set.assign(config.info_set().begin(), config.info_set().end());
}

void emit(const SpectrumReport& r, const CommonOptions& opt, std::ostream& out)
{
    const std::string text = opt.format == "csv" ? to_csv(r) : to_json(r);
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << text))
        throw Error("cannot write " + opt.output);
}

void add_common(CLI::App& cmd, CommonOptions& opt, bool k_required)
{
    cmd.add_option("--n", opt.n, "code length N (power of two)")->required()->check(kAtLeastOne);
    auto* k = cmd.add_option("--k", opt.k, "number of information bits K");
    if (k_required)
        k->required();
    cmd.add_option("--construction", opt.construction, "rm, pw or file:PATH")->capture_default_str();
    cmd.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd.add_option("--round", opt.round, "fractional digits in decimal renderings");
    cmd.add_option("--output", opt.output, "write the report to this file instead of stdout");
}

void verify_average(const AverageSpectrum& spec)
{
    const CodeConfig& config = spec.config();
    if (spec.d_max() != config.n())
        throw UsageError("--verify requires --dmax equal to N");
    const DyadicRational expected((mpz_class(1) << static_cast<mp_bitcnt_t>(config.k())) - 1);
    if (!(spec.total() == expected))
        throw Error("verify: total mass " + spec.total().to_decimal() + " differs from 2^K - 1");
    const std::size_t w = min_row_weight(config);
    const bool odd_allowed = config.is_info(1);
    for (std::size_t d = 1; d <= spec.d_max(); ++d) {
        if (spec.at(d).is_zero())
            continue;
        if (d < w)
            throw Error("verify: nonzero mass at d=" + std::to_string(d) + " below minimum row weight");
        if (d % 2 == 1 && !odd_allowed)
            throw Error("verify: nonzero mass at odd d=" + std::to_string(d));
    }
}

int avg_spectrum_cmd(const CommonOptions& opt, std::optional<std::size_t> dmax, bool verify, std::ostream& out)
{
    const CodeConfig config = build_code(opt, require_k(opt));
    const std::size_t d_max = dmax.value_or(config.n());
    if (d_max < 1 || d_max > config.n())
        throw UsageError("--dmax must be in [1, N]");
    const AverageSpectrum spec = avg_spectrum(config, d_max);
    if (verify)
        verify_average(spec);

    SpectrumReport r;
    fill_code(r, opt, config);
    r.transform.kind = "random";
    r.method = "recursion";
    for (std::size_t d = 1; d <= d_max; ++d)
        r.entries.push_back({d, spec.at(d), render(spec.at(d), opt.round), {}, {}, {}});
    emit(r, opt, out);
    return kExitOk;
}

struct TransformChoice {
    CodeConfig config;
    PreTransform transform;
    TransformDescriptor descriptor;
};

TransformChoice build_transform(const CommonOptions& opt, const std::string& text)
{
    const std::size_t k = require_k(opt);
    if (text == "identity") {
        CodeConfig config = build_code(opt, k);
        PreTransform t = identity_transform(config);
        return {std::move(config), std::move(t), {"identity", {}, {}, {}}};
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("unknown transform '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    if (kind == "random") {
        const auto seed = parse_u64(arg, "seed");
        CodeConfig config = build_code(opt, k);
        PreTransform t = random_transform(config, seed);
        return {std::move(config), std::move(t), {"random", seed, {}, {}}};
    }
    if (kind == "pac") {
        BinaryPoly poly;
        try {
            poly = parse_poly(arg);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        CodeConfig config = build_code(opt, k);
        PreTransform t = pac_transform(config, poly);
        return {std::move(config), std::move(t), {"pac", {}, arg, {}}};
    }
    if (kind == "crc") {
        const auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw UsageError("crc transform needs POLY,KPRIME");
        BinaryPoly poly;
        try {
            poly = parse_poly(arg.substr(0, comma));
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        const auto k_prime = static_cast<std::size_t>(parse_u64(arg.substr(comma + 1), "K'"));
        const CodeConfig outer = build_code(opt, k_prime);
        CrcCode crc = crc_transform(outer, k, poly);
        return {std::move(crc.config), std::move(crc.transform), {"crc", {}, arg.substr(0, comma), k_prime}};
    }
    throw UsageError("unknown transform '" + text + "'");
}

int exact_spectrum_cmd(const CommonOptions& opt, const std::string& transform_text, const std::string& method_text,
                       unsigned threads, std::ostream& out)
{
    const ParsedMethod method = parse_method(method_text, false);
    TransformChoice choice = build_transform(opt, transform_text);
    const WeightHistogram hist = method.kind == ParsedMethod::Kind::scl
                                     ? collect_low_weight(choice.config, choice.transform, method.list_size)
                                     : exact_spectrum(choice.config, choice.transform, threads);

    SpectrumReport r;
    fill_code(r, opt, choice.config);
    r.transform = choice.descriptor;
    const bool scl = method.kind == ParsedMethod::Kind::scl;
    r.method = scl ? "scl" : "brute";
    if (scl)
        r.list_size = method.list_size;
    for (std::size_t d = 1; d < hist.counts.size(); ++d) {
        const auto v = DyadicRational::from_int(hist.counts[d]);
        ReportEntry e{d, v, render(v, opt.round), {}, {}, {}};
        if (scl)
            e.saturated = hist.saturated(d);
        r.entries.push_back(std::move(e));
    }
    emit(r, opt, out);
    return kExitOk;
}

int ensemble_cmd(const CommonOptions& opt, std::size_t samples, std::uint64_t seed, const std::string& method_text,
                 unsigned threads, std::ostream& out)
{
    const ParsedMethod method = parse_method(method_text, true);
    const CodeConfig config = build_code(opt, require_k(opt));

    SpectrumReport r;
    fill_code(r, opt, config);
    r.transform.kind = "random";
    if (method.kind == ParsedMethod::Kind::exhaustive) {
        const ExactEnsembleHistogram exact = ensemble_average_exact(config);
        r.method = "exhaustive-ensemble";
        r.samples = static_cast<std::size_t>(exact.transforms);
        for (std::size_t d = 1; d < exact.mean.size(); ++d)
            r.entries.push_back({d, exact.mean[d], render(exact.mean[d], opt.round), {}, {}, {}});
        emit(r, opt, out);
        return kExitOk;
    }

    SpectrumMethod m = BruteMethod{};
    if (method.kind == ParsedMethod::Kind::scl)
        m = SclMethod{method.list_size};
    const MonteCarloHistogram mc = ensemble_average_mc(config, seed, samples, m, threads);
    r.method = "monte-carlo";
    r.samples = mc.samples;
    r.seed = mc.seed;
    if (method.kind == ParsedMethod::Kind::scl)
        r.list_size = method.list_size;
    for (std::size_t d = 1; d < mc.mean.size(); ++d) {
        ReportEntry e{d, {}, render(mc.mean[d], opt.round), render(mc.variance[d], opt.round), mc.samples, {}};
        if (method.kind == ParsedMethod::Kind::scl)
            e.saturated = static_cast<bool>(mc.saturated[d]);
        r.entries.push_back(std::move(e));
    }
    emit(r, opt, out);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ensemble-average and realization weight spectra of pre-transformed polar codes", "polarspec"};
    app.require_subcommand(1);

    CommonOptions avg_opt;
    std::optional<std::size_t> dmax;
    bool verify = false;
    auto* avg = app.add_subcommand("avg-spectrum", "exact ensemble-average spectrum by recursion");
    add_common(*avg, avg_opt, true);
    avg->add_option("--dmax", dmax, "largest weight reported (default N)");
    avg->add_flag("--verify", verify, "check total mass, parity and minimum-weight zeros (needs --dmax N)");

    const unsigned threads_default = default_threads();

    CommonOptions exact_opt;
    std::string transform_text = "identity";
    std::string exact_method = "brute";
    unsigned exact_threads = threads_default;
    auto* exact = app.add_subcommand("exact-spectrum", "weight spectrum of one code realization");
    add_common(*exact, exact_opt, true);
    exact->add_option("--transform", transform_text, "identity, random:SEED, pac:POLY or crc:POLY,KPRIME")
        ->capture_default_str();
    exact->add_option("--method", exact_method, "brute or scl:L")->capture_default_str();
    exact->add_option("--threads", exact_threads, "worker threads")->check(kAtLeastOne);

    CommonOptions ens_opt;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::string ens_method = "brute";
    unsigned ens_threads = threads_default;
    auto* ens = app.add_subcommand("ensemble", "ensemble average over random pre-transforms");
    add_common(*ens, ens_opt, true);
    ens->add_option("--samples", samples, "number of sampled transforms")
        ->check(kAtLeastOne)
        ->capture_default_str();
    ens->add_option("--seed", seed, "master seed")->capture_default_str();
    ens->add_option("--method", ens_method, "brute, scl:L or exhaustive")->capture_default_str();
    ens->add_option("--threads", ens_threads, "worker threads")->check(kAtLeastOne);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*avg)
            return avg_spectrum_cmd(avg_opt, dmax, verify, out);
        if (*exact)
            return exact_spectrum_cmd(exact_opt, transform_text, exact_method, exact_threads, out);
        return ensemble_cmd(ens_opt, samples, seed, ens_method, ens_threads, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace polarspec::cli
