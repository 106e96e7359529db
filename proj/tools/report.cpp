#include "report.hpp"

#include <json.hpp>

#include <sstream>

namespace polarspec::cli {

using nlohmann::json;

std::string to_json(const SpectrumReport& report)
{
    json code = {
        {"n", report.n},
        {"k", report.k},
        {"construction", report.construction},
        {"info_set", report.info_set},
    };
    json transform = {{"kind", report.transform.kind}};
    if (report.transform.seed)
        transform["seed"] = *report.transform.seed;
    if (report.transform.poly)
        transform["poly"] = *report.transform.poly;
    if (report.transform.k_prime)
        transform["k_prime"] = *report.transform.k_prime;

    json entries = json::array();
    for (const auto& e : report.entries) {
        json row = {{"d", e.d}, {"value", e.value}};
        if (e.exact)
            row["exact"] = {{"num", e.exact->num().get_str()}, {"exp2", e.exact->exp()}};
        if (e.variance)
            row["variance"] = *e.variance;
        if (e.samples)
            row["samples"] = *e.samples;
        if (e.saturated)
            row["saturated"] = *e.saturated;
        entries.push_back(std::move(row));
    }

    json doc = {{"code", code}, {"transform", transform}, {"method", report.method}, {"entries", entries}};
    if (report.list_size)
        doc["list_size"] = *report.list_size;
    if (report.samples)
        doc["samples"] = *report.samples;
    if (report.seed)
        doc["seed"] = *report.seed;
    return doc.dump(2) + "\n";
}

SpectrumReport from_json(const std::string& text)
{
    const json doc = json::parse(text);
    SpectrumReport r;
    const auto& code = doc.at("code");
    r.n = code.at("n").get<std::size_t>();
    r.k = code.at("k").get<std::size_t>();
    r.construction = code.at("construction").get<std::string>();
    r.info_set = code.at("info_set").get<std::vector<std::size_t>>();
    const auto& t = doc.at("transform");
    r.transform.kind = t.at("kind").get<std::string>();
    if (t.contains("seed"))
        r.transform.seed = t["seed"].get<std::uint64_t>();
    if (t.contains("poly"))
        r.transform.poly = t["poly"].get<std::string>();
    if (t.contains("k_prime"))
        r.transform.k_prime = t["k_prime"].get<std::size_t>();
    r.method = doc.at("method").get<std::string>();
    if (doc.contains("list_size"))
        r.list_size = doc["list_size"].get<std::size_t>();
    if (doc.contains("samples"))
        r.samples = doc["samples"].get<std::size_t>();
    if (doc.contains("seed"))
        r.seed = doc["seed"].get<std::uint64_t>();
    for (const auto& row : doc.at("entries")) {
        ReportEntry e;
        e.d = row.at("d").get<std::size_t>();
        e.value = row.at("value").get<std::string>();
        if (row.contains("exact"))
            e.exact = DyadicRational(mpz_class(row["exact"].at("num").get<std::string>()),
                                     row["exact"].at("exp2").get<std::uint64_t>());
        if (row.contains("variance"))
            e.variance = row["variance"].get<std::string>();
        if (row.contains("samples"))
            e.samples = row["samples"].get<std::size_t>();
        if (row.contains("saturated"))
            e.saturated = row["saturated"].get<bool>();
        r.entries.push_back(std::move(e));
    }
    return r;
}

std::string to_csv(const SpectrumReport& report)
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& e : report.entries) {
        out << e.d << ',' << e.value << ',';
        if (e.exact)
            out << e.exact->num().get_str() << ',' << e.exact->exp();
        else
            out << ',';
        out << ',' << e.variance.value_or("") << ',';
        if (e.samples)
            out << *e.samples;
        out << ',';
        if (e.saturated)
            out << (*e.saturated ? "true" : "false");
        out << '\n';
    }
    return out.str();
}

} // namespace polarspec::cli
