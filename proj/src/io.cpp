#include "radiusseq/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace radiusseq {

namespace {

std::uint64_t parse_uint(std::string_view token, std::string_view what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw input_error("invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

std::uint32_t parse_u32(std::string_view token, std::string_view what)
{
    auto v = parse_uint(token, what);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw input_error(std::string(what) + " out of range: " + std::string(token));
    }
    return static_cast<std::uint32_t>(v);
}

json big_to_json(const BigInt& v)
{
    if (v <= std::numeric_limits<std::uint64_t>::max()) {
        return v.convert_to<std::uint64_t>();
    }
    return v.str();
}

}  // namespace

SequenceFile parse_sequence_text(std::string_view text)
{
    SequenceFile file;
    std::optional<std::uint64_t> declared_m;
    std::vector<Symbol> symbols;
    bool seen_content = false;
    bool any_line = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        std::istringstream in{std::string(line)};
        std::string token;
        bool first_token = true;
        while (in >> token) {
            any_line = true;
            if (first_token && token[0] == '#') {
                break;
            }
            first_token = false;
            auto eq = token.find('=');
            if (eq != std::string::npos) {
                if (seen_content) {
                    throw input_error("header field '" + token + "' after sequence data");
                }
                auto key = std::string_view(token).substr(0, eq);
                auto value = std::string_view(token).substr(eq + 1);
                if (key == "n") {
                    file.n = parse_u32(value, "n");
                } else if (key == "k") {
                    file.k = parse_u32(value, "k");
                } else if (key == "t") {
                    file.t = parse_u32(value, "t");
                } else if (key == "m") {
                    declared_m = parse_uint(value, "m");
                } else {
                    throw input_error("unknown header field '" + std::string(key) + "'");
                }
                continue;
            }
            seen_content = true;
            symbols.push_back(parse_u32(token, "symbol"));
        }
        if (eol == text.size()) {
            break;
        }
    }
    if (!any_line) {
        throw input_error("empty sequence file");
    }
    if (declared_m && *declared_m != symbols.size()) {
        throw input_error("header declares m=" + std::to_string(*declared_m) + " symbols but file holds " +
                          std::to_string(symbols.size()) + " (truncated?)");
    }
    std::uint32_t n = 0;
    for (auto s : symbols) {
        n = std::max(n, s + 1);
    }
    if (file.n) {
        n = *file.n;
    }
    file.sequence = Sequence(std::move(symbols), n);
    check_symbols(file.sequence);
    return file;
}

SequenceFile read_sequence_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence_text(buf.str());
}

std::string format_sequence_text(const Sequence& seq, std::optional<std::uint32_t> k, std::optional<std::uint32_t> t)
{
    std::ostringstream out;
    out << "n=" << seq.n;
    if (k) {
        out << " k=" << *k;
    }
    if (t) {
        out << " t=" << *t;
    }
    out << " m=" << seq.size() << '\n';
    constexpr std::size_t kPerLine = 20;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << seq.symbols[i] << ((i + 1) % kPerLine == 0 || i + 1 == seq.size() ? '\n' : ' ');
    }
    return out.str();
}

void write_sequence_file(const std::string& path, const Sequence& seq, std::optional<std::uint32_t> k,
                         std::optional<std::uint32_t> t)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw input_error("cannot write '" + path + "'");
    }
    out << format_sequence_text(seq, k, t);
}

json to_json(const CoverageReport& report)
{
    json j;
    j["valid"] = report.valid;
    j["covered_count"] = report.covered_count;
    j["total"] = report.total;
    j["uncovered"] = report.uncovered;
    j["truncated_window"] = report.truncated_window;
    return j;
}

json to_json(const PackingReport& report)
{
    json j;
    j["valid"] = report.valid;
    j["witness"] = report.witness ? json(*report.witness) : json(nullptr);
    return j;
}

json to_json(const BoundsReport& report)
{
    json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["t"] = report.t;
    j["lower_bound"] = report.lower_bound;
    j["exact_known"] = report.exact_known ? json(*report.exact_known) : json(nullptr);
    j["exact_source"] = report.exact_source ? json(*report.exact_source) : json(nullptr);
    j["asymptotic_target"] = report.asymptotic_target.to_string();
    j["asymptotic_target_decimal"] = report.asymptotic_target.to_decimal(6);
    j["method"] = to_string(report.method);
    j["lemma_bound"] = report.lemma_bound;
    j["rate_bound"] = report.rate_bound;
    return j;
}

json to_json(const ConstructResult& result)
{
    json j;
    j["n"] = result.sequence.n;
    j["length"] = result.length;
    j["blocks_used"] = result.blocks_used;
    j["ratio"] = result.ratio;
    j["verified"] = result.verified;
    j["sequence"] = result.sequence.symbols;
    return j;
}

json to_json(const CacheTrace& trace, bool verbose)
{
    json j;
    j["n"] = trace.n;
    j["cache_size"] = trace.cache_size;
    j["loads"] = trace.loads;
    j["complete"] = trace.complete;
    j["coresident_pair_count"] = trace.coresident_pairs.size();
    j["max_new_pairs_per_load"] = new_pairs_per_load_audit(trace);
    if (verbose) {
        json pairs = json::array();
        for (const auto& [a, b] : trace.coresident_pairs) {
            pairs.push_back({a, b});
        }
        j["coresident_pairs"] = std::move(pairs);
        json events = json::array();
        for (const auto& ev : trace.events) {
            events.push_back({{"loaded", ev.loaded}, {"resident", ev.resident}});
        }
        j["events"] = std::move(events);
    }
    return j;
}

HypergraphSummary summarize_hypergraph(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t)
{
    HypergraphSummary s;
    s.params = make_params(n, ell, k, t);
    s.codegree = max_codegree(s.params);
    return s;
}

json to_json(const HypergraphSummary& summary)
{
    const auto& p = summary.params;
    json j;
    j["n"] = p.n;
    j["ell"] = p.ell;
    j["k"] = p.k;
    j["t"] = p.t;
    j["r"] = p.r;
    j["degree"] = big_to_json(p.degree);
    j["sampled_max_codegree"] = big_to_json(summary.codegree.max_codegree);
    json by = json::array();
    for (const auto& c : summary.codegree.by_intersection) {
        by.push_back(big_to_json(c));
    }
    j["codegree_by_intersection"] = std::move(by);
    j["ratio"] = summary.codegree.ratio;
    return j;
}

}  // namespace radiusseq
