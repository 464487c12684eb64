#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "radiusseq/bounds.hpp"
#include "radiusseq/cachesim.hpp"
#include "radiusseq/construct.hpp"
#include "radiusseq/core.hpp"
#include "radiusseq/hypergraph.hpp"

namespace radiusseq {

// Sequence text format:
//
//   n=8 k=3 t=2 m=16          (optional header; every key optional)
//   0 1 2 3 4 5 6 7
//   0 1 2 4 5 6 3 7
//
// Symbols are whitespace-separated decimal indices. Lines starting with '#'
// are ignored. When `m` is present the symbol count must match it, which
// catches truncated files.

struct SequenceFile {
    Sequence sequence;
    std::optional<std::uint32_t> n;
    std::optional<std::uint32_t> k;
    std::optional<std::uint32_t> t;
};

/// Throws input_error on malformed input. Without an `n=` header the
/// alphabet size is taken as max symbol + 1.
SequenceFile parse_sequence_text(std::string_view text);
SequenceFile read_sequence_file(const std::string& path);

std::string format_sequence_text(const Sequence& seq, std::optional<std::uint32_t> k = std::nullopt,
                                 std::optional<std::uint32_t> t = std::nullopt);
void write_sequence_file(const std::string& path, const Sequence& seq, std::optional<std::uint32_t> k = std::nullopt,
                         std::optional<std::uint32_t> t = std::nullopt);

using json = nlohmann::ordered_json;

json to_json(const CoverageReport& report);
json to_json(const PackingReport& report);
json to_json(const BoundsReport& report);
json to_json(const ConstructResult& result);
/// Summary only; `verbose` adds the co-resident pairs and the load log.
json to_json(const CacheTrace& trace, bool verbose = false);

struct HypergraphSummary {
    HypergraphParams params;
    CodegreeSummary codegree;
};

HypergraphSummary summarize_hypergraph(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t);
json to_json(const HypergraphSummary& summary);

}  // namespace radiusseq
