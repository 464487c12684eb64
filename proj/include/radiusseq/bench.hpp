#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radiusseq/construct.hpp"

namespace radiusseq {

struct BenchPlan {
    std::vector<std::uint32_t> ns;
    std::uint32_t k = 2;
    std::uint32_t t = 2;
    std::vector<Method> methods{Method::greedy};
    std::vector<std::uint64_t> seeds;
    std::uint32_t ell = 0;
    std::uint32_t pool_size = 64;
    double bite = 0.1;
    /// Worker threads; capped by RADIUSSEQ_THREADS when set.
    unsigned threads = 1;
    /// Wall time is left blank unless requested so the CSV stays reproducible.
    bool timing = false;
};

struct BenchRow {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t t = 0;
    Method method = Method::greedy;
    std::uint64_t length = 0;
    std::uint64_t lower_bound = 0;
    std::string target;  // decimal
    std::string ratio;   // length / target, decimal
    double ratio_value = 0.0;
    std::uint64_t seed = 0;
    std::optional<double> wall_time_ms;
};

inline constexpr const char* kBenchCsvHeader = "n,k,t,method,length,lower_bound,target,ratio,seed,wall_time_ms";

/// Thread count after applying the RADIUSSEQ_THREADS cap.
unsigned effective_threads(unsigned requested);

/// One row per (n, method, seed), sorted in that order. A failing
/// construction drops its row and is reported through `on_error`.
std::vector<BenchRow> run_bench(const BenchPlan& plan,
                                const std::function<void(const std::string&)>& on_error = {});

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace radiusseq
