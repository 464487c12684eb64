#include "radiusseq/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "radiusseq/bounds.hpp"

namespace radiusseq {

unsigned effective_threads(unsigned requested)
{
    unsigned threads = std::max(1u, requested);
    if (const char* env = std::getenv("RADIUSSEQ_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) {
            threads = std::min(threads, static_cast<unsigned>(cap));
        }
    }
    return threads;
}

std::vector<BenchRow> run_bench(const BenchPlan& plan, const std::function<void(const std::string&)>& on_error)
{
    struct Job {
        std::uint32_t n;
        Method method;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (auto n : plan.ns) {
        for (auto m : plan.methods) {
            for (auto seed : plan.seeds) {
                jobs.push_back({n, m, seed});
            }
        }
    }

    std::vector<std::optional<BenchRow>> slots(jobs.size());
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const auto& job = jobs[i];
            try {
                RadiusSpec spec{job.n, plan.k, plan.t};
                ConstructConfig cfg;
                cfg.method = job.method;
                cfg.ell = plan.ell;
                cfg.pool_size = plan.pool_size;
                cfg.bite = plan.bite;
                cfg.seed = job.seed;
                auto start = std::chrono::steady_clock::now();
                auto res = construct(spec, cfg);
                auto stop = std::chrono::steady_clock::now();

                BenchRow row;
                row.n = job.n;
                row.k = plan.k;
                row.t = plan.t;
                row.method = job.method;
                row.length = res.length;
                row.lower_bound = best_lower_bound(job.n, plan.k, plan.t);
                Rational target = asymptotic_target(job.n, plan.k, plan.t);
                row.target = target.to_decimal(6);
                Rational ratio(BigInt(res.length) * target.den, target.num);
                row.ratio = ratio.to_decimal(6);
                row.ratio_value = ratio.to_double();
                row.seed = job.seed;
                if (plan.timing) {
                    row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
                }
                slots[i] = std::move(row);
            } catch (const std::exception& e) {
                if (on_error) {
                    std::lock_guard lock(error_mutex);
                    on_error("n=" + std::to_string(job.n) + " method=" + to_string(job.method) +
                             " seed=" + std::to_string(job.seed) + ": " + e.what());
                }
            }
        }
    };

    const unsigned threads = std::min<unsigned>(effective_threads(plan.threads),
                                                std::max<std::size_t>(1, jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }

    std::vector<BenchRow> rows;
    for (auto& s : slots) {
        if (s) {
            rows.push_back(std::move(*s));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.n, a.method, a.seed) < std::tie(b.n, b.method, b.seed);
    });
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << kBenchCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.t << ',' << to_string(r.method) << ',' << r.length << ','
            << r.lower_bound << ',' << r.target << ',' << r.ratio << ',' << r.seed << ',';
        if (r.wall_time_ms) {
            out << std::fixed << std::setprecision(3) << *r.wall_time_ms << std::defaultfloat;
        }
        out << '\n';
    }
}

}  // namespace radiusseq
