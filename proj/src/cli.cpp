#include "radiusseq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radiusseq/bench.hpp"
#include "radiusseq/io.hpp"

namespace radiusseq::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) {
            parts.push_back(cur);
        }
    }
    return parts;
}

std::uint64_t to_uint(const std::string& s)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw input_error("not a non-negative integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw input_error("not a non-negative integer: '" + s + "'");
    }
    return v;
}

// "20,40,60" or "start:stop:step" (inclusive); empty means no values.
std::vector<std::uint32_t> parse_range(const std::string& text)
{
    std::vector<std::uint32_t> out;
    if (text.find(':') != std::string::npos) {
        auto parts = split(text, ':');
        if (parts.size() < 2 || parts.size() > 3) {
            throw input_error("range must be start:stop[:step]");
        }
        auto start = to_uint(parts[0]);
        auto stop = to_uint(parts[1]);
        auto step = parts.size() == 3 ? to_uint(parts[2]) : 1;
        if (step == 0) {
            throw input_error("range step must be positive");
        }
        for (auto v = start; v <= stop; v += step) {
            out.push_back(static_cast<std::uint32_t>(v));
        }
        return out;
    }
    for (const auto& p : split(text, ',')) {
        out.push_back(static_cast<std::uint32_t>(to_uint(p)));
    }
    return out;
}

struct Options {
    std::uint32_t n = 0;
    std::uint32_t k = 1;
    std::uint32_t t = 2;
    std::string method = "greedy";
    std::uint32_t ell = 0;
    std::uint32_t pool = 64;
    double bite = 0.1;
    std::uint64_t seed = 1;
    std::uint64_t max_states = ConstructConfig{}.max_states;
    std::string seq_path;
    std::string out_path;
    std::string strategy = "fifo";
    std::string n_range;
    std::string methods = "greedy";
    std::string seeds;
    unsigned threads = 1;
    bool timing = false;
    bool verbose = false;
    bool packing = false;
    bool exact = false;
    bool bruteforce = false;
};

void print(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

int cmd_verify(const Options& o, CLI::App& sub, std::ostream& out)
{
    SequenceFile file = read_sequence_file(o.seq_path);
    std::uint32_t k = sub.count("--k") ? o.k : file.k.value_or(o.k);
    std::uint32_t t = sub.count("--t") ? o.t : file.t.value_or(o.t);
    Sequence seq = file.sequence;
    if (sub.count("--n")) {
        seq.n = o.n;
        check_symbols(seq);
    }
    if (o.packing) {
        auto report = verify_packing(seq, k, t);
        print(out, to_json(report));
        return report.valid ? ok : property_failure;
    }
    auto report = verify_radius(seq, RadiusSpec{seq.n, k, t});
    print(out, to_json(report));
    return report.valid ? ok : property_failure;
}

ConstructConfig config_from(const Options& o)
{
    ConstructConfig cfg;
    cfg.method = parse_method(o.method);
    cfg.ell = o.ell;
    cfg.pool_size = o.pool;
    cfg.bite = o.bite;
    cfg.seed = o.seed;
    cfg.max_states = o.max_states;
    return cfg;
}

json construct_json(const ConstructResult& res, const RadiusSpec& spec, const ConstructConfig& cfg)
{
    json j = to_json(res);
    j["k"] = spec.k;
    j["t"] = spec.t;
    j["method"] = to_string(cfg.method);
    j["seed"] = cfg.seed;
    if (cfg.method == Method::greedy || cfg.method == Method::nibble) {
        j["ell"] = cfg.ell == 0 ? default_block_length(spec.n, spec.k) : cfg.ell;
    }
    j["lower_bound"] = best_lower_bound(spec.n, spec.k, spec.t);
    return j;
}

void write_outputs(const Options& o, const Sequence& seq, const RadiusSpec& spec, const json& j)
{
    if (o.out_path.empty()) {
        return;
    }
    write_sequence_file(o.out_path, seq, spec.k, spec.t);
    std::ofstream sidecar(o.out_path + ".json");
    if (!sidecar) {
        throw input_error("cannot write '" + o.out_path + ".json'");
    }
    sidecar << j.dump(2) << '\n';
}

int cmd_construct(const Options& o, std::ostream& out)
{
    RadiusSpec spec{o.n, o.k, o.t};
    ConstructConfig cfg = config_from(o);
    auto res = construct(spec, cfg);
    json j = construct_json(res, spec, cfg);
    write_outputs(o, res.sequence, spec, j);
    print(out, j);
    return res.verified ? ok : property_failure;
}

int cmd_exact(const Options& o, std::ostream& out)
{
    RadiusSpec spec{o.n, o.k, o.t};
    ConstructConfig cfg = config_from(o);
    cfg.method = Method::exact;
    auto res = construct_exact(spec, cfg);
    json j = construct_json(res, spec, cfg);
    if (spec.n >= spec.t) {
        j["bounds"] = to_json(bounds_report(spec.n, spec.k, spec.t, res.length));
    }
    write_outputs(o, res.sequence, spec, j);
    print(out, j);
    return res.verified ? ok : property_failure;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    std::optional<std::uint64_t> exact;
    RadiusSpec spec{o.n, o.k, o.t};
    spec.validate();
    if (o.exact && exact_feasible(spec)) {
        ConstructConfig cfg;
        cfg.max_states = o.max_states;
        exact = construct_exact(spec, cfg).length;
    }
    print(out, to_json(bounds_report(o.n, o.k, o.t, exact)));
    return ok;
}

int cmd_hypergraph(const Options& o, std::ostream& out)
{
    std::uint32_t ell = o.ell == 0 ? default_block_length(o.n, o.k) : o.ell;
    auto summary = summarize_hypergraph(o.n, ell, o.k, o.t);
    json j = to_json(summary);
    if (o.bruteforce) {
        auto stats = enumerate_hypergraph(o.n, ell, o.k, o.t);
        json b;
        b["hyperedges"] = stats.hyperedges;
        b["min_edge_size"] = stats.min_edge_size;
        b["max_edge_size"] = stats.max_edge_size;
        b["min_degree"] = stats.degrees.empty() ? 0 : *std::min_element(stats.degrees.begin(), stats.degrees.end());
        b["max_degree"] = stats.degrees.empty() ? 0 : *std::max_element(stats.degrees.begin(), stats.degrees.end());
        b["max_codegree"] = stats.max_codegree;
        j["bruteforce"] = std::move(b);
    }
    print(out, j);
    return ok;
}

int cmd_cachesim(const Options& o, CLI::App& sub, std::ostream& out)
{
    CacheTrace trace;
    if (o.strategy == "batch") {
        trace = simulate_pinned_batch(o.n, o.k);
    } else if (o.strategy == "fifo") {
        if (o.seq_path.empty()) {
            throw input_error("fifo replay needs --seq");
        }
        SequenceFile file = read_sequence_file(o.seq_path);
        std::uint32_t k = sub.count("--k") ? o.k : file.k.value_or(o.k);
        Sequence seq = file.sequence;
        if (sub.count("--n")) {
            seq.n = o.n;
            check_symbols(seq);
        }
        trace = simulate_fifo(seq, k);
    } else {
        throw input_error("unknown strategy '" + o.strategy + "' (fifo or batch)");
    }
    print(out, to_json(trace, o.verbose));
    return trace.complete ? ok : property_failure;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err)
{
    BenchPlan plan;
    plan.ns = parse_range(o.n_range);
    plan.k = o.k;
    plan.t = o.t;
    plan.methods.clear();
    for (const auto& m : split(o.methods, ',')) {
        plan.methods.push_back(parse_method(m));
    }
    for (const auto& s : split(o.seeds, ',')) {
        plan.seeds.push_back(to_uint(s));
    }
    if (plan.seeds.empty()) {
        throw input_error("bench needs explicit --seeds");
    }
    plan.ell = o.ell;
    plan.pool_size = o.pool;
    plan.bite = o.bite;
    plan.threads = o.threads;
    plan.timing = o.timing;
    auto rows = run_bench(plan, [&](const std::string& msg) { err << "bench: row failed: " << msg << '\n'; });
    if (o.out_path.empty()) {
        write_bench_csv(out, rows);
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            throw input_error("cannot write '" + o.out_path + "'");
        }
        write_bench_csv(file, rows);
    }
    return ok;
}

int cmd_pack(const Options& o, std::ostream& out)
{
    RadiusSpec spec{o.n, o.k, o.t};
    Sequence seq = construct_packing_greedy(o.n, o.k, o.t, o.seed);
    auto check = verify_packing(seq, o.k, o.t);
    json j;
    j["n"] = o.n;
    j["k"] = o.k;
    j["t"] = o.t;
    j["seed"] = o.seed;
    j["length"] = seq.size();
    j["valid"] = check.valid;
    j["sequence"] = seq.symbols;
    write_outputs(o, seq, spec, j);
    print(out, j);
    return check.valid ? ok : property_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct, verify and bound k-radius sequences", "radiusseq"};
    app.require_subcommand(1);
    Options o;

    auto add_nkt = [&](CLI::App* sub, bool need_n) {
        auto* n = sub->add_option("--n", o.n, "alphabet size");
        if (need_n) {
            n->required();
        }
        sub->add_option("--k", o.k, "radius")->check(CLI::PositiveNumber);
        sub->add_option("--t", o.t, "subset size");
    };
    auto add_construct_opts = [&](CLI::App* sub) {
        sub->add_option("--ell", o.ell, "block length (0 = automatic)");
        sub->add_option("--pool", o.pool, "candidate blocks per greedy step");
        sub->add_option("--bite", o.bite, "nibble bite fraction in (0,1)");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--out", o.out_path, "write sequence text here plus a .json sidecar");
    };

    auto* verify = app.add_subcommand("verify", "check a sequence file");
    verify->add_option("seq,--seq", o.seq_path, "sequence file")->required();
    add_nkt(verify, false);
    verify->add_flag("--packing", o.packing, "check the packing property instead");

    auto* construct_cmd = app.add_subcommand("construct", "build a covering sequence");
    add_nkt(construct_cmd, true);
    construct_cmd->add_option("--method", o.method, "greedy | nibble | exact | packing-greedy");
    construct_cmd->add_option("--max-states", o.max_states, "exact search state cap");
    add_construct_opts(construct_cmd);

    auto* exact = app.add_subcommand("exact", "shortest sequence by exhaustive search");
    add_nkt(exact, true);
    exact->add_option("--max-states", o.max_states, "state cap");
    exact->add_option("--out", o.out_path, "write sequence text here plus a .json sidecar");

    auto* bounds = app.add_subcommand("bounds", "lower bounds and asymptotic target");
    add_nkt(bounds, true);
    bounds->add_flag("--exact", o.exact, "also run the exact search when the instance is small");
    bounds->add_option("--max-states", o.max_states, "state cap for --exact");

    auto* hyper = app.add_subcommand("hypergraph", "uniformity, degree and codegree of the block hypergraph");
    add_nkt(hyper, true);
    hyper->add_option("--ell", o.ell, "block length (0 = automatic)");
    hyper->add_flag("--bruteforce", o.bruteforce, "also enumerate every block");

    auto* cache = app.add_subcommand("cachesim", "cache replay (fifo) or pinned-batch simulation");
    cache->add_option("--seq", o.seq_path, "sequence file for fifo replay");
    add_nkt(cache, false);
    cache->add_option("--strategy", o.strategy, "fifo | batch");
    cache->add_flag("--verbose", o.verbose, "include co-resident pairs and the load log");

    auto* bench = app.add_subcommand("bench", "benchmark sweep as CSV");
    bench->add_option("--n", o.n_range, "alphabet sizes: a,b,c or start:stop[:step]")->required();
    bench->add_option("--k", o.k, "radius")->check(CLI::PositiveNumber);
    bench->add_option("--t", o.t, "subset size");
    bench->add_option("--methods", o.methods, "comma-separated methods");
    bench->add_option("--seeds", o.seeds, "comma-separated seeds")->required();
    bench->add_option("--ell", o.ell, "block length (0 = automatic)");
    bench->add_option("--pool", o.pool, "candidate blocks per greedy step");
    bench->add_option("--bite", o.bite, "nibble bite fraction");
    bench->add_option("--threads", o.threads, "worker threads");
    bench->add_flag("--timing", o.timing, "fill the wall_time_ms column");
    bench->add_option("--out", o.out_path, "CSV path (default stdout)");

    auto* pack = app.add_subcommand("pack", "greedy packing sequence");
    add_nkt(pack, true);
    pack->add_option("--seed", o.seed, "RNG seed");
    pack->add_option("--out", o.out_path, "write sequence text here plus a .json sidecar");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*verify) {
            return cmd_verify(o, *verify, out);
        }
        if (*construct_cmd) {
            return cmd_construct(o, out);
        }
        if (*exact) {
            return cmd_exact(o, out);
        }
        if (*bounds) {
            return cmd_bounds(o, out);
        }
        if (*hyper) {
            return cmd_hypergraph(o, out);
        }
        if (*cache) {
            return cmd_cachesim(o, *cache, out);
        }
        if (*bench) {
            return cmd_bench(o, out, err);
        }
        if (*pack) {
            return cmd_pack(o, out);
        }
    } catch (const size_error& e) {
        err << "error: " << e.what() << '\n';
        return resource_limit;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const parameter_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace radiusseq::cli
