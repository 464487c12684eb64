#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radiusseq/bounds.hpp"
#include "radiusseq/cachesim.hpp"
#include "radiusseq/construct.hpp"
#include "radiusseq/core.hpp"
#include "radiusseq/hypergraph.hpp"
#include "radiusseq/io.hpp"

namespace py = pybind11;
using namespace radiusseq;

namespace {

py::int_ to_py(const BigInt& v)
{
    return py::int_(py::module_::import("builtins").attr("int")(v.str()));
}

Sequence make_sequence(std::vector<Symbol> symbols, std::optional<std::uint32_t> n)
{
    std::uint32_t alphabet = 0;
    for (auto s : symbols) {
        alphabet = std::max(alphabet, s + 1);
    }
    return Sequence(std::move(symbols), n.value_or(alphabet));
}

}  // namespace

PYBIND11_MODULE(_radiusseq, m)
{
    m.doc() = "Construction, verification and bounds for k-radius sequences";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<size_error>(m, "SizeError", PyExc_RuntimeError);

    py::class_<CoverageReport>(m, "CoverageReport")
        .def_readonly("valid", &CoverageReport::valid)
        .def_readonly("covered_count", &CoverageReport::covered_count)
        .def_readonly("total", &CoverageReport::total)
        .def_readonly("uncovered", &CoverageReport::uncovered)
        .def_readonly("truncated_window", &CoverageReport::truncated_window)
        .def("__bool__", [](const CoverageReport& r) { return r.valid; });

    py::class_<PackingReport>(m, "PackingReport")
        .def_readonly("valid", &PackingReport::valid)
        .def_readonly("witness", &PackingReport::witness);

    py::class_<ConstructResult>(m, "ConstructResult")
        .def_property_readonly("sequence", [](const ConstructResult& r) { return r.sequence.symbols; })
        .def_readonly("blocks_used", &ConstructResult::blocks_used)
        .def_readonly("length", &ConstructResult::length)
        .def_readonly("ratio", &ConstructResult::ratio)
        .def_readonly("verified", &ConstructResult::verified);

    py::class_<CacheTrace>(m, "CacheTrace")
        .def_readonly("cache_size", &CacheTrace::cache_size)
        .def_readonly("loads", &CacheTrace::loads)
        .def_readonly("coresident_pairs", &CacheTrace::coresident_pairs)
        .def_readonly("complete", &CacheTrace::complete)
        .def("max_new_pairs_per_load", &new_pairs_per_load_audit);

    m.def(
        "enumerate_covered_subsets",
        [](std::vector<Symbol> seq, std::uint32_t k, std::uint32_t t, std::optional<std::uint32_t> n) {
            return enumerate_covered_subsets(make_sequence(std::move(seq), n), k, t);
        },
        py::arg("seq"), py::arg("k"), py::arg("t") = 2, py::arg("n") = py::none());

    m.def(
        "verify_radius",
        [](std::vector<Symbol> seq, std::uint32_t n, std::uint32_t k, std::uint32_t t) {
            return verify_radius(Sequence(std::move(seq), n), RadiusSpec{n, k, t});
        },
        py::arg("seq"), py::arg("n"), py::arg("k"), py::arg("t") = 2);

    m.def(
        "verify_packing",
        [](std::vector<Symbol> seq, std::uint32_t k, std::uint32_t t) {
            return verify_packing(make_sequence(std::move(seq), std::nullopt), k, t);
        },
        py::arg("seq"), py::arg("k"), py::arg("t") = 2);

    m.def("lower_bound_pairs", &lower_bound_pairs, py::arg("n"), py::arg("k"));
    m.def("lower_bound_subsets", &lower_bound_subsets, py::arg("n"), py::arg("k"), py::arg("t"));
    m.def("ghosh_f1", &ghosh_f1, py::arg("n"));
    m.def(
        "asymptotic_target",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t t) {
            auto r = asymptotic_target(n, k, t);
            return py::make_tuple(to_py(r.num), to_py(r.den));
        },
        py::arg("n"), py::arg("k"), py::arg("t") = 2, "Target as a (numerator, denominator) tuple.");
    m.def(
        "bounds",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t t) {
            return to_json(bounds_report(n, k, t)).dump();
        },
        py::arg("n"), py::arg("k"), py::arg("t") = 2, "Bounds report as a JSON string.");

    m.def("uniformity_r", &uniformity_r, py::arg("ell"), py::arg("k"), py::arg("t") = 2);
    m.def(
        "vertex_degree",
        [](std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t) {
            return to_py(make_params(n, ell, k, t).degree);
        },
        py::arg("n"), py::arg("ell"), py::arg("k"), py::arg("t") = 2);
    m.def("codegree_bruteforce", &codegree_bruteforce, py::arg("n"), py::arg("ell"), py::arg("k"), py::arg("t"),
          py::arg("u"), py::arg("v"));
    m.def(
        "hypergraph_summary",
        [](std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t) {
            return to_json(summarize_hypergraph(n, ell, k, t)).dump();
        },
        py::arg("n"), py::arg("ell"), py::arg("k"), py::arg("t") = 2, "Hypergraph summary as a JSON string.");

    m.def(
        "construct",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t t, const std::string& method, std::uint32_t ell,
           std::uint32_t pool, double bite, std::uint64_t seed, std::uint64_t max_states) {
            ConstructConfig cfg;
            cfg.method = parse_method(method);
            cfg.ell = ell;
            cfg.pool_size = pool;
            cfg.bite = bite;
            cfg.seed = seed;
            cfg.max_states = max_states;
            py::gil_scoped_release release;
            return construct(RadiusSpec{n, k, t}, cfg);
        },
        py::arg("n"), py::arg("k"), py::arg("t") = 2, py::arg("method") = "greedy", py::arg("ell") = 0,
        py::arg("pool") = 64, py::arg("bite") = 0.1, py::arg("seed") = 1,
        py::arg("max_states") = ConstructConfig{}.max_states);

    m.def(
        "construct_packing_greedy",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t t, std::uint64_t seed) {
            return construct_packing_greedy(n, k, t, seed).symbols;
        },
        py::arg("n"), py::arg("k"), py::arg("t") = 2, py::arg("seed") = 1);

    m.def(
        "simulate_fifo",
        [](std::vector<Symbol> seq, std::uint32_t k, std::optional<std::uint32_t> n) {
            return simulate_fifo(make_sequence(std::move(seq), n), k);
        },
        py::arg("seq"), py::arg("k"), py::arg("n") = py::none());
    m.def("simulate_pinned_batch", &simulate_pinned_batch, py::arg("n"), py::arg("k"));
}
