#include <benchmark/benchmark.h>

#include <random>

#include "evoalg/families.hpp"
#include "evoalg/hom_search.hpp"
#include "evoalg/iso_engine.hpp"
#include "evoalg/maps.hpp"
#include "evoalg/tree_example.hpp"
#include "support/random_graphs.hpp"

using namespace evoalg;

namespace {

Graph fixed_graph(int n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919);
    return testsupport::random_connected_graph(n, 0.4, rng);
}

void bm_det_int(benchmark::State& state) {
    const IntMatrix a = fixed_graph(static_cast<int>(state.range(0))).adjacency_matrix();
    for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(bm_det_int)->Arg(5)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void bm_det_rational(benchmark::State& state) {
    const RationalMatrix c =
        from_random_walk(fixed_graph(static_cast<int>(state.range(0)))).structure();
    for (auto _ : state) benchmark::DoNotOptimize(det(c));
}
BENCHMARK(bm_det_rational)->Arg(5)->Arg(8)->Arg(12)->Arg(16);

void bm_classify(benchmark::State& state) {
    const Graph g = fixed_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(bm_classify)->Arg(8)->Arg(16)->Arg(32);

void bm_graph6_parse(benchmark::State& state) {
    const std::string line = encode_graph6(fixed_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(line));
}
BENCHMARK(bm_graph6_parse)->Arg(8)->Arg(16)->Arg(32);

void bm_graph_automorphisms(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graph_automorphisms(g));
}
BENCHMARK(bm_graph_automorphisms)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void bm_condpi_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = cycle_graph(n);
    std::vector<int> shift(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<size_t>(i)] = (i + 1) % n;
    for (auto _ : state) benchmark::DoNotOptimize(condpi_solve(g, shift));
}
BENCHMARK(bm_condpi_solve)->Arg(5)->Arg(9)->Arg(11);

void bm_decide_nonsingular(benchmark::State& state) {
    const Graph g = friendship_graph(static_cast<int>(state.range(0)));
    DecideOptions opts;
    opts.gather_evidence = false;
    for (auto _ : state) benchmark::DoNotOptimize(decide_iso(g, opts));
}
BENCHMARK(bm_decide_nonsingular)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void bm_strong_isotopy_check(benchmark::State& state) {
    const Graph g = fixed_graph(static_cast<int>(state.range(0)));
    const auto [f, h] = strong_isotopy_witness(g);
    for (auto _ : state) benchmark::DoNotOptimize(is_isotopism(f, f, h));
}
BENCHMARK(bm_strong_isotopy_check)->Arg(5)->Arg(8)->Arg(10);

void bm_numeric_restart(benchmark::State& state) {
    const Graph g = fixed_graph(static_cast<int>(state.range(0)));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_hom_search(g, 1, 1e-9, seed++));
    }
}
BENCHMARK(bm_numeric_restart)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void bm_tree_example(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_tree_example());
}
BENCHMARK(bm_tree_example);

void bm_aut_group(benchmark::State& state) {
    const EvolutionAlgebra a = from_graph(cycle_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(aut_group(a));
}
BENCHMARK(bm_aut_group)->Arg(5)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
