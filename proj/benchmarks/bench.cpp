#include <benchmark/benchmark.h>

#include "cqwl/cfi.hpp"
#include "cqwl/query.hpp"
#include "cqwl/width.hpp"
#include "cqwl/witness.hpp"
#include "cqwl/wl.hpp"

namespace {

void bm_count_hom_path_into_clique(benchmark::State& state) {
    cqwl::Graph p = cqwl::Graph::path(static_cast<int>(state.range(0)));
    cqwl::Graph g = cqwl::Graph::complete(8);
    for (auto _ : state) benchmark::DoNotOptimize(cqwl::count_hom(p, g));
}
BENCHMARK(bm_count_hom_path_into_clique)->Arg(6)->Arg(8);

void bm_count_answers_star(benchmark::State& state) {
    cqwl::ConjunctiveQuery q = cqwl::star_query(static_cast<int>(state.range(0)));
    cqwl::Graph g = cqwl::Graph::cycle(12);
    for (auto _ : state) benchmark::DoNotOptimize(cqwl::count_answers(q, g));
}
BENCHMARK(bm_count_answers_star)->Arg(2)->Arg(3);

void bm_treewidth(benchmark::State& state) {
    cqwl::Graph g = cqwl::Graph::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cqwl::treewidth(g).first);
}
BENCHMARK(bm_treewidth)->Arg(10)->Arg(14);

void bm_wl_refine(benchmark::State& state) {
    cqwl::Graph g = cqwl::cfi(cqwl::Graph::complete(4), {}).result;
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cqwl::wl_refine(g, k).rounds);
}
BENCHMARK(bm_wl_refine)->Arg(1)->Arg(2);

void bm_cfi_build(benchmark::State& state) {
    cqwl::Graph g = cqwl::Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cqwl::cfi(g, {}).result.num_vertices());
}
BENCHMARK(bm_cfi_build)->Arg(5)->Arg(7);

void bm_witness_two_star(benchmark::State& state) {
    cqwl::ConjunctiveQuery q = cqwl::star_query(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(cqwl::build_witness(q).valid);
}
BENCHMARK(bm_witness_two_star)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
