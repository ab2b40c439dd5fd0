#include <benchmark/benchmark.h>

#include "girreg/graph.hpp"
#include "girreg/group.hpp"
#include "girreg/search_kernel.hpp"

namespace {

using namespace girreg;

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, edges);
}

Graph two_triangles()
{
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Negative instances explore the whole pruned tree, which is the costly case.
SearchProblem problem_for(int which)
{
    switch (which) {
    case 0:
        return make_search_problem(cycle_graph(6), make_group({6}));
    case 1:
        return make_search_problem(two_triangles(), make_group({6}));
    default:
        return make_search_problem(cycle_graph(10), make_group({10}));
    }
}

void BM_SearchSerial(benchmark::State& state)
{
    const auto problem = problem_for(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_serial(problem));
    }
}

void BM_SearchParallel(benchmark::State& state)
{
    const auto problem = problem_for(static_cast<int>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_parallel(problem, jobs));
    }
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)
    ->ArgsProduct({{0, 1, 2}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
