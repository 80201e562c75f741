// Serial reference against the OpenMP kernels for the two parallel workloads:
// mutation-class frontier expansion and density sampling.
#include "clusterforge/catalog.hpp"
#include "clusterforge/gfan.hpp"
#include "clusterforge/quiver.hpp"

#include <benchmark/benchmark.h>

namespace {

cf::Exec exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? cf::Exec::Serial : cf::Exec::Parallel;
}

void BM_MutationClass(benchmark::State& state, cf::Quiver q) {
    const cf::Exec exec = exec_of(state);
    std::size_t size = 0;
    for (auto _ : state) {
        const cf::MutationClassResult r = cf::mutation_class(q, 100000, 3, exec);
        size = r.representatives.size();
        benchmark::DoNotOptimize(size);
    }
    state.counters["class_size"] = static_cast<double>(size);
    state.SetLabel(exec == cf::Exec::Serial ? "serial" : "parallel");
}

void BM_Density(benchmark::State& state, cf::Quiver q) {
    const cf::Exec exec = exec_of(state);
    double d = 0;
    for (auto _ : state) {
        d = cf::density_estimate(q, 400, 20, 7, exec);
        benchmark::DoNotOptimize(d);
    }
    state.counters["density"] = d;
    state.SetLabel(exec == cf::Exec::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK_CAPTURE(BM_MutationClass, E6_affine, cf::catalog::affine_e(6))
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_MutationClass, D5, cf::catalog::type_d(5))
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Density, K3, cf::catalog::kronecker(3))
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Density, D4, cf::catalog::type_d(4))
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
