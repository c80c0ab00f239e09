#include <benchmark/benchmark.h>

#include "ruled/generators.hpp"
#include "ruled/locus.hpp"
#include "ruled/poncelet.hpp"

using namespace ruled;

namespace {

template <class F>
SurfaceMap<typename F::Element> sample(const F& field, int d) {
    return gen_type_a(field, d, d / 2, 1).map;
}

void bm_psi_biform_q(benchmark::State& state) {
    QField f;
    auto s = sample(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_biform(s));
}
BENCHMARK(bm_psi_biform_q)->Arg(4)->Arg(6)->Arg(8);

void bm_psi_biform_fp(benchmark::State& state) {
    FpField f(10007);
    auto s = sample(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_biform(s));
}
BENCHMARK(bm_psi_biform_fp)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void bm_psi_determinantal_q(benchmark::State& state) {
    QField f;
    auto s = sample(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_determinantal(s));
}
BENCHMARK(bm_psi_determinantal_q)->Arg(4)->Arg(6)->Arg(8);

void bm_psi_determinantal_fp(benchmark::State& state) {
    FpField f(10007);
    auto s = sample(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(psi_determinantal(s));
}
BENCHMARK(bm_psi_determinantal_fp)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void bm_phi_rank(benchmark::State& state) {
    QField f;
    auto s = sample(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(phi_rank(s));
}
BENCHMARK(bm_phi_rank)->Arg(4)->Arg(8);

void bm_splitting_type(benchmark::State& state) {
    QField f;
    auto s = sample(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(splitting_type(s));
}
BENCHMARK(bm_splitting_type)->Arg(4)->Arg(6)->Arg(8);

void bm_triangle_count(benchmark::State& state) {
    QField f;
    auto psi = psi_biform(sample(f, 5));
    for (auto _ : state) benchmark::DoNotOptimize(count_triangles_exact(psi));
}
BENCHMARK(bm_triangle_count);

void bm_generator(benchmark::State& state) {
    FpField f(10007);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gen_type_a(f, 6, 3, seed++).map.degree());
}
BENCHMARK(bm_generator);

}  // namespace

BENCHMARK_MAIN();
