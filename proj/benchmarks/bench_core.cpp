#include "emb7/abelian.hpp"
#include "emb7/classify.hpp"
#include "emb7/pairing.hpp"
#include "emb7/s1s3.hpp"
#include "emb7/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace emb7;

namespace {

IntMatrix random_matrix(std::size_t n, int bound, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

} // namespace

static void BM_SmithNormalForm(benchmark::State& state)
{
    IntMatrix m = random_matrix(state.range(0), 100, 42);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_KernelMod(benchmark::State& state)
{
    IntMatrix m = random_matrix(4, 50, 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_mod(m, 24));
}
BENCHMARK(BM_KernelMod);

static void BM_CokernelEnumeration(benchmark::State& state)
{
    IntMatrix m = random_matrix(2, 3, 9);
    for (auto _ : state) {
        FgAbelianGroup g = cokernel_mod(m, 12);
        benchmark::DoNotOptimize(g.all_elements());
    }
}
BENCHMARK(BM_CokernelEnumeration);

static void BM_UnimzdBrute(benchmark::State& state)
{
    IntMatrix m = random_matrix(3, 3, 11);
    // symmetrize so the formula-side precondition holds as well
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) m.at(j, i) = m.at(i, j);
    GroupElement c = cokernel_mod(m, 24).element(IntVec{1, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(unimzd_brute(3, m, 24, c));
}
BENCHMARK(BM_UnimzdBrute);

static void BM_ClassifyOrbit(benchmark::State& state)
{
    IntMatrix form(1, 1);
    form.at(0, 0) = 0;
    ClassCore core = make_core(0, form);
    GroupElement b = core.cokernel().element(IntVec{3});
    for (auto _ : state) {
        ThetaImage theta = theta_image(core, b);
        benchmark::DoNotOptimize(orbit_size(core, b, theta));
    }
}
BENCHMARK(BM_ClassifyOrbit);

static void BM_S1s3Grid(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(orbit_table(-6, 6, -12, 12));
}
BENCHMARK(BM_S1s3Grid);

BENCHMARK_MAIN();
