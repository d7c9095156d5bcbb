#include <benchmark/benchmark.h>

#include <random>

#include "arrcover/covers.hpp"
#include "catalog.hpp"

using namespace arrcover;

namespace {

const Arrangement& catalog(const char* key) { return cli::find_catalog_entry(key)->arrangement; }

void BM_Lattice(benchmark::State& state, const char* key)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(intersection_lattice(catalog(key)));
}

void BM_OrlikSolomon(benchmark::State& state, const char* key)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(OrlikSolomon(catalog(key)));
}

void BM_AomotoComplex(benchmark::State& state, const char* key)
{
    const Arrangement& a = catalog(key);
    const OrlikSolomon os(a);
    const std::vector<long> ones(a.size(), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(os.aomoto_complex(ones));
}

void BM_CohomologyModN(benchmark::State& state, const char* key)
{
    const Arrangement& a = catalog(key);
    const AomotoComplex c = OrlikSolomon(a).aomoto_complex(std::vector<long>(a.size(), 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_modN(c, static_cast<unsigned long>(state.range(0))));
}

void BM_SmithNormalForm(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> dist(-9, 9);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = dist(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}

void BM_HessianLocalBetti(benchmark::State& state)
{
    const unsigned long k = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        // Fresh calculator each time so the memo does not hide the search.
        const CoverCalculator calc(catalog("hessian-decone"));
        benchmark::DoNotOptimize(calc.local_betti(k));
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_Lattice, selberg, "selberg");
BENCHMARK_CAPTURE(BM_Lattice, hessian, "hessian");
BENCHMARK_CAPTURE(BM_OrlikSolomon, hessian_decone, "hessian-decone");
BENCHMARK_CAPTURE(BM_OrlikSolomon, hessian, "hessian");
BENCHMARK_CAPTURE(BM_AomotoComplex, hessian_decone, "hessian-decone");
BENCHMARK_CAPTURE(BM_CohomologyModN, hessian_decone, "hessian-decone")->Arg(2)->Arg(4)->Arg(12);
BENCHMARK_CAPTURE(BM_CohomologyModN, ceva3, "ceva3")->Arg(3);
BENCHMARK(BM_SmithNormalForm)->Arg(5)->Arg(20)->Arg(40);
BENCHMARK(BM_HessianLocalBetti)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
