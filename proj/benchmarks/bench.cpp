#include <random>

#include <benchmark/benchmark.h>

#include "hitprob/solver.hpp"
#include "hitprob/steenrod.hpp"

using namespace hitprob;

static void BM_SqMonomial(benchmark::State& state) {
    Monomial m({7, 11, 6, 3, 5});
    uint32_t j = static_cast<uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sq_monomial(j, m));
}
BENCHMARK(BM_SqMonomial)->Arg(1)->Arg(4)->Arg(8);

static void BM_EchelonInsert(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<BitVector> rows;
    for (size_t i = 0; i < n; ++i) {
        BitVector v(n);
        for (auto& w : v.words()) w = rng();
        rows.push_back(std::move(v));
    }
    for (auto _ : state) {
        EchelonSpace es(n);
        for (const auto& r : rows) es.insert(r);
        benchmark::DoNotOptimize(es.rank());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EchelonInsert)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

static void BM_HitSpaceSmall(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    uint64_t d = static_cast<uint64_t>(state.range(1));
    auto table = get_table(k, d, MonomialOrder::WeightLex);
    for (auto _ : state) {
        EchelonSpace es(table->size());
        HitGeneratorStream(k, d).for_each(
            [&](uint32_t, const Monomial&, const Polynomial& img) {
                if (!img.is_zero()) es.insert(to_bits(img, *table));
            });
        benchmark::DoNotOptimize(es.rank());
    }
}
BENCHMARK(BM_HitSpaceSmall)->Args({3, 10})->Args({4, 12})->Args({4, 20});

static void BM_ReduceClass(benchmark::State& state) {
    QuotientBasis qb = admissible_basis(4, 14);
    std::mt19937 rng(5);
    Polynomial f(4);
    for (const Monomial& m : enumerate_monomials(4, 14))
        if (rng() & 1) f.toggle(m);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_class(f, qb).bits.popcount());
}
BENCHMARK(BM_ReduceClass);

BENCHMARK_MAIN();
