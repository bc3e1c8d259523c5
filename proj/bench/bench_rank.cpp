// Serial dense elimination against the component-parallel sparse kernel.

#include "superhom/homology.hpp"
#include "superhom/linalg_serial.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace superhom;

namespace {

// Block-diagonal sparse matrix with `blocks` random 0/+-1 blocks of size b.
SparseMatrix random_blocks(int blocks, int b, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-1, 1);
    SparseMatrix m(blocks * b, blocks * b);
    for (int k = 0; k < blocks; ++k)
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j)
                if (int v = entry(rng)) m.set(k * b + i, k * b + j, v);
    return m;
}

const SparseMatrix& resolution_differential(int p) {
    static std::map<int, SparseMatrix> cache;
    auto it = cache.find(p);
    if (it == cache.end()) {
        auto res = relative_resolution(trivial_module(LieSuperalgebra::parse("gl(2|1)")), p);
        it = cache.emplace(p, res.complex.differential(p)).first;
    }
    return it->second;
}

void BM_RankSerialBlocks(benchmark::State& st) {
    auto m = random_blocks(static_cast<int>(st.range(0)), 12, 7);
    for (auto _ : st) benchmark::DoNotOptimize(serial::rank(m));
}

void BM_RankParallelBlocks(benchmark::State& st) {
    auto m = random_blocks(static_cast<int>(st.range(0)), 12, 7);
    for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}

void BM_RankSerialResolution(benchmark::State& st) {
    const auto& m = resolution_differential(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::rank(m));
    st.counters["rows"] = m.rows();
}

void BM_RankParallelResolution(benchmark::State& st) {
    const auto& m = resolution_differential(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rank(m));
    st.counters["rows"] = m.rows();
}

}  // namespace

BENCHMARK(BM_RankSerialBlocks)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallelBlocks)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerialResolution)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallelResolution)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
