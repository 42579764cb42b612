#include <benchmark/benchmark.h>

#include <random>

#include "nht/circulant.hpp"
#include "nht/codec.hpp"
#include "nht/conditions.hpp"
#include "nht/search.hpp"

using namespace nht;

namespace {

CoeffVector random_vector(std::size_t h, std::uint64_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CoeffVector u(h);
    for (auto& x : u)
        x = rng() % m;
    return u;
}

void BM_check_solution(benchmark::State& state) {
    const auto h = static_cast<std::size_t>(state.range(0));
    const Modulus m{1'000'003};
    const auto u = random_vector(h, m.value(), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_solution(u, m));
}

void BM_forward(benchmark::State& state) {
    const ScrambleKey key(12, Modulus{103}, {78, 54, 5, 10, 20, 40});
    std::mt19937_64 rng(7);
    BlockVector block(12);
    for (auto& x : block)
        x = rng() % 103;
    for (auto _ : state)
        benchmark::DoNotOptimize(forward(key, block));
}

void BM_gram(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const NhtMatrix matrix(n, Modulus{103}, random_vector(n / 2, 103, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(gram(matrix));
}

void BM_enumerate(benchmark::State& state) {
    const auto mv = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const auto records = enumerate_solutions(SearchSpec{.h = 5, .m = Modulus{mv}});
        benchmark::DoNotOptimize(records.size());
    }
}

void BM_census(benchmark::State& state) {
    const auto mv = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(census(5, Modulus{mv}));
}

void BM_scramble(benchmark::State& state) {
    const ScrambleKey key(10, Modulus{7}, {2, 1, 2, 5, 3});
    const auto size = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(11);
    std::vector<std::uint8_t> bytes(size);
    for (auto& b : bytes)
        b = static_cast<std::uint8_t>(rng());
    for (auto _ : state)
        benchmark::DoNotOptimize(scramble_stream(key, bytes));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(size));
}

void BM_roundtrip(benchmark::State& state) {
    const ScrambleKey key(12, Modulus{103}, {78, 54, 5, 10, 20, 40});
    std::mt19937_64 rng(13);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(state.range(0)));
    for (auto& b : bytes)
        b = static_cast<std::uint8_t>(rng());
    for (auto _ : state) {
        const auto container = scramble_stream(key, bytes);
        benchmark::DoNotOptimize(descramble_stream(container, key));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}

} // namespace

BENCHMARK(BM_check_solution)->Arg(5)->Arg(6)->Arg(16)->Arg(64);
BENCHMARK(BM_forward);
BENCHMARK(BM_gram)->Arg(10)->Arg(12)->Arg(64);
BENCHMARK(BM_enumerate)->Arg(7)->Arg(13);
BENCHMARK(BM_census)->Arg(7)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scramble)->Arg(4096)->Arg(1 << 20);
BENCHMARK(BM_roundtrip)->Arg(1 << 16);

BENCHMARK_MAIN();
