// Microbenchmarks for the hot paths: ball enumeration, misalignment
// membership, and the decoders.

#include <benchmark/benchmark.h>

#include "sumch/algebra.hpp"
#include "sumch/channel.hpp"
#include "sumch/constructions.hpp"
#include "sumch/misalign.hpp"

using namespace sumch;

namespace {

void BM_error_ball_2del(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CodeMatrix x = CodeMatrix::from_index(0x2b3cull & ((1ull << (2 * n)) - 1), 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(error_ball(x, 2, ErrorType::D));
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_error_ball_2del)->DenseRange(6, 12, 2)->Complexity();

void BM_in_P_plus(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::size_t k = n - 2;
    CodeMatrix x = CodeMatrix::from_index(0x9a57ull & ((1ull << (2 * n)) - 1), 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(in_P_plus(x, k));
}
BENCHMARK(BM_in_P_plus)->DenseRange(6, 14, 2);

void BM_svt_decode(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::size_t P = 6;
    BitWord x = BitWord::from_index(0x5b6dull & ((1ull << n) - 1), n);
    SVTParams p = SVTParams::make(n, P, syndrome(x, P), parity(x));
    BitWord y = x.with_deletion(n / 2);
    std::pair<std::size_t, std::size_t> window{n / 2 >= P ? n / 2 - P + 1 : 1, n / 2};
    for (auto _ : state) benchmark::DoNotOptimize(svt_decode(y, p, window));
}
BENCHMARK(BM_svt_decode)->DenseRange(8, 16, 4);

void BM_c1_decode(benchmark::State& state) {
    auto best = c1_search_coset(8, 3);
    auto codebook = c1_enumerate(best.params);
    std::vector<ReceivedMatrix> received;
    for (std::size_t i = 0; i < codebook.size(); i += 16) {
        SumMatrix xp = sum_matrix(codebook[i]);
        auto patterns = distinct_row_deletion_pairs(xp);
        received.push_back(apply_errors(xp, patterns[patterns.size() / 2]));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(c1_decode(received[i], best.params));
        i = (i + 1) % received.size();
    }
}
BENCHMARK(BM_c1_decode);

void BM_c1_coset_search(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(c1_search_coset(n, 3));
}
BENCHMARK(BM_c1_coset_search)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
