#include <benchmark/benchmark.h>

#include "hdradix/radix.hpp"
#include "hdradix/text.hpp"

using namespace hdradix;

static void BM_encode_hyper(benchmark::State& state) {
  Base base = Base::hyper_nh({-2, -2});
  HInt v{123456789, -987654321};
  for (auto _ : state) {
    auto digits = encode(base, v);
    benchmark::DoNotOptimize(digits);
  }
}
BENCHMARK(BM_encode_hyper);

static void BM_encode_dual(benchmark::State& state) {
  Base base = Base::dual(-2, 1);
  DGaussInt v{123456789, -987654321};
  for (auto _ : state) {
    auto digits = encode(base, v);
    benchmark::DoNotOptimize(digits);
  }
}
BENCHMARK(BM_encode_dual);

static void BM_decode_hyper(benchmark::State& state) {
  Base base = Base::hyper_nh({-2, -2});
  DigitString digits = encode(base, HInt{123456789, -987654321});
  for (auto _ : state) {
    auto v = decode_lattice(digits);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_decode_hyper);

static void BM_expand(benchmark::State& state) {
  Base base = Base::hyper_nh({-2, -2});
  HNum z{make_rat(1, 3), make_rat(-2, 7)};
  for (auto _ : state) {
    auto exp = expand_point(z, base, int(state.range(0)));
    benchmark::DoNotOptimize(exp);
  }
}
BENCHMARK(BM_expand)->Arg(4)->Arg(12);

static void BM_fd_sample(benchmark::State& state) {
  Base base = Base::hyper_nh({-2, -2});
  SampleSpec spec;
  spec.workers = unsigned(state.range(1));
  for (auto _ : state) {
    auto cloud = fd_sample(base, int(state.range(0)), spec);
    benchmark::DoNotOptimize(cloud);
  }
}
BENCHMARK(BM_fd_sample)->Args({6, 1})->Args({8, 1})->Args({8, 4});

static void BM_h_divmod(benchmark::State& state) {
  HInt q{-2, -3}, v{123456789, -987654321};
  for (auto _ : state) {
    auto dm = h_divmod(v, q);
    benchmark::DoNotOptimize(dm);
  }
}
BENCHMARK(BM_h_divmod);

static void BM_norm_dual(benchmark::State& state) {
  DNum z{make_rat(355, 113), make_rat(-52, 17)};
  for (auto _ : state) benchmark::DoNotOptimize(norm_A(z));
}
BENCHMARK(BM_norm_dual);

BENCHMARK_MAIN();
