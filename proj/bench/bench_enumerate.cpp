#include <benchmark/benchmark.h>

#include "scg/enumerate.hpp"
#include "scg/io.hpp"

using namespace scg;

namespace {

struct Input {
  PermGroup group;
  EnumerateOptions options;
  std::size_t rank;
};

// 0: A8 rank 3, 1: A9 rank 4, 2: PSL(2,11) rank 4, 3: 2^4:S6 rank 5
Input input(int which) {
  EnumerateOptions o;
  o.budget_seconds = 600;
  switch (which) {
    case 0: return {build_group(parse_group_spec("An:8")), o, 3};
    case 1: return {build_group(parse_group_spec("An:9")), o, 4};
    case 2: {
      auto spec = load_group_file(data_dir() + "/groups/psl2_11.json");
      o.normalizer = spec.normalizer;
      return {build_group(spec), o, 4};
    }
    default: {
      auto spec = load_group_file(data_dir() + "/groups/2e4_s6.json");
      o.normalizer = spec.normalizer;
      return {build_group(spec), o, 5};
    }
  }
}

void BM_serial(benchmark::State& state) {
  auto in = input(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = enumerate_serial(in.group, in.rank, in.options);
    benchmark::DoNotOptimize(r.representatives.size());
  }
}

void BM_parallel(benchmark::State& state) {
  auto in = input(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = enumerate_parallel(in.group, in.rank, in.options);
    benchmark::DoNotOptimize(r.representatives.size());
  }
}

}  // namespace

BENCHMARK(BM_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
