#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "negacode/odd_codes.hpp"
#include "negacode/oracle.hpp"
#include "negacode/pow2_codes.hpp"

using namespace negacode;

namespace {

std::vector<std::vector<int>> random_rows(int rows, int width, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(0, 3);
  std::vector<std::vector<int>> out(static_cast<size_t>(rows),
                                    std::vector<int>(static_cast<size_t>(width)));
  for (auto& r : out)
    for (auto& c : r) c = coef(rng);
  return out;
}

}  // namespace

static void BM_howell_form(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  const auto rows = random_rows(width, width, 12u);
  for (auto _ : state) {
    auto h = howell_form(rows, width);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_howell_form)->Arg(8)->Arg(16)->Arg(24);

static void BM_ideal_closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Residue g = res_add(xp1_pow(n, 2), res_mul_u(xp1_pow(n, 1)));
  for (auto _ : state) {
    IdealSpan s = ideal_closure({g});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ideal_closure)->Arg(4)->Arg(8);

static void BM_annihilator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IdealSpan s = ideal_closure({res_add(xp1_pow(n, 2), res_mul_u(xp1_pow(n, 1)))});
  for (auto _ : state) {
    IdealSpan a = ann_oracle(s);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_annihilator)->Arg(4)->Arg(8);

static void BM_enumerate_oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ideals = enumerate_ideals_oracle(n);
    benchmark::DoNotOptimize(ideals);
  }
}
BENCHMARK(BM_enumerate_oracle)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_enumerate_descriptors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto descs = enumerate_descriptors(n);
    benchmark::DoNotOptimize(descs);
  }
}
BENCHMARK(BM_enumerate_descriptors)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
